#include "tww/extraction.hpp"
#include "tww/generators.hpp"
#include "tww/io.hpp"
#include "tww/winwin.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

using json = nlohmann::json;
using namespace tww;

namespace {

enum Exit { kOk = 0, kNegative = 1, kError = 2 };

struct Globals {
  bool json_out = false;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out;
};

Globals G;

void emit(const std::string& text) {
  if (G.out.empty())
    std::cout << text;
  else
    write_file(G.out, text);
}

struct Loaded {
  std::string kind;
  ClassInstance inst;
  std::optional<IntervalModel> intervals;
  std::optional<Terrain> terrain;
  std::optional<SimplePolygon> polygon;
  std::optional<SegmentScene> segments;
  std::optional<TreeModel> tree;
  std::optional<PlanarEmbedding> embedding;
};

Loaded load(const std::string& path, const std::string& grid_path = "") {
  std::string text = read_file(path);
  Loaded l;
  l.kind = document_kind(text);
  if (l.kind == "graph") {
    Graph g = parse_graph(text);
    int n = g.size();
    l.inst = ClassInstance{GraphClass::interval, std::move(g), VertexOrder::identity(n)};
  } else if (l.kind == "intervals") {
    l.intervals = parse_intervals(text);
    l.inst = make_instance(*l.intervals);
  } else if (l.kind == "tree") {
    l.tree = parse_tree(text);
    l.inst = make_instance(*l.tree);
  } else if (l.kind == "terrain") {
    l.terrain = parse_terrain(text);
    l.inst = make_instance(*l.terrain);
  } else if (l.kind == "polygon") {
    l.polygon = parse_polygon(text);
    l.inst = make_instance(*l.polygon);
  } else if (l.kind == "segments") {
    l.segments = parse_segments(text);
    GridSpec grid = grid_path.empty() ? GridSpec{} : parse_grid(read_file(grid_path));
    l.inst = make_instance(*l.segments, grid);
  } else if (l.kind == "embedding") {
    l.embedding = parse_embedding(text);
    auto lo = planar_facial_order(*l.embedding);
    l.inst = ClassInstance{GraphClass::interval, lo.graph, lo.order};
  } else {
    throw Error("'" + path + "': unrecognized document kind '" + l.kind + "'");
  }
  return l;
}

json occurrence_json(const PatternOccurrence& occ) {
  return json{{"k", occ.pattern.k},
              {"s", pattern_kind_name(occ.pattern.s)},
              {"side", occ.side == Side::above ? "above" : "below"},
              {"rows", occ.row_idx},
              {"cols", occ.col_idx}};
}

PatternOccurrence occurrence_from_json(const json& j) {
  PatternOccurrence occ;
  occ.pattern.k = j.at("k").get<int>();
  occ.pattern.s = parse_pattern_kind(j.at("s").get<std::string>());
  occ.side = j.at("side").get<std::string>() == "below" ? Side::below : Side::above;
  occ.row_idx = j.at("rows").get<std::vector<int>>();
  occ.col_idx = j.at("cols").get<std::vector<int>>();
  return occ;
}

std::vector<std::string> labels_of(const Graph& g, const std::vector<int>& vs) {
  std::vector<std::string> out;
  for (int v : vs) out.push_back(g.label(v));
  return out;
}

// gen ------------------------------------------------------------------

int cmd_gen(const std::string& family, const std::vector<std::string>& args) {
  auto arg = [&](size_t i) -> const std::string& {
    if (i >= args.size()) throw Error("gen " + family + ": missing argument " + std::to_string(i + 1));
    return args[i];
  };
  auto num = [&](size_t i) { return std::stoi(arg(i)); };
  std::string text;
  if (family == "bn") {
    text = format_segments(gen_bn_segments(num(0)));
  } else if (family == "bn-graph") {
    text = format_graph(bn_graph(num(0)));
  } else if (family == "subcubic") {
    text = format_segments(gen_subcubic_encoding_segments(parse_graph(read_file(arg(0)))));
  } else if (family == "pi-tree") {
    text = format_tree(gen_pi_tree_model(parse_graph(read_file(arg(0)))));
  } else if (family == "polygon-family") {
    text = format_polygon(gen_polygon_family(parse_graph(read_file(arg(0)))).polygon);
  } else if (family == "terrain") {
    text = format_terrain(gen_random_terrain(num(0), G.seed));
  } else if (family == "polygon") {
    text = format_polygon(gen_random_polygon(num(0), G.seed));
  } else if (family == "intervals") {
    text = format_intervals(gen_random_intervals(num(0), G.seed));
  } else if (family == "segments") {
    text = format_segments(gen_random_axis_segments(num(0), parse_rational(args.size() > 1 ? args[1] : "2"), G.seed));
  } else if (family == "tree") {
    text = format_tree(gen_random_tree_model(num(0), num(1), G.seed));
  } else if (family == "staircase") {
    text = format_intervals(gen_staircase_intervals(num(0)));
  } else if (family == "comb") {
    text = format_polygon(gen_comb_polygon(num(0)));
  } else if (family == "convex-polygon") {
    text = format_polygon(gen_convex_polygon(num(0)));
  } else if (family == "convex-terrain") {
    text = format_terrain(gen_convex_terrain(num(0)));
  } else if (family == "grid") {
    int stride = args.size() > 2 ? num(2) : 2;
    text = format_embedding(grid_embedding(num(0), num(1), stride));
  } else {
    throw Error("unknown family '" + family + "'");
  }
  emit(text);
  return kOk;
}

// order / matrix / visibility ------------------------------------------

int cmd_order(const std::string& path, const std::string& grid) {
  Loaded l = load(path, grid);
  std::vector<int> perm = l.inst.order.perm();
  if (G.json_out)
    emit(json{{"order", labels_of(l.inst.graph, perm)}}.dump(2) + "\n");
  else
    emit(format_vertex_list(perm, l.inst.graph));
  return kOk;
}

int cmd_visibility(const std::string& path, const std::string& grid) {
  Loaded l = load(path, grid);
  emit(format_graph(l.inst.graph));
  return kOk;
}

VertexOrder order_for(const Loaded& l, const std::string& order_path) {
  if (order_path.empty()) return l.inst.order;
  auto vs = parse_vertex_list(read_file(order_path), l.inst.graph);
  return VertexOrder(vs);
}

int cmd_matrix(const std::string& path, const std::string& order_path, const std::string& grid) {
  Loaded l = load(path, grid);
  emit(format_matrix(adjacency_matrix(l.inst.graph, order_for(l, order_path))));
  return kOk;
}

// analysis -----------------------------------------------------------

Matrix load_matrix(const std::string& path) {
  std::string text = read_file(path);
  if (document_kind(text) == "matrix") return parse_matrix(text);
  Loaded l = load(path);
  return adjacency_matrix(l.inst.graph, l.inst.order);
}

int cmd_gridrank(const std::string& path, const std::string& division_out, int limit) {
  Matrix m = load_matrix(path);
  int gr = grid_rank(m, limit);
  bool exact = std::max(m.rows(), m.cols()) <= limit;
  if (!division_out.empty()) {
    auto d = grid_rank_lower_bound(m, gr, limit);
    if (d) write_file(division_out, format_division(*d));
  }
  if (G.json_out)
    emit(json{{"gr", gr}, {"exact", exact}}.dump(2) + "\n");
  else
    emit("gr=" + std::to_string(gr) + (exact ? "" : " (lower bound)") + "\n");
  return kOk;
}

int cmd_pattern(const std::string& path, int k, const std::string& side_name) {
  Matrix m = load_matrix(path);
  Side side = side_name == "below" ? Side::below : Side::above;
  auto occ = find_universal_pattern(m, k, side, Budget::from_env());
  if (!occ) {
    emit(G.json_out ? "null\n" : "none\n");
    return kNegative;
  }
  emit(occurrence_json(*occ).dump(2) + "\n");
  return kOk;
}

int cmd_contract(const std::string& path, const std::string& order_path, bool exact) {
  Loaded l = load(path);
  TwinWidthResult r = exact ? exact_twinwidth(l.inst.graph, Budget::from_env(), l.inst.graph.size())
                            : dyadic_contract(l.inst.graph, order_for(l, order_path));
  emit(format_sequence(r.sequence));
  std::cerr << (exact ? "tww=" : "d=") << r.value << "\n";
  return kOk;
}

// verification ---------------------------------------------------------

int cmd_verify(const std::vector<std::string>& files, const std::string& mode, int k) {
  auto need = [&](size_t n) {
    if (files.size() != n) throw Error("verify " + mode + " expects " + std::to_string(n) + " files");
  };
  if (mode == "sequence") {
    need(2);
    Graph g = load(files[0]).inst.graph;
    int d = verify_sequence(g, parse_sequence(read_file(files[1])));
    emit(G.json_out ? json{{"d", d}}.dump(2) + "\n" : "d=" + std::to_string(d) + "\n");
    return kOk;
  }
  if (mode == "witness") {
    need(2);
    Graph g = load(files[0]).inst.graph;
    bool ok = verify_witness(g, parse_witness(read_file(files[1]), g));
    emit(ok ? "valid\n" : "invalid\n");
    return ok ? kOk : kNegative;
  }
  if (mode == "independent") {
    need(2);
    Graph g = load(files[0]).inst.graph;
    auto vs = parse_vertex_list(read_file(files[1]), g);
    bool ok = is_independent(g, vs);
    emit(ok ? "valid size=" + std::to_string(vs.size()) + "\n" : "invalid\n");
    return ok ? kOk : kNegative;
  }
  if (mode == "division") {
    need(2);
    Matrix m = load_matrix(files[0]);
    Division d = parse_division(read_file(files[1]));
    d.validate(m);
    int kk = k > 0 ? k : static_cast<int>(d.row_sizes.size());
    bool ok = is_rank_k_division(m, d, kk);
    emit(ok ? "valid k=" + std::to_string(kk) + "\n" : "invalid\n");
    return ok ? kOk : kNegative;
  }
  if (mode == "occurrence") {
    need(2);
    Matrix m = load_matrix(files[0]);
    bool ok = verify_occurrence(m, occurrence_from_json(json::parse(read_file(files[1]))));
    emit(ok ? "valid\n" : "invalid\n");
    return ok ? kOk : kNegative;
  }
  throw Error("unknown verify mode '" + mode + "'");
}

// extraction -----------------------------------------------------------

int cmd_extract(const std::string& what, const std::string& path, int k) {
  Loaded l = load(path);
  const Graph& g = l.inst.graph;
  if (what == "interval") {
    if (!l.intervals) throw Error("extract interval needs an intervals file");
    IntervalModel m = minimize_representation(*l.intervals);
    auto in = interval_division_prepare(g, m, k, Budget::from_env());
    if (!in) {
      emit("none\n");
      return kNegative;
    }
    emit(format_witness(interval_transversal_extract(g, m, *in).witness, g));
    return kOk;
  }
  if (what != "terrain" && what != "polygon") throw Error("unknown extraction '" + what + "'");
  if ((what == "terrain") != l.terrain.has_value() || (what == "polygon") != l.polygon.has_value())
    throw Error("extract " + what + " needs a " + what + " file");
  auto occ = find_universal_pattern(adjacency_matrix(g, l.inst.order), k, Side::above, Budget::from_env());
  if (!occ) {
    emit("none\n");
    return kNegative;
  }
  if (what == "terrain")
    emit(format_witness(terrain_halfgraph_extract(g, l.inst.order, *occ), g));
  else
    emit(format_vertex_list(polygon_independent_set_extract(g, l.inst.order, *occ).vertices, g));
  return kOk;
}

// win-win --------------------------------------------------------------

int cmd_winwin(const std::string& cls, const std::string& param, int k, const std::string& path,
               const std::string& witness_out, const std::string& cert_out, int pattern_k) {
  Loaded l = load(path);
  GraphClass c = parse_graph_class(cls);
  bool matches = (c == GraphClass::interval && l.intervals) || (c == GraphClass::rdp && l.tree) ||
                 (c == GraphClass::terrain && l.terrain) || (c == GraphClass::polygon && l.polygon) ||
                 (c == GraphClass::axis_segments && l.segments);
  if (!matches) throw Error("input file does not hold a " + cls + " scene");
  DecideOptions opts;
  opts.pattern_k = pattern_k;
  opts.budget = Budget::from_env();
  Decision d = decide(l.inst, parse_param(param), k, opts);
  const Graph& g = l.inst.graph;
  std::string witness;
  if (d.structure)
    witness = format_witness(*d.structure, g);
  else if (!d.vertices.empty())
    witness = format_vertex_list(d.vertices, g);
  if (!witness_out.empty() && !witness.empty()) write_file(witness_out, witness);
  if (!cert_out.empty() && d.certificate) write_file(cert_out, format_sequence(*d.certificate));
  if (G.json_out) {
    json j{{"answer", answer_name(d.answer)}, {"value", d.value}, {"route", d.route}, {"note", d.note}};
    if (d.occurrence) j["occurrence"] = occurrence_json(*d.occurrence);
    if (d.certificate) j["certificate_width"] = d.certificate_width;
    if (d.structure) {
      j["witness"] = json::array();
      for (const auto& col : d.structure->columns) j["witness"].push_back(labels_of(g, col));
    } else {
      j["witness"] = labels_of(g, d.vertices);
    }
    emit(j.dump(2) + "\n");
  } else {
    std::string out = answer_name(d.answer) + " " + param + "=" + std::to_string(d.value) + " route=" + d.route;
    if (d.certificate) out += " certificate_d=" + std::to_string(d.certificate_width);
    emit(out + "\n");
    if (!d.note.empty()) std::cerr << d.note << "\n";
  }
  switch (d.answer) {
    case Decision::Answer::yes: return kOk;
    case Decision::Answer::no: return kNegative;
    default: return kError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twin-width toolkit for geometric graph classes"};
  app.require_subcommand(1);
  app.add_flag("--json", G.json_out, "Machine-readable output");
  app.add_option("--seed", G.seed, "Seed for random generators");
  app.add_option("--threads", G.threads, "Worker cap (searches run sequentially)")->check(CLI::PositiveNumber);
  app.add_option("-o,--out", G.out, "Write the main output to a file");

  std::string family, path, grid, order_path, division_out, side = "above", mode = "sequence", what, cls, param,
                              witness_out, cert_out;
  std::vector<std::string> args, files;
  int k = 2, limit = kGridRankExhaustiveLimit, pattern_k = 0;
  bool exact = false;

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("family", family, "bn, bn-graph, subcubic, pi-tree, polygon-family, terrain, polygon, intervals, "
                                    "segments, tree, staircase, comb, convex-polygon, convex-terrain, grid")
      ->required();
  gen->add_option("args", args, "Family arguments");

  auto* order = app.add_subcommand("order", "Print the canonical vertex order");
  order->add_option("input", path)->required();
  order->add_option("--grid", grid, "Grid file for segment scenes");

  auto* matrix = app.add_subcommand("matrix", "Ordered adjacency matrix");
  matrix->add_option("input", path)->required();
  matrix->add_option("--order", order_path, "Vertex order file (labels, one per line)");
  matrix->add_option("--grid", grid, "Grid file for segment scenes");

  auto* gridrank = app.add_subcommand("gridrank", "Grid rank of a matrix or ordered scene");
  gridrank->add_option("input", path)->required();
  gridrank->add_option("--division", division_out, "Write a maximum-rank division");
  gridrank->add_option("--limit", limit, "Exhaustive size limit");

  auto* pattern = app.add_subcommand("pattern", "Search for a universal pattern");
  pattern->add_option("input", path)->required();
  pattern->add_option("-k", k, "Pattern order")->check(CLI::PositiveNumber);
  pattern->add_option("--side", side)->check(CLI::IsMember({"above", "below"}));

  auto* contract = app.add_subcommand("contract", "Produce a contraction sequence");
  contract->add_option("input", path)->required();
  contract->add_option("--order", order_path, "Vertex order file");
  contract->add_flag("--exact", exact, "Exact twin-width search");

  auto* verify = app.add_subcommand("verify", "Verify a certificate");
  verify->add_option("files", files)->required();
  verify->add_option("--mode", mode)->check(
      CLI::IsMember({"sequence", "witness", "independent", "division", "occurrence"}));
  verify->add_option("-k", k, "Division rank (defaults to the number of parts)");
  int verify_k = 0;
  verify->callback([&] { verify_k = verify->count("-k") ? k : 0; });

  auto* extract = app.add_subcommand("extract", "Extract a structural witness");
  extract->add_option("what", what, "interval, terrain or polygon")->required();
  extract->add_option("input", path)->required();
  extract->add_option("-k,-t", k, "Size parameter")->check(CLI::PositiveNumber);

  auto* winwin = app.add_subcommand("winwin", "Decide p(G) >= k");
  winwin->add_option("--class", cls)->required()->check(
      CLI::IsMember({"interval", "rdp", "terrain", "polygon", "segments"}));
  winwin->add_option("--param", param)->required()->check(CLI::IsMember({"alpha", "beta", "lambda"}));
  winwin->add_option("-k", k)->required()->check(CLI::NonNegativeNumber);
  winwin->add_option("input", path)->required();
  winwin->add_option("--witness-out", witness_out);
  winwin->add_option("--certificate-out", cert_out);
  winwin->add_option("--pattern-k", pattern_k, "Pattern search threshold (default k)");

  auto* visibility = app.add_subcommand("visibility", "Graph of a scene");
  visibility->add_option("input", path)->required();
  visibility->add_option("--grid", grid, "Grid file for segment scenes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*gen) return cmd_gen(family, args);
    if (*order) return cmd_order(path, grid);
    if (*matrix) return cmd_matrix(path, order_path, grid);
    if (*gridrank) return cmd_gridrank(path, division_out, limit);
    if (*pattern) return cmd_pattern(path, k, side);
    if (*contract) return cmd_contract(path, order_path, exact);
    if (*verify) {
      if (files.size() == 2 && mode == "sequence") {
        std::string kind = document_kind(read_file(files[1]));
        if (kind == "witness") mode = "witness";
      }
      return cmd_verify(files, mode, verify_k);
    }
    if (*extract) return cmd_extract(what, path, k);
    if (*winwin) return cmd_winwin(cls, param, k, path, witness_out, cert_out, pattern_k);
    if (*visibility) return cmd_visibility(path, grid);
  } catch (const BudgetExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
