#include "tww/winwin.hpp"

#include "tww/extraction.hpp"

#include <algorithm>
#include <map>

namespace tww {

std::string class_name(GraphClass c) {
  switch (c) {
    case GraphClass::interval: return "interval";
    case GraphClass::rdp: return "rdp";
    case GraphClass::terrain: return "terrain";
    case GraphClass::polygon: return "polygon";
    case GraphClass::axis_segments: return "segments";
  }
  return "?";
}

GraphClass parse_graph_class(const std::string& s) {
  for (auto c : {GraphClass::interval, GraphClass::rdp, GraphClass::terrain, GraphClass::polygon,
                 GraphClass::axis_segments})
    if (class_name(c) == s) return c;
  throw Error("unknown class '" + s + "'");
}

std::string param_name(Param p) {
  switch (p) {
    case Param::alpha: return "alpha";
    case Param::beta: return "beta";
    case Param::lambda: return "lambda";
  }
  return "?";
}

Param parse_param(const std::string& s) {
  for (auto p : {Param::alpha, Param::beta, Param::lambda})
    if (param_name(p) == s) return p;
  throw Error("unknown parameter '" + s + "'");
}

std::string answer_name(Decision::Answer a) {
  switch (a) {
    case Decision::Answer::yes: return "YES";
    case Decision::Answer::no: return "NO";
    case Decision::Answer::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

ClassInstance make_instance(const IntervalModel& model) {
  return ClassInstance{GraphClass::interval, interval_graph(model), interval_lex_order(model)};
}

ClassInstance make_instance(const TreeModel& tm) {
  TreeModel m = minimize_tree_model(tm);
  return ClassInstance{GraphClass::rdp, tree_model_graph(m), rdp_lex_dfs_order(m)};
}

ClassInstance make_instance(const Terrain& t) {
  auto vis = terrain_visibility(t);
  return ClassInstance{GraphClass::terrain, std::move(vis.graph), std::move(vis.order)};
}

ClassInstance make_instance(const SimplePolygon& p) {
  auto vis = polygon_visibility(p);
  return ClassInstance{GraphClass::polygon, std::move(vis.graph), std::move(vis.order)};
}

ClassInstance make_instance(const SegmentScene& scene, const GridSpec& grid) {
  Graph g = intersection_graph(scene);
  int n = g.size();
  std::vector<int> perm;
  if (n > 0) {
    GridSpec placed = general_position(scene, grid);
    if (!hits(scene, placed)) throw Error("grid does not hit every segment");
    auto so = segment_global_order(scene, placed);
    std::vector<bool> seen(n, false);
    for (int v : so.order.perm()) {
      int s = so.splitting.origin[v];
      if (so.splitting.role[v] == Splitting::Role::s && !seen[s]) {
        seen[s] = true;
        perm.push_back(s);
      }
    }
  }
  return ClassInstance{GraphClass::axis_segments, std::move(g), VertexOrder(perm)};
}

namespace {

SolveResult grow(const Graph& g, BipPattern::Kind kind, int cap, const Budget& budget) {
  SolveResult res;
  int limit = g.size() / 2;
  if (cap > 0) limit = std::min(limit, cap);
  for (int t = 1; t <= limit; ++t) {
    auto w = find_semi_induced(g, BipPattern{kind, t, 0}, budget);
    if (!w) return res;
    res.value = t;
    res.structure = std::move(w);
  }
  res.capped = cap > 0 && res.value == cap;
  return res;
}

}  // namespace

SolveResult solve_alpha(const Graph& g, const Budget& budget) {
  SolveResult res;
  res.vertices = maximum_independent_set(g, budget);
  res.value = static_cast<int>(res.vertices.size());
  return res;
}

SolveResult solve_beta(const Graph& g, int cap, const Budget& budget) {
  return grow(g, BipPattern::Kind::biclique, cap, budget);
}

SolveResult solve_lambda(const Graph& g, int cap, const Budget& budget) {
  return grow(g, BipPattern::Kind::half_graph, cap, budget);
}

SolveResult solve(Param p, const Graph& g, int cap, const Budget& budget) {
  switch (p) {
    case Param::alpha: return solve_alpha(g, budget);
    case Param::beta: return solve_beta(g, cap, budget);
    case Param::lambda: return solve_lambda(g, cap, budget);
  }
  throw Error("unknown parameter");
}

namespace {

SolveResult lift(const SolveResult& local, const std::vector<int>& vs) {
  SolveResult out = local;
  for (int& v : out.vertices) v = vs[v];
  if (out.structure)
    for (auto& col : out.structure->columns)
      for (int& v : col) v = vs[v];
  return out;
}

}  // namespace

Decision decide(const ClassInstance& inst, Param p, int k, const DecideOptions& opts) {
  const Graph& g = inst.graph;
  if (inst.order.size() != g.size()) throw Error("order does not match the graph");
  if (k < 0) throw Error("k must be non-negative");
  Decision d;
  auto accept = [&](const SolveResult& r, const std::string& route) {
    d.answer = Decision::Answer::yes;
    d.value = r.value;
    d.vertices = r.vertices;
    d.structure = r.structure;
    d.route = route;
  };

  int kp = opts.pattern_k > 0 ? opts.pattern_k : k;
  // At k = 1 every pattern is a single entry.
  if (kp >= 2 && kp <= opts.max_pattern_k && 2 * kp * kp <= g.size()) {
    std::optional<PatternOccurrence> occ;
    try {
      occ = find_universal_pattern(adjacency_matrix(g, inst.order), kp, Side::above, opts.budget);
    } catch (const BudgetExceeded&) {
      d.note = "pattern search exceeded its budget; ";
    }
    if (occ) {
      PatternKind s = occ->pattern.s;
      if (inst.cls == GraphClass::polygon && s == PatternKind::one)
        throw Error("internal: pattern 1 found in a polygon visibility order");
      if (inst.cls == GraphClass::terrain && (s == PatternKind::zero || s == PatternKind::one))
        throw Error("internal: pattern " + pattern_kind_name(s) + " found in a terrain order");
      d.occurrence = occ;
      SolveResult found;
      if (inst.cls == GraphClass::polygon && p == Param::alpha) {
        auto w = polygon_independent_set_extract(g, inst.order, *occ);
        found.vertices = w.vertices;
        found.value = static_cast<int>(w.vertices.size());
      } else if (inst.cls == GraphClass::terrain && p == Param::lambda) {
        found.structure = terrain_halfgraph_extract(g, inst.order, *occ);
        found.value = kp;
      } else {
        auto vs = occurrence_vertices(inst.order, *occ);
        try {
          found = lift(solve(p, g.induced(vs), k, opts.budget), vs);
        } catch (const BudgetExceeded&) {
          d.note += "witness search on the pattern exceeded its budget; ";
        }
      }
      if (found.value >= k) {
        accept(found, "pattern");
        return d;
      }
      d.note += "pattern witness of size " + std::to_string(found.value) + " is below k; ";
    }
  }

  auto seq = dyadic_contract(g, inst.order);
  d.certificate = seq.sequence;
  d.certificate_width = seq.value;
  d.route = "solver";
  try {
    SolveResult r = solve(p, g, k, opts.budget);
    if (r.value >= k) {
      accept(r, "solver");
    } else {
      d.answer = Decision::Answer::no;
      d.value = r.value;
      d.vertices = r.vertices;
      d.structure = r.structure;
    }
  } catch (const BudgetExceeded& e) {
    d.answer = Decision::Answer::inconclusive;
    d.note += e.what();
  }
  return d;
}

}  // namespace tww
