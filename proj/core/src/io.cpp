#include "tww/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace tww {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> lex(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line(text.substr(pos, end - pos));
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    Line l{number, {}};
    for (std::string tok; in >> tok;) l.tokens.push_back(tok);
    if (!l.tokens.empty()) out.push_back(std::move(l));
    pos = end + 1;
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(lex(text)) {}

  bool done() const { return at_ >= lines_.size(); }
  const Line& peek() const {
    if (done()) throw ParseError(last_line(), "unexpected end of input");
    return lines_[at_];
  }
  const Line& next() {
    const Line& l = peek();
    ++at_;
    return l;
  }
  int last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

  // Header "<keyword> <ints...>".
  std::vector<long> header(const std::string& keyword, size_t count) {
    if (done()) throw ParseError(0, "empty document, expected '" + keyword + "'");
    const Line& l = next();
    if (l.tokens[0] != keyword) throw ParseError(l.number, "expected '" + keyword + "'");
    if (l.tokens.size() != count + 1) throw ParseError(l.number, "malformed header");
    std::vector<long> out;
    for (size_t i = 1; i <= count; ++i) out.push_back(integer(l, l.tokens[i]));
    return out;
  }

  static long integer(const Line& l, const std::string& tok) {
    try {
      size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw ParseError(l.number, "expected an integer, got '" + tok + "'");
    }
  }

  static Rational rational(const Line& l, const std::string& tok) {
    try {
      return parse_rational(tok);
    } catch (const std::exception&) {
      throw ParseError(l.number, "expected a rational, got '" + tok + "'");
    }
  }

  void expect_end() const {
    if (!done()) throw ParseError(lines_[at_].number, "unexpected trailing content");
  }

 private:
  std::vector<Line> lines_;
  size_t at_ = 0;
};

int vertex(const Graph& g, const Line& l, const std::string& label) {
  auto v = g.find(label);
  if (!v) throw ParseError(l.number, "unknown vertex '" + label + "'");
  return *v;
}

void check_count(const Line& l, size_t got, size_t want) {
  if (got != want) throw ParseError(l.number, "expected " + std::to_string(want) + " fields");
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ' ';
    out += parts[i];
  }
  return out;
}

void check_label(const std::string& s) {
  if (s.empty() || s.find_first_of(".+# \t\n") != std::string::npos)
    throw Error("label '" + s + "' contains a reserved character");
}

}  // namespace

Graph parse_graph(std::string_view text) {
  Reader r(text);
  long n = r.header("graph", 1)[0];
  if (n < 0) throw ParseError(1, "negative vertex count");
  std::vector<std::string> labels;
  int label_line = 1;
  if (n > 0) {
    const Line& l = r.next();
    check_count(l, l.tokens.size(), static_cast<size_t>(n));
    labels = l.tokens;
    label_line = l.number;
    for (const auto& s : labels)
      if (s.find_first_of(".+") != std::string::npos)
        throw ParseError(l.number, "label '" + s + "' contains a reserved character");
  }
  Graph g;
  try {
    g = Graph(labels);
  } catch (const Error& e) {
    throw ParseError(label_line, e.what());
  }
  while (!r.done()) {
    const Line& l = r.next();
    check_count(l, l.tokens.size(), 2);
    int u = vertex(g, l, l.tokens[0]);
    int v = vertex(g, l, l.tokens[1]);
    if (u == v) throw ParseError(l.number, "loop at '" + l.tokens[0] + "'");
    g.add_edge(u, v);
  }
  return g;
}

std::string format_graph(const Graph& g) {
  for (const auto& s : g.labels()) check_label(s);
  std::string out = "graph " + std::to_string(g.size()) + "\n";
  if (g.size() > 0) out += join(g.labels()) + "\n";
  for (auto [u, v] : g.edges()) out += g.label(u) + " " + g.label(v) + "\n";
  return out;
}

Matrix parse_matrix(std::string_view text) {
  Reader r(text);
  auto h = r.header("matrix", 2);
  if (h[0] < 0 || h[1] < 0) throw ParseError(1, "negative dimension");
  std::vector<std::string> rows;
  for (long i = 0; i < h[0]; ++i) {
    const Line& l = r.next();
    std::string row;
    for (const auto& t : l.tokens) row += t;
    if (static_cast<long>(row.size()) != h[1] || row.find_first_not_of("01") != std::string::npos)
      throw ParseError(l.number, "expected " + std::to_string(h[1]) + " entries of 0/1");
    rows.push_back(row);
  }
  r.expect_end();
  if (rows.empty()) return Matrix(0, static_cast<int>(h[1]));
  return Matrix::from_strings(rows);
}

std::string format_matrix(const Matrix& m) {
  std::string out = "matrix " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (const auto& row : m.to_strings()) out += row + "\n";
  return out;
}

Division parse_division(std::string_view text) {
  Reader r(text);
  Division d;
  for (auto* sizes : {&d.row_sizes, &d.col_sizes}) {
    const Line& l = r.next();
    for (const auto& t : l.tokens) {
      long v = Reader::integer(l, t);
      if (v < 1) throw ParseError(l.number, "part sizes must be positive");
      sizes->push_back(static_cast<int>(v));
    }
  }
  r.expect_end();
  return d;
}

std::string format_division(const Division& d) {
  std::string out;
  for (const auto* sizes : {&d.row_sizes, &d.col_sizes}) {
    std::vector<std::string> parts;
    for (int s : *sizes) parts.push_back(std::to_string(s));
    out += join(parts) + "\n";
  }
  return out;
}

ContractionSequence parse_sequence(std::string_view text) {
  ContractionSequence s;
  for (const auto& l : lex(text)) {
    if (l.tokens.size() != 1) throw ParseError(l.number, "expected one 'u+v' merge");
    const auto& t = l.tokens[0];
    auto plus = t.find('+');
    if (plus == std::string::npos || plus == 0 || plus + 1 == t.size() || t.find('+', plus + 1) != std::string::npos)
      throw ParseError(l.number, "expected one 'u+v' merge");
    s.steps.emplace_back(t.substr(0, plus), t.substr(plus + 1));
  }
  return s;
}

std::string format_sequence(const ContractionSequence& s) {
  std::string out;
  for (const auto& [u, v] : s.steps) out += u + "+" + v + "\n";
  return out;
}

SegmentScene parse_segments(std::string_view text) {
  Reader r(text);
  long n = r.header("segments", 1)[0];
  SegmentScene s;
  std::set<std::string> ids;
  for (long i = 0; i < n; ++i) {
    const Line& l = r.next();
    check_count(l, l.tokens.size(), 5);
    Segment seg{l.tokens[0], {Reader::rational(l, l.tokens[1]), Reader::rational(l, l.tokens[2])},
                {Reader::rational(l, l.tokens[3]), Reader::rational(l, l.tokens[4])}};
    if (seg.p == seg.q) throw ParseError(l.number, "segment '" + seg.id + "' is a point");
    if (!ids.insert(seg.id).second) throw ParseError(l.number, "duplicate segment id '" + seg.id + "'");
    s.segments.push_back(std::move(seg));
  }
  r.expect_end();
  return s;
}

std::string format_segments(const SegmentScene& s) {
  std::string out = "segments " + std::to_string(s.segments.size()) + "\n";
  for (const auto& seg : s.segments)
    out += seg.id + " " + to_string(seg.p.x) + " " + to_string(seg.p.y) + " " + to_string(seg.q.x) + " " +
           to_string(seg.q.y) + "\n";
  return out;
}

Terrain parse_terrain(std::string_view text) {
  Reader r(text);
  long n = r.header("terrain", 1)[0];
  Terrain t;
  for (long i = 0; i < n; ++i) {
    const Line& l = r.next();
    check_count(l, l.tokens.size(), 2);
    Point p{Reader::rational(l, l.tokens[0]), Reader::rational(l, l.tokens[1])};
    if (!t.vertices.empty() && !(t.vertices.back().x < p.x))
      throw ParseError(l.number, "terrain x coordinates must increase");
    t.vertices.push_back(p);
  }
  r.expect_end();
  return t;
}

std::string format_terrain(const Terrain& t) {
  std::string out = "terrain " + std::to_string(t.vertices.size()) + "\n";
  for (const auto& p : t.vertices) out += to_string(p.x) + " " + to_string(p.y) + "\n";
  return out;
}

SimplePolygon parse_polygon(std::string_view text) {
  Reader r(text);
  long n = r.header("polygon", 1)[0];
  SimplePolygon p;
  bool labelled = false;
  for (long i = 0; i < n; ++i) {
    const Line& l = r.next();
    if (l.tokens.size() != 2 && l.tokens.size() != 3) throw ParseError(l.number, "expected 'x y [label]'");
    if (i == 0) labelled = l.tokens.size() == 3;
    if (labelled != (l.tokens.size() == 3)) throw ParseError(l.number, "labels must be given for all vertices or none");
    p.boundary.push_back({Reader::rational(l, l.tokens[0]), Reader::rational(l, l.tokens[1])});
    if (labelled) p.labels.push_back(l.tokens[2]);
  }
  r.expect_end();
  return p;
}

std::string format_polygon(const SimplePolygon& p) {
  std::string out = "polygon " + std::to_string(p.boundary.size()) + "\n";
  for (size_t i = 0; i < p.boundary.size(); ++i) {
    out += to_string(p.boundary[i].x) + " " + to_string(p.boundary[i].y);
    if (!p.labels.empty()) out += " " + p.labels[i];
    out += "\n";
  }
  return out;
}

IntervalModel parse_intervals(std::string_view text) {
  Reader r(text);
  long n = r.header("intervals", 1)[0];
  IntervalModel m;
  for (long i = 0; i < n; ++i) {
    const Line& l = r.next();
    check_count(l, l.tokens.size(), 3);
    long a = Reader::integer(l, l.tokens[1]);
    long b = Reader::integer(l, l.tokens[2]);
    if (a > b) throw ParseError(l.number, "interval with l > r");
    m.intervals.push_back({l.tokens[0], a, b});
  }
  r.expect_end();
  return m;
}

std::string format_intervals(const IntervalModel& m) {
  std::string out = "intervals " + std::to_string(m.intervals.size()) + "\n";
  for (const auto& e : m.intervals) out += e.label + " " + std::to_string(e.l) + " " + std::to_string(e.r) + "\n";
  return out;
}

TreeModel parse_tree(std::string_view text) {
  Reader r(text);
  long n = r.header("tree", 1)[0];
  if (n < 1) throw ParseError(1, "tree needs at least one node");
  TreeModel tm;
  tm.nodes = static_cast<int>(n);
  auto node = [&](const Line& l, const std::string& tok) {
    long v = Reader::integer(l, tok);
    if (v < 0 || v >= n) throw ParseError(l.number, "node " + tok + " out of range");
    return static_cast<int>(v);
  };
  const Line& first = r.next();
  if (first.tokens[0] == "arcs") {
    check_count(first, first.tokens.size(), 1);
    while (!r.done() && r.peek().tokens[0] == "arc") {
      const Line& l = r.next();
      check_count(l, l.tokens.size(), 3);
      tm.arcs.emplace_back(node(l, l.tokens[1]), node(l, l.tokens[2]));
    }
  } else {
    check_count(first, first.tokens.size(), static_cast<size_t>(n));
    for (long v = 0; v < n; ++v) {
      long p = Reader::integer(first, first.tokens[v]);
      if (p == -1) continue;
      if (p < 0 || p >= n) throw ParseError(first.number, "parent out of range");
      tm.arcs.emplace_back(static_cast<int>(p), static_cast<int>(v));
    }
  }
  while (!r.done()) {
    const Line& l = r.next();
    if (l.tokens[0] != "path") throw ParseError(l.number, "expected 'path <vertex> <high> <low>'");
    check_count(l, l.tokens.size(), 4);
    tm.paths.push_back({l.tokens[1], node(l, l.tokens[2]), node(l, l.tokens[3])});
  }
  try {
    validate_tree_model(tm);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(r.last_line(), e.what());
  }
  return tm;
}

std::string format_tree(const TreeModel& tm) {
  std::string out = "tree " + std::to_string(tm.nodes) + "\n";
  if (tm.rooted()) {
    std::vector<std::string> ps;
    for (int p : tm.parents()) ps.push_back(std::to_string(p));
    out += join(ps) + "\n";
  } else {
    out += "arcs\n";
    for (auto [a, b] : tm.arcs) out += "arc " + std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  for (const auto& p : tm.paths)
    out += "path " + p.label + " " + std::to_string(p.high) + " " + std::to_string(p.low) + "\n";
  return out;
}

PlanarEmbedding parse_embedding(std::string_view text) {
  Reader r(text);
  long n = r.header("embedding", 1)[0];
  std::vector<std::string> labels;
  if (n > 0) {
    const Line& l = r.next();
    check_count(l, l.tokens.size(), static_cast<size_t>(n));
    labels = l.tokens;
  }
  PlanarEmbedding emb;
  emb.graph = Graph(labels);
  emb.rotation.assign(n, {});
  std::vector<bool> seen(n, false);
  while (!r.done()) {
    const Line& l = r.next();
    if (l.tokens[0] == "rot") {
      if (l.tokens.size() < 2) throw ParseError(l.number, "expected 'rot <v> <neighbours...>'");
      int v = vertex(emb.graph, l, l.tokens[1]);
      if (seen[v]) throw ParseError(l.number, "second rotation for '" + l.tokens[1] + "'");
      seen[v] = true;
      for (size_t i = 2; i < l.tokens.size(); ++i) {
        int u = vertex(emb.graph, l, l.tokens[i]);
        if (u == v) throw ParseError(l.number, "loop at '" + l.tokens[1] + "'");
        emb.rotation[v].push_back(u);
        emb.graph.add_edge(u, v);
      }
    } else if (l.tokens[0] == "facial") {
      std::vector<int> cyc;
      for (size_t i = 1; i < l.tokens.size(); ++i) cyc.push_back(vertex(emb.graph, l, l.tokens[i]));
      emb.facial_cycles.push_back(std::move(cyc));
    } else {
      throw ParseError(l.number, "expected 'rot' or 'facial'");
    }
  }
  try {
    validate_embedding(emb);
  } catch (const Error& e) {
    throw ParseError(r.last_line(), e.what());
  }
  return emb;
}

std::string format_embedding(const PlanarEmbedding& emb) {
  const Graph& g = emb.graph;
  std::string out = "embedding " + std::to_string(g.size()) + "\n";
  if (g.size() > 0) out += join(g.labels()) + "\n";
  for (int v = 0; v < g.size(); ++v) {
    out += "rot " + g.label(v);
    for (int u : emb.rotation[v]) out += " " + g.label(u);
    out += "\n";
  }
  for (const auto& c : emb.facial_cycles) {
    out += "facial";
    for (int v : c) out += " " + g.label(v);
    out += "\n";
  }
  return out;
}

StructureWitness parse_witness(std::string_view text, const Graph& g) {
  Reader r(text);
  const Line& h = r.next();
  if (h.tokens[0] != "witness" || h.tokens.size() != 4) throw ParseError(h.number, "expected 'witness <kind> <t> <ell>'");
  StructureWitness w;
  try {
    w.kind = BipPattern::parse(h.tokens[1], static_cast<int>(Reader::integer(h, h.tokens[2])),
                               static_cast<int>(Reader::integer(h, h.tokens[3])));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(h.number, e.what());
  }
  while (!r.done()) {
    const Line& l = r.next();
    std::vector<int> col;
    for (const auto& t : l.tokens) col.push_back(vertex(g, l, t));
    if (static_cast<int>(col.size()) != w.kind.column_size())
      throw ParseError(l.number, "expected " + std::to_string(w.kind.column_size()) + " vertices");
    w.columns.push_back(std::move(col));
  }
  if (static_cast<int>(w.columns.size()) != w.kind.column_count())
    throw ParseError(r.last_line(), "expected " + std::to_string(w.kind.column_count()) + " columns");
  return w;
}

std::string format_witness(const StructureWitness& w, const Graph& g) {
  std::string out = "witness " + w.kind.name() + " " + std::to_string(w.kind.t) + " " + std::to_string(w.kind.ell) + "\n";
  for (const auto& col : w.columns) {
    std::vector<std::string> ls;
    for (int v : col) ls.push_back(g.label(v));
    out += join(ls) + "\n";
  }
  return out;
}

GridSpec parse_grid(std::string_view text) {
  Reader r(text);
  const Line& l = r.next();
  if (l.tokens[0] != "grid") throw ParseError(l.number, "expected 'grid <t> <ox> <oy>'");
  check_count(l, l.tokens.size(), 4);
  GridSpec g{Reader::rational(l, l.tokens[1]), {Reader::rational(l, l.tokens[2]), Reader::rational(l, l.tokens[3])}};
  if (g.t <= 0) throw ParseError(l.number, "cell size must be positive");
  r.expect_end();
  return g;
}

std::string format_grid(const GridSpec& grid) {
  return "grid " + to_string(grid.t) + " " + to_string(grid.offset.x) + " " + to_string(grid.offset.y) + "\n";
}

std::vector<int> parse_vertex_list(std::string_view text, const Graph& g) {
  std::vector<int> out;
  for (const auto& l : lex(text))
    for (const auto& t : l.tokens) out.push_back(vertex(g, l, t));
  return out;
}

std::string format_vertex_list(const std::vector<int>& vs, const Graph& g) {
  std::string out;
  for (int v : vs) out += g.label(v) + "\n";
  return out;
}

std::string document_kind(std::string_view text) {
  auto lines = lex(text);
  return lines.empty() ? "" : lines[0].tokens[0];
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

}  // namespace tww
