#include "tww/graph.hpp"

#include "tww/budget.hpp"

#include <algorithm>
#include <set>

namespace tww {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows, Bitset(cols)) {}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) for_each_bit(data_[r], [&](int c) { t.set(c, r); });
  return t;
}

Matrix Matrix::complement() const {
  Matrix m = *this;
  for (auto& row : m.data_) row.flip();
  return m;
}

Matrix Matrix::rotate180() const {
  Matrix m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for_each_bit(data_[r], [&](int c) { m.set(rows_ - 1 - r, cols_ - 1 - c); });
  return m;
}

Matrix Matrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      if (get(rows[i], cols[j])) m.set(static_cast<int>(i), static_cast<int>(j));
  return m;
}

Matrix Matrix::block(int r0, int r1, int c0, int c1) const {
  Matrix m(r1 - r0, c1 - c0);
  for (int r = r0; r < r1; ++r)
    for (int c = c0; c < c1; ++c)
      if (get(r, c)) m.set(r - r0, c - c0);
  return m;
}

int Matrix::ones() const {
  int n = 0;
  for (const auto& row : data_) n += static_cast<int>(row.count());
  return n;
}

std::vector<std::string> Matrix::to_strings() const {
  std::vector<std::string> out;
  for (int r = 0; r < rows_; ++r) {
    std::string s(cols_, '0');
    for_each_bit(data_[r], [&](int c) { s[c] = '1'; });
    out.push_back(std::move(s));
  }
  return out;
}

Matrix Matrix::from_strings(const std::vector<std::string>& rows) {
  int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  Matrix m(static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw Error("ragged matrix rows");
    for (int c = 0; c < cols; ++c) {
      if (rows[r][c] == '1') m.set(static_cast<int>(r), c);
      else if (rows[r][c] != '0') throw Error("matrix entries must be 0 or 1");
    }
  }
  return m;
}

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
  int n = size();
  adj_.assign(n, Bitset(n));
  for (int i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], i).second) throw Error("duplicate vertex label '" + labels_[i] + "'");
  }
}

Graph Graph::numbered(int n, const std::string& prefix) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return Graph(std::move(labels));
}

std::optional<int> Graph::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Graph::index_of(const std::string& label) const {
  auto v = find(label);
  if (!v) throw Error("unknown vertex '" + label + "'");
  return *v;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw Error("loop at vertex '" + labels_[u] + "'");
  adj_[u][v] = true;
  adj_[v][u] = true;
}

void Graph::remove_edge(int u, int v) {
  adj_[u][v] = false;
  adj_[v][u] = false;
}

int Graph::add_vertex(const std::string& label) {
  int v = size();
  if (!index_.emplace(label, v).second) throw Error("duplicate vertex label '" + label + "'");
  labels_.push_back(label);
  for (auto& row : adj_) row.resize(v + 1);
  adj_.emplace_back(v + 1);
  return v;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < size(); ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::edge_count() const {
  size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return static_cast<int>(twice / 2);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for_each_bit(adj_[u], [&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  std::vector<std::string> labels;
  for (int v : vertices) labels.push_back(labels_[v]);
  Graph h(std::move(labels));
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

VertexOrder::VertexOrder(std::vector<int> perm) : perm_(std::move(perm)), pos_(perm_.size(), -1) {
  for (size_t i = 0; i < perm_.size(); ++i) {
    int v = perm_[i];
    if (v < 0 || v >= static_cast<int>(perm_.size()) || pos_[v] != -1) throw Error("order is not a permutation");
    pos_[v] = static_cast<int>(i);
  }
}

VertexOrder VertexOrder::identity(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return VertexOrder(std::move(p));
}

VertexOrder VertexOrder::reversed() const {
  return VertexOrder(std::vector<int>(perm_.rbegin(), perm_.rend()));
}

std::vector<int> VertexOrder::sorted(std::vector<int> vertices) const {
  std::sort(vertices.begin(), vertices.end(), [&](int a, int b) { return pos_[a] < pos_[b]; });
  return vertices;
}

int BipPattern::column_count() const { return kind == Kind::transversal_pair ? ell + 3 : 2; }

int BipPattern::column_size() const { return kind == Kind::transversal_pair ? t * t : t; }

std::string BipPattern::name() const {
  switch (kind) {
    case Kind::biclique: return "biclique";
    case Kind::half_graph: return "half_graph";
    case Kind::matching: return "matching";
    case Kind::anti_matching: return "anti_matching";
    case Kind::transversal_pair: return "transversal_pair";
  }
  return "?";
}

BipPattern BipPattern::parse(const std::string& name, int t, int ell) {
  BipPattern p;
  p.t = t;
  p.ell = ell;
  if (name == "biclique") p.kind = Kind::biclique;
  else if (name == "half_graph" || name == "ladder") p.kind = Kind::half_graph;
  else if (name == "matching") p.kind = Kind::matching;
  else if (name == "anti_matching") p.kind = Kind::anti_matching;
  else if (name == "transversal_pair") p.kind = Kind::transversal_pair;
  else throw Error("unknown pattern kind '" + name + "'");
  if (t < 1 || ell < 0) throw Error("pattern needs t >= 1 and ell >= 0");
  return p;
}

std::optional<bool> pattern_edge(const BipPattern& p, int ca, int x, int cb, int y) {
  if (ca > cb) {
    std::swap(ca, cb);
    std::swap(x, y);
  }
  if (cb != ca + 1) return std::nullopt;
  switch (p.kind) {
    case BipPattern::Kind::biclique: return true;
    case BipPattern::Kind::half_graph: return x <= y;
    case BipPattern::Kind::matching: return x == y;
    case BipPattern::Kind::anti_matching: return x != y;
    case BipPattern::Kind::transversal_pair: {
      int t = p.t;
      if (ca == 0) return x <= y;
      if (cb == p.ell + 2) {
        int xi = x / t, xj = x % t, yi = y / t, yj = y % t;
        return std::pair(xj, xi) <= std::pair(yj, yi);
      }
      return x == y;
    }
  }
  return std::nullopt;
}

bool semi_induced_check(const Graph& g, const std::vector<std::vector<int>>& columns, const BipPattern& p) {
  if (static_cast<int>(columns.size()) != p.column_count())
    throw Error("pattern " + p.name() + " needs " + std::to_string(p.column_count()) + " vertex lists");
  std::set<int> seen;
  for (const auto& col : columns) {
    if (static_cast<int>(col.size()) != p.column_size())
      throw Error("vertex list size mismatch for pattern " + p.name());
    for (int v : col) {
      if (v < 0 || v >= g.size()) throw Error("vertex out of range");
      if (!seen.insert(v).second) throw Error("vertex lists overlap");
    }
  }
  for (size_t ca = 0; ca + 1 < columns.size(); ++ca) {
    size_t cb = ca + 1;
    for (size_t x = 0; x < columns[ca].size(); ++x)
      for (size_t y = 0; y < columns[cb].size(); ++y) {
        auto want = pattern_edge(p, static_cast<int>(ca), static_cast<int>(x), static_cast<int>(cb),
                                 static_cast<int>(y));
        if (want && *want != g.adjacent(columns[ca][x], columns[cb][y])) return false;
      }
  }
  return true;
}

bool semi_induced_check(const Graph& g, const std::vector<int>& a, const std::vector<int>& b, const BipPattern& p) {
  return semi_induced_check(g, std::vector<std::vector<int>>{a, b}, p);
}

Matrix adjacency_matrix(const Graph& g, const VertexOrder& ord) {
  if (ord.size() != g.size()) throw Error("order does not cover the graph");
  int n = g.size();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for_each_bit(g.neighbors(ord.at(i)), [&](int v) { m.set(i, ord.position(v)); });
  return m;
}

Matrix biadjacency(const Graph& g, const VertexOrder& ord, const std::vector<int>& a, const std::vector<int>& b) {
  Bitset in_a(g.size());
  for (int v : a) in_a[v] = true;
  for (int v : b)
    if (in_a[v]) throw Error("biadjacency sets overlap");
  auto cols = ord.sorted(a);
  auto rows = ord.sorted(b);
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      if (g.adjacent(rows[i], cols[j])) m.set(static_cast<int>(i), static_cast<int>(j));
  return m;
}

}  // namespace tww
