#pragma once

#include "tww/bitmatrix.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tww {

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::string> labels);
  // Vertices labelled prefix0, prefix1, ...
  static Graph numbered(int n, const std::string& prefix = "v");

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(const std::string& label) const;
  int index_of(const std::string& label) const;

  // Idempotent for duplicate edges; rejects loops.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  int add_vertex(const std::string& label);
  bool adjacent(int u, int v) const { return adj_[u][v]; }
  const Bitset& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].count()); }
  int max_degree() const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  Graph induced(const std::vector<int>& vertices) const;
  bool operator==(const Graph& o) const { return labels_ == o.labels_ && adj_ == o.adj_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<Bitset> adj_;
};

// A bijection between positions and vertices.
class VertexOrder {
 public:
  VertexOrder() = default;
  explicit VertexOrder(std::vector<int> perm);
  static VertexOrder identity(int n);

  int size() const { return static_cast<int>(perm_.size()); }
  int at(int position) const { return perm_[position]; }
  int position(int vertex) const { return pos_[vertex]; }
  bool before(int u, int v) const { return pos_[u] < pos_[v]; }
  const std::vector<int>& perm() const { return perm_; }
  VertexOrder reversed() const;
  // Sorts the given vertices by position.
  std::vector<int> sorted(std::vector<int> vertices) const;

 private:
  std::vector<int> perm_;
  std::vector<int> pos_;
};

struct BipPattern {
  enum class Kind { biclique, half_graph, matching, anti_matching, transversal_pair };
  Kind kind = Kind::biclique;
  int t = 1;
  int ell = 0;

  // Number of vertex lists: 2 for bipartite kinds, ell + 3 for transversal pairs.
  int column_count() const;
  // Length of each vertex list.
  int column_size() const;
  std::string name() const;
  static BipPattern parse(const std::string& name, int t, int ell = 0);
};

// True iff the cross edges between consecutive lists exactly realize P under
// the given list orders. Transversal pairs take lists A, B_0, ..., B_ell, C,
// each indexed (1,1), (1,2), ..., (t,t) lexicographically; pairs of lists
// without predefined edges are unconstrained.
bool semi_induced_check(const Graph& g, const std::vector<std::vector<int>>& columns, const BipPattern& p);
bool semi_induced_check(const Graph& g, const std::vector<int>& a, const std::vector<int>& b,
                        const BipPattern& p);

// Expected adjacency between entry x of list ca and entry y of list cb of a
// semi-induced pattern; nullopt when unconstrained.
std::optional<bool> pattern_edge(const BipPattern& p, int ca, int x, int cb, int y);

Matrix adjacency_matrix(const Graph& g, const VertexOrder& ord);
// Columns are A sorted by the order, rows are B sorted by the order.
Matrix biadjacency(const Graph& g, const VertexOrder& ord, const std::vector<int>& a, const std::vector<int>& b);

}  // namespace tww
