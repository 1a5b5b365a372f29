#pragma once

#include "tww/budget.hpp"
#include "tww/graph.hpp"

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tww {

// Merge classes are identified by their smallest original vertex.
class Trigraph {
 public:
  explicit Trigraph(const Graph& g);
  explicit Trigraph(Graph&&) = delete;

  const Graph& graph() const { return *g_; }
  int size() const { return alive_count_; }
  bool alive(int c) const { return alive_[c]; }
  std::vector<int> vertices() const;
  const Bitset& members(int c) const { return members_[c]; }
  bool black(int a, int b) const { return black_[a][b]; }
  bool red(int a, int b) const { return red_[a][b]; }
  const Bitset& black_neighbors(int c) const { return black_[c]; }
  const Bitset& red_neighbors(int c) const { return red_[c]; }
  int red_degree(int c) const { return static_cast<int>(red_[c].count()); }
  int max_red_degree() const;

  // Returns the id of the merged class.
  int contract(int u, int v);

  // Dot-joined sorted original labels.
  std::string class_name(int c) const;
  int class_of_name(const std::string& name) const;
  // Class id of every original vertex.
  std::vector<int> partition() const;

 private:
  const Graph* g_;
  std::vector<bool> alive_;
  int alive_count_;
  std::vector<Bitset> members_;
  std::vector<Bitset> black_;
  std::vector<Bitset> red_;
  std::unordered_map<std::string, int> names_;
};

struct ContractionSequence {
  std::vector<std::pair<std::string, std::string>> steps;
};

// Maximum red degree over all intermediate trigraphs.
int verify_sequence(const Graph& g, const ContractionSequence& s);

struct TwinWidthResult {
  int value = 0;
  ContractionSequence sequence;
};

inline constexpr int kExactTwinWidthLimit = 10;

TwinWidthResult exact_twinwidth(const Graph& g, const Budget& budget = {}, int max_vertices = kExactTwinWidthLimit);

// Merges consecutive classes along the order, level by level.
TwinWidthResult dyadic_contract(const Graph& g, const VertexOrder& ord);

}  // namespace tww
