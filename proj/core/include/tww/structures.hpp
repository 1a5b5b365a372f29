#pragma once

#include "tww/budget.hpp"
#include "tww/graph.hpp"
#include "tww/rational.hpp"

#include <optional>
#include <vector>

namespace tww {

struct StructureWitness {
  BipPattern kind;
  std::vector<std::vector<int>> columns;
};

struct GeneratedStructure {
  Graph graph;
  StructureWitness witness;
};

GeneratedStructure generate(const BipPattern& p);
bool verify_witness(const Graph& g, const StructureWitness& w);

// Exhaustive backtracking; throws BudgetExceeded when the budget runs out.
std::optional<StructureWitness> find_semi_induced(const Graph& g, const BipPattern& p,
                                                  const Budget& budget = Budget::nodes(200'000'000));

struct RamseyResult {
  enum class Kind { clique, independent_set };
  Kind kind = Kind::clique;
  std::vector<int> vertices;
  // False when neither target size exists; vertices then hold the larger of
  // a maximum clique and a maximum independent set.
  bool found = false;
};

RamseyResult ramsey_search(const Graph& g, int s, int t);
std::vector<int> maximum_clique(const Graph& g, const Budget& budget = {});
std::vector<int> maximum_independent_set(const Graph& g, const Budget& budget = {});
std::optional<std::vector<int>> find_clique(const Graph& g, int size, const Budget& budget = {});

struct BipRamseyResult {
  std::vector<int> rows;
  std::vector<int> cols;
  int color = 1;
  bool found = false;
};

// s x s all-ones or t x t all-zeros submatrix.
BipRamseyResult bip_ramsey_search(const Matrix& m, int s, int t);

struct MonotoneResult {
  std::vector<int> indices;
  bool non_decreasing = true;
};

MonotoneResult longest_monotone(const std::vector<Rational>& seq);

}  // namespace tww
