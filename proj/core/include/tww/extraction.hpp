#pragma once

#include "tww/budget.hpp"
#include "tww/geometry.hpp"
#include "tww/graph.hpp"
#include "tww/matrix.hpp"
#include "tww/structures.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tww {

// Two families of t^2 vertex sets each; every set of the first family starts
// before every set of the second one.
struct TransversalInput {
  int t = 1;
  std::vector<std::vector<int>> first;
  std::vector<std::vector<int>> second;
};

std::optional<TransversalInput> interval_division_prepare(const Graph& g, const IntervalModel& model, int t,
                                                          const Budget& budget = Budget::nodes(2'000'000));

struct TransversalExtraction {
  StructureWitness witness;
  int left_neighbour_fallbacks = 0;
  int c_outside_minimality = 0;  // c-vertices not given by the minimality witness
};

TransversalExtraction interval_transversal_extract(const Graph& g, const IntervalModel& model,
                                                   const TransversalInput& in);

// Vertices of an occurrence of a pattern in the matrix ordered along ord.
std::vector<int> occurrence_vertices(const VertexOrder& ord, const PatternOccurrence& occ);

struct IndependentSetWitness {
  std::vector<int> vertices;
};

IndependentSetWitness polygon_independent_set_extract(const Graph& g, const VertexOrder& ord,
                                                      const PatternOccurrence& occ);
StructureWitness terrain_halfgraph_extract(const Graph& g, const VertexOrder& ord, const PatternOccurrence& occ);

bool is_independent(const Graph& g, const std::vector<int>& vertices);

}  // namespace tww
