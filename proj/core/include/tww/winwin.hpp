#pragma once

#include "tww/budget.hpp"
#include "tww/contraction.hpp"
#include "tww/geometry.hpp"
#include "tww/graph.hpp"
#include "tww/matrix.hpp"
#include "tww/orders.hpp"
#include "tww/structures.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tww {

enum class GraphClass { interval, rdp, terrain, polygon, axis_segments };
enum class Param { alpha, beta, lambda };

std::string class_name(GraphClass c);
GraphClass parse_graph_class(const std::string& s);
std::string param_name(Param p);
Param parse_param(const std::string& s);

// A graph of the class together with its canonical order.
struct ClassInstance {
  GraphClass cls = GraphClass::interval;
  Graph graph;
  VertexOrder order;
};

ClassInstance make_instance(const IntervalModel& model);
ClassInstance make_instance(const TreeModel& tm);
ClassInstance make_instance(const Terrain& t);
ClassInstance make_instance(const SimplePolygon& p);
// Segments are ordered by the first appearance of their pieces in the
// splitting order of a unit grid moved into general position.
ClassInstance make_instance(const SegmentScene& scene, const GridSpec& grid = {});

struct SolveResult {
  int value = 0;
  // Exact unless the search stopped at the cap.
  bool capped = false;
  std::vector<int> vertices;
  std::optional<StructureWitness> structure;
};

SolveResult solve_alpha(const Graph& g, const Budget& budget = {});
// Largest t <= cap with a semi-induced K_{t,t}; cap 0 means no cap.
SolveResult solve_beta(const Graph& g, int cap = 0, const Budget& budget = {});
// Largest t <= cap with a semi-induced H_t.
SolveResult solve_lambda(const Graph& g, int cap = 0, const Budget& budget = {});
SolveResult solve(Param p, const Graph& g, int cap = 0, const Budget& budget = {});

struct Decision {
  enum class Answer { yes, no, inconclusive };
  Answer answer = Answer::inconclusive;
  int value = 0;
  std::vector<int> vertices;                   // independent set witness
  std::optional<StructureWitness> structure;  // biclique or half-graph witness
  std::string route;                           // "pattern" or "solver"
  std::optional<PatternOccurrence> occurrence;
  std::optional<ContractionSequence> certificate;
  int certificate_width = -1;
  std::string note;
};

std::string answer_name(Decision::Answer a);

struct DecideOptions {
  int pattern_k = 0;  // 0 means k
  int max_pattern_k = 4;
  Budget budget;
};

Decision decide(const ClassInstance& inst, Param p, int k, const DecideOptions& opts = {});

}  // namespace tww
