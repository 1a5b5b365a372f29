#pragma once

#include "tww/contraction.hpp"
#include "tww/geometry.hpp"
#include "tww/graph.hpp"
#include "tww/orders.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tww {

// Two-colouring by BFS, the first vertex of each component on side 0.
std::optional<std::vector<int>> bipartition(const Graph& g);

// n long verticals v1..vn, n long horizontals h1..hn and a pair of short
// segments "vi:hj:h", "vi:hj:v" per (i, j).
SegmentScene gen_bn_segments(int n);
// The intended intersection graph: biclique between the long segments plus
// a 2-subdivided edge per pair.
Graph bn_graph(int n);

// Same layout with short pairs only for the edges of g. Side 0 of the
// bipartition gives the verticals.
SegmentScene gen_subcubic_encoding_segments(const Graph& g);
Graph subcubic_encoding_graph(const Graph& g);

// Star with centre node 0, one leaf per vertex of g (side-0 leaves point at
// the centre, side-1 leaves away from it), a trivial path per vertex and a
// path "a:b" through the centre per edge.
TreeModel gen_pi_tree_model(const Graph& g);
// g with every edge subdivided once and the subdivision vertices made a clique.
Graph subdivided_clique_graph(const Graph& g);

struct PolygonFamily {
  SimplePolygon polygon;
  Graph spec;  // same vertex order as the polygon boundary
};

PolygonFamily gen_polygon_family(const Graph& g);

Terrain gen_random_terrain(int n, std::uint64_t seed, int max_height = 0);
SimplePolygon gen_random_polygon(int n, std::uint64_t seed, int attempts = 2000);
IntervalModel gen_random_intervals(int n, std::uint64_t seed);
// Axis-parallel segments with coordinates in multiples of 1/8 and lengths in [1, ell].
SegmentScene gen_random_axis_segments(int n, const Rational& ell, std::uint64_t seed);
// Random rooted model; the result is usually not minimal.
TreeModel gen_random_tree_model(int nodes, int paths, std::uint64_t seed);

Terrain gen_convex_terrain(int n);
SimplePolygon gen_convex_polygon(int n);
// Teeth of width 1 separated by gaps of width 1, pointing up.
SimplePolygon gen_comb_polygon(int teeth);

// Interval model with an evident staircase of t^2 row parts and t^2
// column parts, minimized.
IntervalModel gen_staircase_intervals(int t);

Graph seven_vertex_example();
ContractionSequence seven_vertex_sequence();
// 3-regular bipartite graph on a1..a8, b1..b8.
Graph cubic_bipartite_example();
Graph k33_minus_matching();
Graph subcubic_4x4_example();

}  // namespace tww
