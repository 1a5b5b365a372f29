#pragma once

#include "tww/contraction.hpp"
#include "tww/geometry.hpp"
#include "tww/graph.hpp"
#include "tww/matrix.hpp"
#include "tww/orders.hpp"
#include "tww/planar.hpp"
#include "tww/structures.hpp"

#include <string>
#include <string_view>

namespace tww {

// Text formats. Blank lines and '#' comments are ignored everywhere.
// Parsers throw ParseError with the offending line number.

Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

Matrix parse_matrix(std::string_view text);
std::string format_matrix(const Matrix& m);

Division parse_division(std::string_view text);
std::string format_division(const Division& d);

ContractionSequence parse_sequence(std::string_view text);
std::string format_sequence(const ContractionSequence& s);

SegmentScene parse_segments(std::string_view text);
std::string format_segments(const SegmentScene& s);

Terrain parse_terrain(std::string_view text);
std::string format_terrain(const Terrain& t);

SimplePolygon parse_polygon(std::string_view text);
std::string format_polygon(const SimplePolygon& p);

IntervalModel parse_intervals(std::string_view text);
std::string format_intervals(const IntervalModel& m);

TreeModel parse_tree(std::string_view text);
std::string format_tree(const TreeModel& tm);

PlanarEmbedding parse_embedding(std::string_view text);
std::string format_embedding(const PlanarEmbedding& emb);

StructureWitness parse_witness(std::string_view text, const Graph& g);
std::string format_witness(const StructureWitness& w, const Graph& g);

GridSpec parse_grid(std::string_view text);
std::string format_grid(const GridSpec& grid);

// Label list, one per line.
std::vector<int> parse_vertex_list(std::string_view text, const Graph& g);
std::string format_vertex_list(const std::vector<int>& vs, const Graph& g);

// First keyword of the document ("graph", "terrain", ...), or "" if empty.
std::string document_kind(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace tww
