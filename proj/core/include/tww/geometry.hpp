#pragma once

#include "tww/graph.hpp"
#include "tww/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tww {

struct Point {
  Rational x;
  Rational y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

struct Segment {
  std::string id;
  Point p;
  Point q;
};

// The global order of a scene is the order of its segments.
struct SegmentScene {
  std::vector<Segment> segments;
};

struct GridSpec {
  Rational t = 1;
  Point offset{0, 0};
  bool operator==(const GridSpec& o) const { return t == o.t && offset == o.offset; }
};

struct Terrain {
  std::vector<Point> vertices;
};

// Counter-clockwise after normalization.
struct SimplePolygon {
  std::vector<Point> boundary;
  std::vector<std::string> labels;
};

struct IntervalModel {
  struct Entry {
    std::string label;
    long long l = 0;
    long long r = 0;
  };
  std::vector<Entry> intervals;
};

int orientation(const Point& a, const Point& b, const Point& c);
bool on_segment(const Point& p, const Point& a, const Point& b);
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);
bool proper_crossing(const Point& a, const Point& b, const Point& c, const Point& d);
// Common points: empty, a single point, or the two ends of a collinear overlap.
std::vector<Point> segment_intersection(const Point& a, const Point& b, const Point& c, const Point& d);

Graph intersection_graph(const SegmentScene& scene);

// Cell (i, j) spans [ox + i t, ox + (i+1) t] x [oy + j t, oy + (j+1) t].
struct Cell {
  long long i = 0;
  long long j = 0;
  bool operator==(const Cell&) const = default;
  bool operator<(const Cell& o) const { return i < o.i || (i == o.i && j < o.j); }
};

bool in_general_position(const SegmentScene& scene, const GridSpec& grid);
GridSpec general_position(const SegmentScene& scene, const GridSpec& grid);
bool hits(const SegmentScene& scene, const GridSpec& grid);

struct ClippedObject {
  Point p;
  Point q;
  int origin = 0;
};

std::vector<ClippedObject> clip(const SegmentScene& scene, const GridSpec& grid, Cell cell);

enum class CellSide { left, bottom, right, top, none };
char side_letter(CellSide s);

struct CircularOrder {
  VertexOrder order;              // over indices of the clip result
  std::vector<CellSide> root;     // per clip entry
};

// Objects without boundary contact come last, by global order.
CircularOrder circular_order(const std::vector<ClippedObject>& clipped, const GridSpec& grid, Cell cell);
// Position of a boundary point counter-clockwise from the top-left corner.
Rational boundary_parameter(const Point& p, const GridSpec& grid, Cell cell);

struct Splitting {
  Graph graph;
  enum class Role { s, d };
  std::vector<Role> role;
  std::vector<int> origin;   // segment index per vertex
  std::vector<Cell> cell;    // cell of every s-vertex
  std::vector<Point> point;  // crossing point of every d-vertex
  std::vector<std::vector<int>> pieces;     // s-vertices of each segment, in order
  std::vector<std::vector<int>> crossings;  // d-vertices of each segment, in order
};

Splitting gamma_splitting(const SegmentScene& scene, const GridSpec& grid);
// Contracts every segment's pieces back into one vertex.
Graph contract_splitting(const Splitting& h, const SegmentScene& scene);

// In one cell, a before b among left-rooted pieces and c before d among
// bottom-rooted pieces with ac and bd meeting but bc not.
struct RootedCrossing {
  Cell cell;
  std::array<int, 4> segments;  // a, b, c, d
};

std::vector<RootedCrossing> rooted_crossing_violations(const SegmentScene& scene, const GridSpec& grid,
                                                       size_t limit = 0);

struct Visibility {
  Graph graph;
  VertexOrder order;
};

Visibility terrain_visibility(const Terrain& t);
bool terrain_sees(const Terrain& t, int i, int j);

void validate_polygon(const SimplePolygon& p);
SimplePolygon normalize_polygon(SimplePolygon p);
Visibility polygon_visibility(const SimplePolygon& p);
bool polygon_sees(const SimplePolygon& p, int i, int j);

std::vector<std::array<int, 4>> order_claim_violations(const Graph& g, const VertexOrder& ord, size_t limit = 0);
std::vector<std::array<int, 6>> double_x_violations(const Graph& g, const VertexOrder& ord, size_t limit = 0);

Graph interval_graph(const IntervalModel& m);
IntervalModel minimize_representation(const IntervalModel& m);
bool has_minimality_property(const IntervalModel& m);

}  // namespace tww
