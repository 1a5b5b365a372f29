#pragma once

#include "tww/graph.hpp"

#include <string>
#include <vector>

namespace tww {

// Rotation system with counter-clockwise neighbour lists and a packing of
// vertex-disjoint faces, each listed counter-clockwise.
struct PlanarEmbedding {
  Graph graph;
  std::vector<std::vector<int>> rotation;
  std::vector<std::vector<int>> facial_cycles;
};

void validate_embedding(const PlanarEmbedding& emb);
int face_count(const PlanarEmbedding& emb);

struct LayeredOrder {
  Graph graph;  // includes facial vertices when requested
  VertexOrder order;
  std::vector<int> layer;
  std::vector<int> parent;       // -1 at the root
  std::vector<bool> explored;    // tree edge to the parent is explored
  std::vector<std::vector<int>> cycles;  // packing, in input order
  int layers() const;
};

LayeredOrder planar_facial_order(const PlanarEmbedding& emb, int root = 0, bool facial_vertices = false);

struct LayerReport {
  bool layers_sorted = true;
  bool no_long_edges = true;
  bool cycles_ccw = true;
  bool subtree_intervals = true;
  std::vector<std::string> problems;
  bool ok() const { return layers_sorted && no_long_edges && cycles_ccw && subtree_intervals; }
};

LayerReport verify_layer_lemmas(const LayeredOrder& lo, const Graph& g);

// rows x cols grid graph; vertex (x, y) has index y * cols + x. Packed faces
// have lower-left corners (ox + stride a, oy + stride b).
PlanarEmbedding grid_embedding(int rows, int cols, int stride = 2, int ox = 0, int oy = 0);

}  // namespace tww
