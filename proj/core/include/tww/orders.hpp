#pragma once

#include "tww/geometry.hpp"
#include "tww/graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tww {

// An oriented tree with one directed path per graph vertex. Rooted models
// have a single source and in-degree at most one everywhere.
struct TreeModel {
  struct Path {
    std::string label;
    int high = 0;
    int low = 0;
  };
  int nodes = 0;
  std::vector<std::pair<int, int>> arcs;
  std::vector<Path> paths;

  static TreeModel from_parents(const std::vector<int>& parent, std::vector<Path> paths);
  bool rooted() const;
  // Parent per node (-1 for the root); throws unless rooted.
  std::vector<int> parents() const;
  // Nodes of each path from high to low; throws if a path is not directed.
  std::vector<std::vector<int>> path_nodes() const;
};

void validate_tree_model(const TreeModel& tm);
Graph tree_model_graph(const TreeModel& tm);

VertexOrder interval_lex_order(const IntervalModel& model);
// [min l, max l] per part.
std::vector<std::pair<long long, long long>> start_intervals(const IntervalModel& model,
                                                             const std::vector<std::vector<int>>& parts);

struct MinimalityEntry {
  int node = 0;
  std::optional<int> starts_here;     // vertex whose path starts at node
  std::optional<int> leaves_parent;   // vertex whose path has the parent but not node
  bool ok() const { return starts_here && leaves_parent; }
};

std::vector<MinimalityEntry> minimality_check(const TreeModel& tm);
bool is_minimal(const TreeModel& tm);
// Contracts nodes into their parents until every non-root node is witnessed.
TreeModel minimize_tree_model(const TreeModel& tm);

struct RdpOrder {
  VertexOrder order;
  std::vector<int> dfs_post;   // processing time per node
  int label_fallbacks = 0;     // sibling choices decided by label order
};

RdpOrder rdp_lex_dfs(const TreeModel& tm, bool force = false);
VertexOrder rdp_lex_dfs_order(const TreeModel& tm, bool force = false);

struct RdpReport {
  std::vector<std::array<int, 3>> obs1;
  std::vector<std::array<int, 3>> obs2;
  bool ok() const { return obs1.empty() && obs2.empty(); }
};

RdpReport verify_rdp_order(const TreeModel& tm, const VertexOrder& ord, size_t limit = 0);

struct SegmentOrder {
  Splitting splitting;
  VertexOrder order;
  std::vector<int> block;  // block index per vertex of the splitting
  long long columns = 0;   // cells per column of the bounding box (M)
  long long rows = 0;      // N
};

SegmentOrder segment_global_order(const SegmentScene& scene, const GridSpec& grid);
// Block pairs joined by an edge whose index difference is not 0, 1 or M.
std::vector<std::pair<int, int>> off_diagonal_blocks(const SegmentOrder& so);

}  // namespace tww
