#include "support.hpp"
#include "tww/planar.hpp"

#include <doctest.h>

#include <deque>

using namespace tww;

namespace {

std::vector<int> bfs_distance(const Graph& g, int root) {
  std::vector<int> d(g.size(), -1);
  std::deque<int> q{root};
  d[root] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u = 0; u < g.size(); ++u)
      if (g.adjacent(v, u) && d[u] < 0) {
        d[u] = d[v] + 1;
        q.push_back(u);
      }
  }
  return d;
}

void check_layers_by_hand(const LayeredOrder& lo) {
  const Graph& g = lo.graph;
  for (int p = 0; p + 1 < lo.order.size(); ++p) CHECK(lo.layer[lo.order.at(p)] <= lo.layer[lo.order.at(p + 1)]);
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (g.adjacent(u, v)) CHECK(std::abs(lo.layer[u] - lo.layer[v]) <= 2);
  for (int v = 0; v < g.size(); ++v) {
    if (lo.parent[v] < 0) continue;
    CHECK(g.adjacent(v, lo.parent[v]));
    CHECK(lo.order.before(lo.parent[v], v));
    CHECK(lo.layer[v] == lo.layer[lo.parent[v]] + (lo.explored[v] ? 1 : 0));
  }
  for (const auto& cyc : lo.cycles) {
    int len = static_cast<int>(cyc.size());
    int first = 0;
    for (int i = 1; i < len; ++i)
      if (lo.order.before(cyc[i], cyc[first])) first = i;
    for (int i = 0; i + 1 < len; ++i)
      CHECK(lo.order.before(cyc[(first + i) % len], cyc[(first + i + 1) % len]));
  }
}

}  // namespace

TEST_CASE("grid embeddings are planar with the expected faces") {
  for (int r = 2; r <= 6; ++r)
    for (int c = 2; c <= 6; ++c) {
      auto emb = grid_embedding(r, c);
      CHECK_NOTHROW(validate_embedding(emb));
      CHECK(face_count(emb) == (r - 1) * (c - 1) + 1);
      CHECK(static_cast<int>(emb.facial_cycles.size()) == (r / 2) * (c / 2));
    }
  CHECK_THROWS_AS(grid_embedding(0, 3), Error);
  CHECK_THROWS_AS(grid_embedding(3, 3, 1), Error);
}

TEST_CASE("broken embeddings are rejected") {
  Graph k5 = Graph::numbered(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5.add_edge(i, j);
  PlanarEmbedding emb{k5, std::vector<std::vector<int>>(5), {}};
  for (int v = 0; v < 5; ++v)
    for (int u = 0; u < 5; ++u)
      if (u != v) emb.rotation[v].push_back(u);
  CHECK_THROWS_AS(validate_embedding(emb), Error);

  auto grid = grid_embedding(3, 3);
  auto cw = grid;
  std::reverse(cw.facial_cycles[0].begin(), cw.facial_cycles[0].end());
  CHECK_THROWS_AS(validate_embedding(cw), Error);
  auto overlap = grid;
  overlap.facial_cycles.push_back({1, 2, 5, 4});
  CHECK_THROWS_AS(validate_embedding(overlap), Error);
  auto missing = grid;
  missing.rotation[0].pop_back();
  CHECK_THROWS_AS(validate_embedding(missing), Error);
}

TEST_CASE("facial order on grid embeddings satisfies the layer lemmas") {
  int runs = 0;
  for (int r = 3; r <= 7; ++r)
    for (int c : {3, 6}) {
      auto emb = grid_embedding(r, c, 2, (r + c) % 2, 0);
      for (int root : {0, r * c - 1, (r / 2) * c + c / 2}) {
        auto lo = planar_facial_order(emb, root);
        CHECK(lo.order.size() == r * c);
        auto rep = verify_layer_lemmas(lo, emb.graph);
        CHECK(rep.ok());
        check_layers_by_hand(lo);
        ++runs;
      }
      auto with_faces = planar_facial_order(emb, 0, true);
      CHECK(with_faces.graph.size() == r * c + static_cast<int>(emb.facial_cycles.size()));
      CHECK(verify_layer_lemmas(with_faces, with_faces.graph).ok());
      check_layers_by_hand(with_faces);
    }
  CHECK(runs == 30);
}

TEST_CASE("without faces the order is breadth first") {
  // A tree: layers are plain distances.
  Graph t = Graph::numbered(7);
  PlanarEmbedding emb{t, std::vector<std::vector<int>>(7), {}};
  auto link = [&](int a, int b) {
    emb.graph.add_edge(a, b);
    emb.rotation[a].push_back(b);
    emb.rotation[b].push_back(a);
  };
  link(0, 1);
  link(0, 2);
  link(1, 3);
  link(1, 4);
  link(2, 5);
  link(5, 6);
  auto lo = planar_facial_order(emb, 0);
  auto d = bfs_distance(emb.graph, 0);
  for (int v = 0; v < 7; ++v) CHECK(lo.layer[v] == d[v]);
  CHECK(verify_layer_lemmas(lo, emb.graph).ok());

  auto grid = grid_embedding(4, 5);
  grid.facial_cycles.clear();
  auto g = planar_facial_order(grid, 0);
  auto dist = bfs_distance(grid.graph, 0);
  for (int v = 0; v < grid.graph.size(); ++v) CHECK(g.layer[v] == dist[v]);
}

TEST_CASE("a single facial cycle collapses into the root layer") {
  PlanarEmbedding emb{Graph::numbered(6), std::vector<std::vector<int>>(6), {{0, 1, 2, 3, 4, 5}}};
  for (int i = 0; i < 6; ++i) {
    int j = (i + 1) % 6;
    emb.graph.add_edge(i, j);
    emb.rotation[i] = {j, (i + 5) % 6};
  }
  auto lo = planar_facial_order(emb, 2);
  CHECK(lo.order.perm() == std::vector<int>{2, 3, 4, 5, 0, 1});
  for (int v = 0; v < 6; ++v) CHECK(lo.layer[v] <= 1);
  CHECK(verify_layer_lemmas(lo, emb.graph).ok());
  CHECK_THROWS_AS(planar_facial_order(emb, 9), Error);
}

TEST_CASE("disconnected embeddings are rejected") {
  PlanarEmbedding emb{Graph::numbered(4), std::vector<std::vector<int>>(4), {}};
  emb.graph.add_edge(0, 1);
  emb.rotation[0] = {1};
  emb.rotation[1] = {0};
  emb.graph.add_edge(2, 3);
  emb.rotation[2] = {3};
  emb.rotation[3] = {2};
  CHECK_THROWS_AS(planar_facial_order(emb, 0), Error);
}
