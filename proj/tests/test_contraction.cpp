#include "support.hpp"
#include "tww/contraction.hpp"
#include "tww/generators.hpp"
#include "tww/geometry.hpp"

#include <doctest.h>

#include <map>

using namespace tww;

namespace {

using Partition = std::vector<std::vector<int>>;

// Red degree of the quotient: two parts are joined in red when the edges
// between them are neither all present nor all absent.
int quotient_red_degree(const Graph& g, const Partition& p) {
  int best = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    int red = 0;
    for (size_t j = 0; j < p.size(); ++j) {
      if (i == j) continue;
      bool some = false, all = true;
      for (int u : p[i])
        for (int v : p[j]) {
          bool e = g.adjacent(u, v);
          some = some || e;
          all = all && e;
        }
      red += some && !all;
    }
    best = std::max(best, red);
  }
  return best;
}

Partition canonical(Partition p) {
  for (auto& part : p) std::sort(part.begin(), part.end());
  std::sort(p.begin(), p.end());
  return p;
}

int brute_twinwidth(const Graph& g, const Partition& p, std::map<Partition, int>& memo) {
  if (p.size() <= 1) return 0;
  auto it = memo.find(p);
  if (it != memo.end()) return it->second;
  int best = g.size();
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j) {
      Partition q;
      for (size_t x = 0; x < p.size(); ++x)
        if (x != i && x != j) q.push_back(p[x]);
      auto merged = p[i];
      merged.insert(merged.end(), p[j].begin(), p[j].end());
      q.push_back(merged);
      q = canonical(q);
      best = std::min(best, std::max(quotient_red_degree(g, q), brute_twinwidth(g, q, memo)));
    }
  memo[p] = best;
  return best;
}

int brute_twinwidth(const Graph& g) {
  Partition p;
  for (int v = 0; v < g.size(); ++v) p.push_back({v});
  std::map<Partition, int> memo;
  return brute_twinwidth(g, canonical(p), memo);
}

Graph path(int n) {
  Graph g = Graph::numbered(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  Graph g = Graph::numbered(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

void check_trigraph(const Trigraph& t) {
  for (int a : t.vertices())
    for (int b : t.vertices()) {
      CHECK_FALSE((t.black(a, b) && t.red(a, b)));
      CHECK(t.black(a, b) == t.black(b, a));
      CHECK(t.red(a, b) == t.red(b, a));
      if (a == b) CHECK_FALSE((t.black(a, a) || t.red(a, a)));
    }
}

}  // namespace

TEST_CASE("contracting e and f in the seven-vertex example") {
  Graph g = seven_vertex_example();
  Trigraph t(g);
  int ef = t.contract(g.index_of("e"), g.index_of("f"));
  CHECK(t.class_name(ef) == "e.f");
  std::vector<std::string> red;
  for (int v : t.vertices())
    if (t.red(ef, v)) red.push_back(t.class_name(v));
  std::sort(red.begin(), red.end());
  CHECK(red == std::vector<std::string>{"a", "d"});
  CHECK(t.red_degree(ef) == 2);
  t.contract(t.class_of_name("a"), t.class_of_name("d"));
  t.contract(t.class_of_name("b"), t.class_of_name("e.f"));
  CHECK(t.max_red_degree() == 2);
  check_trigraph(t);
}

TEST_CASE("twins and tiny graphs") {
  Graph g = Graph::numbered(4);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  Trigraph t(g);
  t.contract(0, 1);
  CHECK(t.max_red_degree() == 0);
  Graph two = complete(2);
  Trigraph k2(two);
  k2.contract(0, 1);
  CHECK(k2.size() == 1);
  CHECK(k2.max_red_degree() == 0);
  Graph five = complete(5);
  CHECK(Trigraph(five).max_red_degree() == 0);
}

TEST_CASE("red degree after contracting a leaf with the centre of a star") {
  Graph star = Graph::numbered(6);
  for (int i = 1; i < 6; ++i) star.add_edge(0, i);
  Trigraph t(star);
  t.contract(1, 2);
  CHECK(t.max_red_degree() == 0);
  int c = t.contract(0, 3);
  Partition p{{0, 3}, {1, 2}, {4}, {5}};
  CHECK(t.max_red_degree() == quotient_red_degree(star, p));
  CHECK(t.red_degree(c) == 3);
}

TEST_CASE("verify_sequence") {
  CHECK(verify_sequence(seven_vertex_example(), seven_vertex_sequence()) == 2);
  CHECK(verify_sequence(Graph::numbered(1), ContractionSequence{}) == 0);
  ContractionSequence short_seq{{{"v0", "v1"}}};
  CHECK_THROWS_AS(verify_sequence(path(3), short_seq), Error);
  ContractionSequence dangling{{{"v0", "v7"}, {"v0", "v1"}}};
  CHECK_THROWS_AS(verify_sequence(path(3), dangling), Error);
}

TEST_CASE("exact twin-width on small graphs") {
  CHECK(exact_twinwidth(Graph::numbered(1)).value == 0);
  // Paths on four vertices have no twins, so some contraction creates red.
  CHECK(exact_twinwidth(path(4)).value == brute_twinwidth(path(4)));
  CHECK(exact_twinwidth(path(4)).value == 1);
  auto seven = exact_twinwidth(seven_vertex_example());
  CHECK(seven.value == 2);
  CHECK(verify_sequence(seven_vertex_example(), seven.sequence) == 2);
  CHECK(brute_twinwidth(seven_vertex_example()) == 2);
  CHECK_THROWS_AS(exact_twinwidth(Graph::numbered(11)), Error);
}

TEST_CASE("exact twin-width matches an independent partition search") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 60; ++round) {
    int n = 2 + static_cast<int>(rng() % 6);
    Graph g = testing::random_graph(n, 0.5, rng);
    auto r = exact_twinwidth(g);
    CHECK(r.value == brute_twinwidth(g));
    CHECK(verify_sequence(g, r.sequence) == r.value);
  }
}

TEST_CASE("intermediate trigraphs stay well formed") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 20; ++round) {
    Graph g = testing::random_graph(9, 0.4, rng);
    Trigraph t(g);
    while (t.size() > 1) {
      auto vs = t.vertices();
      int a = vs[rng() % vs.size()], b = vs[rng() % vs.size()];
      if (a == b) continue;
      t.contract(a, b);
      check_trigraph(t);
      std::vector<int> cls = t.partition();
      Partition p;
      std::map<int, int> slot;
      for (int v = 0; v < g.size(); ++v) {
        if (!slot.count(cls[v])) {
          slot[cls[v]] = static_cast<int>(p.size());
          p.emplace_back();
        }
        p[slot[cls[v]]].push_back(v);
      }
      CHECK(t.max_red_degree() == quotient_red_degree(g, p));
    }
  }
}

TEST_CASE("dyadic contraction") {
  auto k1 = dyadic_contract(Graph::numbered(1), VertexOrder::identity(1));
  CHECK(k1.sequence.steps.empty());
  CHECK(k1.value == 0);
  auto k8 = dyadic_contract(complete(8), VertexOrder::identity(8));
  CHECK(k8.value == 0);
  CHECK(k8.sequence.steps.size() == 7);
  auto vis = terrain_visibility(gen_random_terrain(64, 3));
  auto r = dyadic_contract(vis.graph, vis.order);
  CHECK(r.sequence.steps.size() == 63);
  CHECK(verify_sequence(vis.graph, r.sequence) == r.value);
  CHECK_THROWS_AS(dyadic_contract(complete(3), VertexOrder::identity(2)), Error);
}
