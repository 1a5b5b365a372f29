#include "support.hpp"
#include "tww/generators.hpp"
#include "tww/orders.hpp"

#include <doctest.h>

#include <set>

using namespace tww;

namespace {

struct NaiveTree {
  std::vector<int> parent;

  explicit NaiveTree(const TreeModel& tm) : parent(tm.nodes, -1) {
    for (auto [a, b] : tm.arcs) parent[b] = a;
  }
  bool ancestor(int a, int b) const {
    for (int x = b; x != -1; x = parent[x])
      if (x == a) return true;
    return false;
  }
  int lca(int a, int b) const {
    for (int x = a; x != -1; x = parent[x])
      if (ancestor(x, b)) return x;
    return -1;
  }
  std::set<int> path(int high, int low) const {
    std::set<int> out;
    for (int x = low;; x = parent[x]) {
      out.insert(x);
      if (x == high) break;
    }
    return out;
  }
};

// Direct transcription of both no-zigzag observations over all triples.
std::pair<int, int> naive_violations(const TreeModel& tm, const VertexOrder& ord) {
  NaiveTree t(tm);
  int n = ord.size(), first = 0, second = 0;
  auto low = [&](int p) { return tm.paths[ord.at(p)].low; };
  for (int x = 0; x < tm.nodes; ++x)
    for (int y = 0; y < tm.nodes; ++y)
      for (int z = 0; z < tm.nodes; ++z) {
        if (y == z || t.parent[y] != x || t.parent[z] != x) continue;
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
              if (t.ancestor(y, low(a)) && t.ancestor(z, low(b)) && t.ancestor(y, low(c))) ++first;
      }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        int uw = t.lca(low(a), low(c));
        if (!t.ancestor(uw, t.lca(low(b), low(c))) || !t.ancestor(uw, t.lca(low(a), low(b)))) ++second;
      }
  return {first, second};
}

bool naive_minimal(const TreeModel& tm) {
  NaiveTree t(tm);
  std::vector<std::set<int>> at(tm.nodes);
  for (size_t u = 0; u < tm.paths.size(); ++u)
    for (int x : t.path(tm.paths[u].high, tm.paths[u].low)) at[x].insert(static_cast<int>(u));
  for (int p = 0; p < tm.nodes; ++p) {
    int q = t.parent[p];
    if (q < 0) continue;
    if (std::includes(at[q].begin(), at[q].end(), at[p].begin(), at[p].end())) return false;
    if (std::includes(at[p].begin(), at[p].end(), at[q].begin(), at[q].end())) return false;
  }
  return true;
}

Graph naive_path_graph(const TreeModel& tm) {
  NaiveTree t(tm);
  std::vector<std::string> labels;
  std::vector<std::set<int>> sets;
  for (const auto& p : tm.paths) {
    labels.push_back(p.label);
    sets.push_back(t.path(p.high, p.low));
  }
  Graph g(labels);
  for (size_t a = 0; a < sets.size(); ++a)
    for (size_t b = a + 1; b < sets.size(); ++b)
      for (int x : sets[a])
        if (sets[b].count(x)) {
          g.add_edge(static_cast<int>(a), static_cast<int>(b));
          break;
        }
  return g;
}

}  // namespace

TEST_CASE("interval lex order sorts by left then right endpoint") {
  IntervalModel m{{{"c", 2, 5}, {"a", 0, 3}, {"b", 2, 4}, {"d", 2, 4}}};
  auto ord = interval_lex_order(m);
  CHECK(ord.perm() == std::vector<int>{1, 2, 3, 0});
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    IntervalModel r = gen_random_intervals(30, seed);
    auto o = interval_lex_order(r);
    for (int p = 0; p + 1 < o.size(); ++p) {
      const auto& x = r.intervals[o.at(p)];
      const auto& y = r.intervals[o.at(p + 1)];
      CHECK((x.l < y.l || (x.l == y.l && (x.r < y.r || (x.r == y.r && x.label < y.label)))));
    }
  }
}

TEST_CASE("start intervals cover the left endpoints of each part") {
  IntervalModel m{{{"a", 1, 9}, {"b", 4, 5}, {"c", 3, 3}, {"d", 7, 8}}};
  auto s = start_intervals(m, {{0, 1, 2}, {3}});
  REQUIRE(s.size() == 2);
  CHECK(s[0] == std::pair<long long, long long>{1, 4});
  CHECK(s[1] == std::pair<long long, long long>{7, 7});
  CHECK_THROWS_AS(start_intervals(m, {{}}), Error);
}

TEST_CASE("tree model validation") {
  auto ok = TreeModel::from_parents({-1, 0, 0, 1}, {{"x", 0, 3}, {"y", 2, 2}});
  CHECK_NOTHROW(validate_tree_model(ok));
  CHECK(ok.rooted());
  CHECK(ok.path_nodes()[0] == std::vector<int>{0, 1, 3});

  TreeModel two_roots;
  two_roots.nodes = 3;
  two_roots.arcs = {{0, 1}, {2, 1}};
  two_roots.paths = {{"x", 0, 1}};
  CHECK_NOTHROW(validate_tree_model(two_roots));
  CHECK_FALSE(two_roots.rooted());
  CHECK_THROWS_AS(two_roots.parents(), Error);
  CHECK_THROWS_AS(rdp_lex_dfs(two_roots), Error);

  auto upward = TreeModel::from_parents({-1, 0}, {{"x", 1, 0}});
  CHECK_THROWS_AS(validate_tree_model(upward), Error);
  auto dup = TreeModel::from_parents({-1, 0}, {{"x", 0, 1}, {"x", 1, 1}});
  CHECK_THROWS_AS(validate_tree_model(dup), Error);
  TreeModel cyc;
  cyc.nodes = 3;
  cyc.arcs = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(validate_tree_model(cyc), Error);
}

TEST_CASE("path graphs agree with node-set intersection") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    TreeModel tm = gen_random_tree_model(20, 16, seed);
    CHECK(tree_model_graph(tm) == naive_path_graph(tm));
  }
}

TEST_CASE("minimized models keep the graph and have witnesses everywhere") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    TreeModel tm = gen_random_tree_model(25, 18, seed);
    TreeModel mm = minimize_tree_model(tm);
    CHECK(mm.rooted());
    CHECK(tree_model_graph(mm) == tree_model_graph(tm));
    CHECK(naive_minimal(mm));
    CHECK(is_minimal(mm) == naive_minimal(mm));
    CHECK(is_minimal(tm) == naive_minimal(tm));
    NaiveTree t(mm);
    for (const auto& e : minimality_check(mm)) {
      REQUIRE(e.ok());
      CHECK(mm.paths[*e.starts_here].high == e.node);
      auto nodes = t.path(mm.paths[*e.leaves_parent].high, mm.paths[*e.leaves_parent].low);
      CHECK(nodes.count(t.parent[e.node]) == 1);
      CHECK(nodes.count(e.node) == 0);
    }
  }
}

TEST_CASE("lex-DFS order has no zigzag") {
  int fallbacks = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    TreeModel tm = minimize_tree_model(gen_random_tree_model(30, 20, seed));
    auto res = rdp_lex_dfs(tm);
    fallbacks += res.label_fallbacks;
    auto rep = verify_rdp_order(tm, res.order);
    CHECK(rep.ok());
    auto [first, second] = naive_violations(tm, res.order);
    CHECK(first == 0);
    CHECK(second == 0);
  }
  MESSAGE("sibling label fallbacks: " << fallbacks);
}

TEST_CASE("the zigzag detectors find planted violations") {
  auto tm = TreeModel::from_parents({-1, 0, 0}, {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 1}});
  VertexOrder bad(std::vector<int>{0, 1, 2});
  auto rep = verify_rdp_order(tm, bad);
  CHECK_FALSE(rep.obs1.empty());
  auto [first, second] = naive_violations(tm, bad);
  CHECK(first > 0);
  CHECK(rep.obs1.size() > 0);
  CHECK((rep.obs2.size() > 0) == (second > 0));

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    TreeModel m = minimize_tree_model(gen_random_tree_model(20, 14, seed));
    std::vector<int> perm(m.paths.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    VertexOrder shuffled(perm);
    auto r = verify_rdp_order(m, shuffled);
    auto [f, s] = naive_violations(m, shuffled);
    CHECK(r.obs2.size() == static_cast<size_t>(s));
    CHECK(r.obs1.empty() == (f == 0));
  }
  auto small = TreeModel::from_parents({-1, 0}, {{"a", 0, 1}, {"b", 1, 1}});
  CHECK(verify_rdp_order(small, VertexOrder::identity(2)).ok());
}

TEST_CASE("non-minimal models are refused unless forced") {
  auto tm = TreeModel::from_parents({-1, 0}, {{"a", 0, 1}});
  CHECK_FALSE(is_minimal(tm));
  CHECK_THROWS_AS(rdp_lex_dfs(tm), Error);
  CHECK_NOTHROW(rdp_lex_dfs(tm, true));
  CHECK(minimize_tree_model(tm).nodes == 1);
}
