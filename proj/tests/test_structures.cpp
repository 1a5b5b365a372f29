#include "support.hpp"
#include "tww/generators.hpp"
#include "tww/structures.hpp"

#include <doctest.h>

using namespace tww;

namespace {

bool lex_le(int i, int j, int i2, int j2) { return i < i2 || (i == i2 && j <= j2); }

bool is_clique(const Graph& g, const std::vector<int>& vs) {
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

int brute_alpha(const Graph& g) {
  int n = g.size(), best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u, v)) ok = false;
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

int brute_monotone(const std::vector<Rational>& seq) {
  int n = static_cast<int>(seq.size()), best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Rational> sub;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(seq[i]);
    bool up = std::is_sorted(sub.begin(), sub.end());
    bool down = std::is_sorted(sub.rbegin(), sub.rend());
    if (up || down) best = std::max(best, static_cast<int>(sub.size()));
  }
  return best;
}

}  // namespace

TEST_CASE("generated half-graph and matching") {
  auto h = generate(BipPattern{BipPattern::Kind::half_graph, 9, 0});
  CHECK(h.graph.size() == 18);
  CHECK(h.graph.edge_count() == 45);
  auto m = generate(BipPattern{BipPattern::Kind::matching, 1, 0});
  CHECK(m.graph.size() == 2);
  CHECK(m.graph.edge_count() == 1);
  auto k = generate(BipPattern{BipPattern::Kind::biclique, 3, 0});
  CHECK(k.graph.edge_count() == 9);
  auto am = generate(BipPattern{BipPattern::Kind::anti_matching, 3, 0});
  CHECK(am.graph.edge_count() == 6);
}

TEST_CASE("generated transversal pair follows the lexicographic rules") {
  auto tp = generate(BipPattern{BipPattern::Kind::transversal_pair, 2, 0});
  REQUIRE(tp.witness.columns.size() == 3);
  const auto& a = tp.witness.columns[0];
  const auto& b = tp.witness.columns[1];
  const auto& c = tp.witness.columns[2];
  CHECK(a.size() == 4);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      int i = x / 2, j = x % 2, i2 = y / 2, j2 = y % 2;
      CHECK(tp.graph.adjacent(a[x], b[y]) == lex_le(i, j, i2, j2));
      CHECK(tp.graph.adjacent(b[x], c[y]) == lex_le(j, i, j2, i2));
      CHECK_FALSE(tp.graph.adjacent(a[x], c[y]));
    }
  // Longer pairs route the middle through paths b^0 - b^1 - ... only.
  auto tp2 = generate(BipPattern{BipPattern::Kind::transversal_pair, 2, 2});
  REQUIRE(tp2.witness.columns.size() == 5);
  for (int col = 1; col + 1 < 4; ++col)
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        CHECK(tp2.graph.adjacent(tp2.witness.columns[col][x], tp2.witness.columns[col + 1][y]) == (x == y));
}

TEST_CASE("find_semi_induced round trips") {
  for (auto kind : {BipPattern::Kind::biclique, BipPattern::Kind::half_graph, BipPattern::Kind::matching,
                    BipPattern::Kind::anti_matching, BipPattern::Kind::transversal_pair})
    for (int t = 1; t <= 3; ++t)
      for (int ell = 0; ell <= (kind == BipPattern::Kind::transversal_pair ? 2 : 0); ++ell) {
        if (kind == BipPattern::Kind::transversal_pair && t == 3 && ell > 0) continue;
        BipPattern p{kind, t, ell};
        auto gen = generate(p);
        auto w = find_semi_induced(gen.graph, p);
        REQUIRE(w);
        CHECK(verify_witness(gen.graph, *w));
      }
}

TEST_CASE("find_semi_induced plant-and-find and negatives") {
  std::mt19937_64 rng(21);
  Graph host = testing::random_graph(16, 0.3, rng);
  std::vector<int> a{1, 4, 6, 9, 13}, b{0, 3, 7, 10, 15};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i <= j)
        host.add_edge(a[i], b[j]);
      else
        host.remove_edge(a[i], b[j]);
    }
  auto w = find_semi_induced(host, BipPattern{BipPattern::Kind::half_graph, 5, 0});
  REQUIRE(w);
  CHECK(verify_witness(host, *w));
  CHECK_FALSE(find_semi_induced(Graph::numbered(6), BipPattern{BipPattern::Kind::biclique, 1, 0}));
  Graph noise = testing::random_graph(40, 0.5, rng);
  CHECK_THROWS_AS(find_semi_induced(noise, BipPattern{BipPattern::Kind::transversal_pair, 3, 0}, Budget::nodes(50)),
                  BudgetExceeded);
}

TEST_CASE("the segment construction has no semi-induced H_4 at n = 4") {
  CHECK_FALSE(find_semi_induced(bn_graph(4), BipPattern{BipPattern::Kind::half_graph, 4, 0}));
  CHECK(find_semi_induced(bn_graph(4), BipPattern{BipPattern::Kind::half_graph, 3, 0}));
}

TEST_CASE("ramsey search") {
  Graph k6 = Graph::numbered(6);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) k6.add_edge(i, j);
  auto r = ramsey_search(k6, 3, 3);
  CHECK(r.found);
  CHECK(r.kind == RamseyResult::Kind::clique);
  CHECK(r.vertices.size() == 3);
  auto e = ramsey_search(Graph::numbered(6), 3, 3);
  CHECK(e.kind == RamseyResult::Kind::independent_set);
  CHECK(e.vertices.size() == 3);

  std::mt19937_64 rng(2);
  for (int round = 0; round < 30; ++round) {
    Graph g = testing::random_graph(10, 0.5, rng);
    auto res = ramsey_search(g, 3, 4);
    REQUIRE(res.found);
    if (res.kind == RamseyResult::Kind::clique) {
      CHECK(res.vertices.size() == 3);
      CHECK(is_clique(g, res.vertices));
    } else {
      CHECK(res.vertices.size() == 4);
      for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j) CHECK_FALSE(g.adjacent(res.vertices[i], res.vertices[j]));
    }
  }
}

TEST_CASE("every graph on six vertices has a triangle or an independent triple") {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) pairs.emplace_back(i, j);
  int failures = 0;
  for (unsigned mask = 0; mask < (1u << 15); ++mask) {
    Graph g = Graph::numbered(6);
    for (int e = 0; e < 15; ++e)
      if (mask >> e & 1) g.add_edge(pairs[e].first, pairs[e].second);
    failures += !ramsey_search(g, 3, 3).found;
  }
  CHECK(failures == 0);
  // Five vertices are not enough: the 5-cycle.
  Graph c5 = Graph::numbered(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK_FALSE(ramsey_search(c5, 3, 3).found);
}

TEST_CASE("maximum independent set and clique agree with brute force") {
  std::mt19937_64 rng(15);
  for (int round = 0; round < 80; ++round) {
    int n = 1 + static_cast<int>(rng() % 14);
    Graph g = testing::random_graph(n, (rng() % 9 + 1) / 10.0, rng);
    auto is = maximum_independent_set(g);
    CHECK(static_cast<int>(is.size()) == brute_alpha(g));
    for (size_t i = 0; i < is.size(); ++i)
      for (size_t j = i + 1; j < is.size(); ++j) CHECK_FALSE(g.adjacent(is[i], is[j]));
    auto cl = maximum_clique(g);
    CHECK(is_clique(g, cl));
  }
}

TEST_CASE("bipartite ramsey search") {
  Matrix ones(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ones.set(i, j);
  auto r1 = bip_ramsey_search(ones, 2, 2);
  CHECK(r1.found);
  CHECK(r1.color == 1);
  auto r0 = bip_ramsey_search(Matrix(3, 3), 2, 2);
  CHECK(r0.found);
  CHECK(r0.color == 0);

  std::mt19937_64 rng(17);
  for (int round = 0; round < 10; ++round) {
    Matrix m = testing::random_matrix(12, 12, 0.5, rng);
    auto res = bip_ramsey_search(m, 3, 3);
    // Brute force over row triples: some three columns agree with the colour on all three rows.
    bool brute = false;
    for (int a = 0; a < 12 && !brute; ++a)
      for (int b = a + 1; b < 12 && !brute; ++b)
        for (int c = b + 1; c < 12 && !brute; ++c)
          for (int colour : {1, 0}) {
            int cnt = 0;
            for (int x = 0; x < 12; ++x)
              cnt += m.get(a, x) == colour && m.get(b, x) == colour && m.get(c, x) == colour;
            if (cnt >= 3) brute = true;
          }
    CHECK(res.found == brute);
    if (res.found)
      for (int r : res.rows)
        for (int c : res.cols) CHECK(m.get(r, c) == (res.color == 1));
  }
}

TEST_CASE("longest monotone subsequences") {
  std::vector<Rational> inc{1, 2, 3, 4, 5};
  auto r = longest_monotone(inc);
  CHECK(r.indices.size() == 5);
  CHECK(r.non_decreasing);
  std::vector<Rational> mixed{3, 1, 4, 1, 5};
  CHECK(static_cast<int>(longest_monotone(mixed).indices.size()) == brute_monotone(mixed));

  std::mt19937_64 rng(19);
  for (int round = 0; round < 200; ++round) {
    int n = static_cast<int>(rng() % 12) + 1;
    std::vector<Rational> seq;
    for (int i = 0; i < n; ++i) seq.push_back(Rational(static_cast<long>(rng() % 6)));
    auto res = longest_monotone(seq);
    CHECK(static_cast<int>(res.indices.size()) == brute_monotone(seq));
    for (size_t i = 1; i < res.indices.size(); ++i) {
      CHECK(res.indices[i - 1] < res.indices[i]);
      if (res.non_decreasing)
        CHECK(seq[res.indices[i - 1]] <= seq[res.indices[i]]);
      else
        CHECK(seq[res.indices[i - 1]] >= seq[res.indices[i]]);
    }
  }
}

TEST_CASE("sequences of length (k-1)^2 + 1 have a monotone run of length k") {
  std::mt19937_64 rng(23);
  for (int k = 2; k <= 4; ++k)
    for (int round = 0; round < 1000; ++round) {
      std::vector<Rational> seq;
      for (int i = 0; i < (k - 1) * (k - 1) + 1; ++i) {
        Rational r(static_cast<long>(rng() % 1000), 7UL);
        r.canonicalize();
        seq.push_back(r);
      }
      CHECK(static_cast<int>(longest_monotone(seq).indices.size()) >= k);
    }
  // The adversarial interleaving of k-1 decreasing blocks.
  std::vector<Rational> adv;
  for (int b = 0; b < 3; ++b)
    for (int x = 2; x >= 0; --x) adv.push_back(Rational(static_cast<long>(3 * b + x)));
  adv.push_back(Rational(100));
  CHECK(longest_monotone(adv).indices.size() >= 4);
}
