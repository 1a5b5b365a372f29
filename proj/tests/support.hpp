#pragma once

#include "tww/graph.hpp"
#include "tww/matrix.hpp"

#include <functional>
#include <random>
#include <set>
#include <vector>

namespace testing {

inline tww::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  tww::Graph g = tww::Graph::numbered(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline tww::Matrix random_matrix(int r, int c, double p, std::mt19937_64& rng) {
  tww::Matrix m(r, c);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (coin(rng)) m.set(i, j);
  return m;
}

// Number of distinct rows and columns of a block, by plain string sets.
inline int naive_rank(const tww::Matrix& m, int r0, int r1, int c0, int c1) {
  std::set<std::string> rows, cols;
  for (int i = r0; i < r1; ++i) {
    std::string s;
    for (int j = c0; j < c1; ++j) s += m.get(i, j) ? '1' : '0';
    rows.insert(s);
  }
  for (int j = c0; j < c1; ++j) {
    std::string s;
    for (int i = r0; i < r1; ++i) s += m.get(i, j) ? '1' : '0';
    cols.insert(s);
  }
  return static_cast<int>(std::max(rows.size(), cols.size()));
}

// All ways to cut [0, n) into k non-empty intervals, as start indices.
inline void for_each_cut(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> starts{0};
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(starts.size()) == k) {
      f(starts);
      return;
    }
    int left = k - static_cast<int>(starts.size());
    for (int s = from; s <= n - left; ++s) {
      starts.push_back(s);
      rec(s + 1);
      starts.pop_back();
    }
  };
  if (k <= n) rec(1);
}

inline bool naive_has_division(const tww::Matrix& m, int k) {
  bool found = false;
  for_each_cut(m.rows(), k, [&](const std::vector<int>& rs) {
    if (found) return;
    for_each_cut(m.cols(), k, [&](const std::vector<int>& cs) {
      if (found) return;
      for (int a = 0; a < k; ++a) {
        int r1 = a + 1 < k ? rs[a + 1] : m.rows();
        for (int b = 0; b < k; ++b) {
          int c1 = b + 1 < k ? cs[b + 1] : m.cols();
          if (naive_rank(m, rs[a], r1, cs[b], c1) < k) return;
        }
      }
      found = true;
    });
  });
  return found;
}

inline int naive_grid_rank(const tww::Matrix& m) {
  int best = 0;
  for (int k = 1; k <= std::min(m.rows(), m.cols()); ++k)
    if (naive_has_division(m, k)) best = k;
  return best;
}

}  // namespace testing
