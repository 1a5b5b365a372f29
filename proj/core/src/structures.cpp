#include "tww/structures.hpp"

#include <algorithm>
#include <functional>

namespace tww {

namespace {

std::string column_name(const BipPattern& p, int c) {
  if (p.kind != BipPattern::Kind::transversal_pair) return c == 0 ? "a" : "b";
  if (c == 0) return "a";
  if (c == p.ell + 2) return "c";
  return "b" + std::to_string(c - 1) + "_";
}

std::string entry_name(const BipPattern& p, int c, int x) {
  if (p.kind != BipPattern::Kind::transversal_pair) return column_name(p, c) + std::to_string(x + 1);
  return column_name(p, c) + std::to_string(x / p.t + 1) + "_" + std::to_string(x % p.t + 1);
}

Graph complement(const Graph& g) {
  Graph h(g.labels());
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

// Branch and bound with a greedy colouring bound.
struct CliqueSearch {
  const Graph& g;
  BudgetMeter meter;
  std::vector<int> best, current;
  int target = -1;  // stop as soon as a clique of this size is found

  CliqueSearch(const Graph& g_, const Budget& b) : g(g_), meter(b, "clique search") {}

  void expand(Bitset cand) {
    meter.tick();
    if (current.size() > best.size()) best = current;
    if (target >= 0 && static_cast<int>(best.size()) >= target) return;
    // Colour classes give an upper bound on what cand can still add.
    std::vector<int> order, colour;
    Bitset uncoloured = cand;
    int c = 0;
    while (uncoloured.any()) {
      ++c;
      Bitset q = uncoloured;
      while (q.any()) {
        int v = static_cast<int>(q.find_first());
        q[v] = false;
        q -= g.neighbors(v);
        uncoloured[v] = false;
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current.size() + colour[i] <= best.size()) return;
      if (target >= 0 && static_cast<int>(best.size()) >= target) return;
      int v = order[i];
      current.push_back(v);
      expand(cand & g.neighbors(v));
      current.pop_back();
      cand[v] = false;
    }
  }
};

std::vector<int> clique_search(const Graph& g, const Budget& b, int target) {
  CliqueSearch s(g, b);
  s.target = target;
  Bitset all(g.size());
  all.set();
  s.expand(all);
  std::sort(s.best.begin(), s.best.end());
  return s.best;
}

struct SemiInducedSearch {
  const Graph& g;
  const BipPattern& p;
  BudgetMeter meter;
  int columns, per;
  std::vector<std::vector<std::optional<bool>>> rel;  // slot x slot
  std::vector<int> assigned;

  SemiInducedSearch(const Graph& g_, const BipPattern& p_, const Budget& b)
      : g(g_), p(p_), meter(b, "semi-induced search"), columns(p_.column_count()), per(p_.column_size()) {
    int slots = columns * per;
    rel.assign(slots, std::vector<std::optional<bool>>(slots));
    for (int a = 0; a < slots; ++a)
      for (int b2 = 0; b2 < slots; ++b2)
        if (a != b2) rel[a][b2] = pattern_edge(p, a / per, a % per, b2 / per, b2 % per);
    assigned.assign(slots, -1);
  }

  bool search(std::vector<Bitset> domains, int remaining) {
    if (remaining == 0) return true;
    meter.tick();
    int best = -1;
    size_t best_size = 0;
    for (int s = 0; s < static_cast<int>(domains.size()); ++s) {
      if (assigned[s] >= 0) continue;
      size_t sz = domains[s].count();
      if (sz == 0) return false;
      if (best < 0 || sz < best_size) {
        best = s;
        best_size = sz;
      }
    }
    for (int v : bits_of(domains[best])) {
      assigned[best] = v;
      std::vector<Bitset> next = domains;
      bool dead = false;
      for (int s = 0; s < static_cast<int>(next.size()) && !dead; ++s) {
        if (assigned[s] >= 0) continue;
        next[s][v] = false;
        if (rel[best][s]) {
          if (*rel[best][s]) next[s] &= g.neighbors(v);
          else next[s] -= g.neighbors(v);
        }
        if (next[s].none()) dead = true;
      }
      if (!dead && search(std::move(next), remaining - 1)) return true;
      assigned[best] = -1;
    }
    return false;
  }
};

}  // namespace

GeneratedStructure generate(const BipPattern& p) {
  if (p.t < 1 || p.ell < 0) throw Error("pattern needs t >= 1 and ell >= 0");
  int columns = p.column_count(), per = p.column_size();
  std::vector<std::string> labels;
  StructureWitness w{p, {}};
  for (int c = 0; c < columns; ++c) {
    w.columns.emplace_back();
    for (int x = 0; x < per; ++x) {
      w.columns.back().push_back(static_cast<int>(labels.size()));
      labels.push_back(entry_name(p, c, x));
    }
  }
  Graph g(std::move(labels));
  for (int c = 0; c + 1 < columns; ++c)
    for (int x = 0; x < per; ++x)
      for (int y = 0; y < per; ++y)
        if (pattern_edge(p, c, x, c + 1, y).value_or(false)) g.add_edge(w.columns[c][x], w.columns[c + 1][y]);
  return {std::move(g), std::move(w)};
}

bool verify_witness(const Graph& g, const StructureWitness& w) { return semi_induced_check(g, w.columns, w.kind); }

std::optional<StructureWitness> find_semi_induced(const Graph& g, const BipPattern& p, const Budget& budget) {
  SemiInducedSearch s(g, p, budget);
  int slots = s.columns * s.per;
  if (slots > g.size()) return std::nullopt;
  std::vector<Bitset> domains;
  for (int a = 0; a < slots; ++a) {
    int need_adj = 0, need_non = 0;
    for (int b = 0; b < slots; ++b)
      if (s.rel[a][b]) (*s.rel[a][b] ? need_adj : need_non)++;
    Bitset d(g.size());
    for (int v = 0; v < g.size(); ++v)
      if (g.degree(v) >= need_adj && g.size() - 1 - g.degree(v) >= need_non) d[v] = true;
    domains.push_back(d);
  }
  if (!s.search(std::move(domains), slots)) return std::nullopt;
  StructureWitness w{p, {}};
  for (int c = 0; c < s.columns; ++c) {
    w.columns.emplace_back();
    for (int x = 0; x < s.per; ++x) w.columns.back().push_back(s.assigned[c * s.per + x]);
  }
  if (!verify_witness(g, w)) throw Error("internal: semi-induced search returned an invalid witness");
  return w;
}

std::vector<int> maximum_clique(const Graph& g, const Budget& budget) { return clique_search(g, budget, -1); }

std::vector<int> maximum_independent_set(const Graph& g, const Budget& budget) {
  return clique_search(complement(g), budget, -1);
}

std::optional<std::vector<int>> find_clique(const Graph& g, int size, const Budget& budget) {
  if (size <= 0) return std::vector<int>{};
  auto c = clique_search(g, budget, size);
  if (static_cast<int>(c.size()) < size) return std::nullopt;
  c.resize(size);
  return c;
}

RamseyResult ramsey_search(const Graph& g, int s, int t) {
  if (g.size() < 1) throw Error("ramsey search needs a non-empty graph");
  if (auto c = find_clique(g, s)) return {RamseyResult::Kind::clique, *c, true};
  Graph h = complement(g);
  if (auto i = find_clique(h, t)) return {RamseyResult::Kind::independent_set, *i, true};
  auto c = maximum_clique(g);
  auto i = maximum_clique(h);
  if (c.size() >= i.size()) return {RamseyResult::Kind::clique, c, false};
  return {RamseyResult::Kind::independent_set, i, false};
}

namespace {

// size x size block of the given colour.
std::optional<std::pair<std::vector<int>, std::vector<int>>> mono_block(const Matrix& m, int size, bool colour) {
  if (size <= 0) return std::pair<std::vector<int>, std::vector<int>>{};
  if (size > m.rows() || size > m.cols()) return std::nullopt;
  std::vector<Bitset> rows;
  for (int r = 0; r < m.rows(); ++r) rows.push_back(colour ? m.row(r) : ~m.row(r));
  std::vector<int> chosen;
  std::function<std::optional<Bitset>(int, const Bitset&)> go = [&](int from, const Bitset& common) -> std::optional<Bitset> {
    if (static_cast<int>(chosen.size()) == size) return common;
    for (int r = from; r < m.rows(); ++r) {
      if (m.rows() - r < size - static_cast<int>(chosen.size())) break;
      Bitset next = common & rows[r];
      if (static_cast<int>(next.count()) < size) continue;
      chosen.push_back(r);
      if (auto hit = go(r + 1, next)) return hit;
      chosen.pop_back();
    }
    return std::nullopt;
  };
  Bitset all(m.cols());
  all.set();
  auto common = go(0, all);
  if (!common) return std::nullopt;
  auto cols = bits_of(*common);
  cols.resize(size);
  return std::pair(chosen, cols);
}

}  // namespace

BipRamseyResult bip_ramsey_search(const Matrix& m, int s, int t) {
  if (auto b = mono_block(m, s, true)) return {b->first, b->second, 1, true};
  if (auto b = mono_block(m, t, false)) return {b->first, b->second, 0, true};
  BipRamseyResult best;
  for (int colour : {1, 0}) {
    int q = 1;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> last;
    while (auto b = mono_block(m, q, colour == 1)) {
      last = b;
      ++q;
    }
    if (last && last->first.size() > best.rows.size()) best = {last->first, last->second, colour, false};
  }
  return best;
}

MonotoneResult longest_monotone(const std::vector<Rational>& seq) {
  int n = static_cast<int>(seq.size());
  auto run = [&](bool up) {
    std::vector<int> len(n, 1), prev(n, -1);
    int best = -1;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) {
        bool ok = up ? seq[j] <= seq[i] : seq[j] >= seq[i];
        if (ok && len[j] + 1 > len[i]) {
          len[i] = len[j] + 1;
          prev[i] = j;
        }
      }
      if (best < 0 || len[i] > len[best]) best = i;
    }
    std::vector<int> out;
    for (int i = best; i >= 0; i = prev[i]) out.push_back(i);
    std::reverse(out.begin(), out.end());
    return out;
  };
  auto up = run(true);
  auto down = run(false);
  if (down.size() > up.size()) return {down, false};
  return {up, true};
}

}  // namespace tww
