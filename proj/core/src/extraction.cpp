#include "tww/extraction.hpp"

#include "tww/orders.hpp"

#include <algorithm>
#include <set>

namespace tww {

namespace {

struct Window {
  int lo = 0;
  int hi = 0;
};

// Greedy row parts below `limit`, each reaching into every window.
std::vector<std::pair<int, int>> row_parts(const std::vector<int>& reach, const std::vector<long long>& left,
                                           const std::vector<Window>& windows, int limit, int want) {
  std::vector<std::pair<int, int>> parts;
  unsigned full = (1u << windows.size()) - 1;
  int start = 0;
  unsigned covered = 0;
  for (int p = 0; p < limit && static_cast<int>(parts.size()) < want; ++p) {
    for (size_t w = 0; w < windows.size(); ++w)
      if (windows[w].lo <= reach[p] && reach[p] <= windows[w].hi) covered |= 1u << w;
    if (covered == full) {
      parts.emplace_back(start, p + 1);
      int next = p + 1;
      while (next < limit && left[next] == left[p]) ++next;
      start = next;
      p = next - 1;
      covered = 0;
    }
  }
  return parts;
}

}  // namespace

std::optional<TransversalInput> interval_division_prepare(const Graph& g, const IntervalModel& model, int t,
                                                          const Budget& budget) {
  if (t < 1) throw Error("t must be positive");
  if (!(interval_graph(model) == g)) throw Error("model does not represent the graph");
  int want = t * t;
  if (want > 16) throw Error("t is too large for the prepare search");
  VertexOrder ord = interval_lex_order(model);
  int n = g.size();
  std::vector<int> reach(n);
  std::vector<long long> left(n);
  for (int p = 0; p < n; ++p) {
    left[p] = model.intervals[ord.at(p)].l;
    reach[p] = p;
    for (int q = p + 1; q < n && g.adjacent(ord.at(p), ord.at(q)); ++q) reach[p] = q;
  }
  BudgetMeter meter(budget, "interval prepare");
  std::vector<Window> windows;
  std::vector<std::pair<int, int>> cols;
  std::optional<TransversalInput> found;

  auto dfs = [&](auto&& self, int from) -> bool {
    int y = static_cast<int>(cols.size());
    if (y == want) {
      auto rows = row_parts(reach, left, windows, cols[0].first, want);
      if (static_cast<int>(rows.size()) < want) return false;
      TransversalInput in;
      in.t = t;
      for (auto [a, b] : rows) {
        in.first.emplace_back();
        for (int p = a; p < b; ++p) in.first.back().push_back(ord.at(p));
      }
      for (auto [a, b] : cols) {
        in.second.emplace_back();
        for (int p = a; p < b; ++p) in.second.back().push_back(ord.at(p));
      }
      found = std::move(in);
      return true;
    }
    for (int q = from; q + 2 * (want - y) <= n; ++q) {
      if (left[q] == left[q - 1] && (y == 0 || q == from)) continue;
      if (y > 0 && left[q] <= left[cols.back().second - 1]) continue;
      for (int q2 = q + 2; q2 + 2 * (want - y - 1) <= n; ++q2) {
        meter.tick();
        windows.push_back(Window{q, q2 - 2});
        cols.emplace_back(q, q2);
        int limit = cols[0].first;
        bool ok = static_cast<int>(row_parts(reach, left, windows, limit, want).size()) == want;
        if (ok && self(self, q2)) return true;
        windows.pop_back();
        cols.pop_back();
      }
    }
    return false;
  };
  try {
    dfs(dfs, 1);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
  return found;
}

TransversalExtraction interval_transversal_extract(const Graph& g, const IntervalModel& model,
                                                   const TransversalInput& in) {
  int t = in.t;
  int m = t * t;
  if (t < 1) throw Error("t must be positive");
  if (static_cast<int>(in.first.size()) != m || static_cast<int>(in.second.size()) != m)
    throw Error("expected t^2 parts in each family");
  if (!(interval_graph(model) == g)) throw Error("model does not represent the graph");
  if (!has_minimality_property(model)) throw Error("interval model is not minimal");
  std::set<int> seen;
  for (const auto* fam : {&in.first, &in.second})
    for (const auto& part : *fam) {
      if (part.empty()) throw Error("empty part");
      for (int v : part)
        if (!seen.insert(v).second) throw Error("parts are not disjoint");
    }
  auto s1 = start_intervals(model, in.first);
  auto s2 = start_intervals(model, in.second);
  for (int i = 0; i + 1 < m; ++i) {
    if (!(s1[i].second < s1[i + 1].first)) throw Error("start interval of first part " + std::to_string(i + 2) + " is not after its predecessor");
    if (!(s2[i].second < s2[i + 1].first)) throw Error("start interval of second part " + std::to_string(i + 2) + " is not after its predecessor");
  }
  if (!(s1.back().second <= s2.front().first)) throw Error("first family does not start before the second");

  VertexOrder ord = interval_lex_order(model);
  auto sorted = [&](const std::vector<int>& part) { return ord.sorted(part); };
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      auto rows = sorted(in.first[x]);
      auto cols = sorted(in.second[y]);
      Matrix z(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
      for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c)
          if (g.adjacent(rows[r], cols[c])) z.set(static_cast<int>(r), static_cast<int>(c));
      if (cell_rank(z, Interval{0, z.rows()}, Interval{0, z.cols()}) < 2)
        throw Error("zone (" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ") has rank below 2");
    }
  // Each row of the first family is 1 up to some part of the second family and 0 after it.
  for (const auto& part : in.first)
    for (int b : part)
      for (int k = 0; k < m; ++k)
        for (int a : in.second[k])
          for (int j = 0; j < m; ++j)
            for (int a2 : in.second[j]) {
              if (j < k && g.adjacent(b, a) && !g.adjacent(b, a2)) throw Error("property P1 fails");
              if (j > k && !g.adjacent(b, a) && g.adjacent(b, a2)) throw Error("property P2 fails");
            }

  TransversalExtraction res;
  std::vector<int> a_of(m), b_of(m), c_of(m);
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= t; ++j) {
      int idx = (i - 1) * t + (j - 1);
      auto rows = sorted(in.first[(j - 1) * t + i - 1]);
      auto cols = sorted(in.second[(i - 1) * t + j - 1]);
      int nc = static_cast<int>(cols.size());
      bool done = false;
      for (int b : rows) {
        for (int x = 0; x + 1 < nc && !done; ++x)
          if (g.adjacent(b, cols[x]) && !g.adjacent(b, cols[x + 1])) {
            b_of[idx] = b;
            a_of[idx] = cols[x];
            done = true;
          }
        if (done) break;
      }
      for (size_t r = 0; r < rows.size() && !done; ++r)
        for (int x = 1; x < nc && !done; ++x)
          if (g.adjacent(rows[r], cols[x]) && !g.adjacent(rows[r], cols[x - 1])) {
            b_of[idx] = rows[r];
            a_of[idx] = cols[x];
            ++res.left_neighbour_fallbacks;
            done = true;
          }
      if (!done)
        throw Error("zone (" + std::to_string((j - 1) * t + i) + "," + std::to_string((i - 1) * t + j) +
                    ") has no row with consecutive 1 and 0");
    }

  const auto& iv = model.intervals;
  std::set<int> used(a_of.begin(), a_of.end());
  used.insert(b_of.begin(), b_of.end());
  for (int idx = 0; idx < m; ++idx) {
    long long lb = iv[b_of[idx]].l;
    std::optional<long long> next;
    for (int b : b_of)
      if (iv[b].l > lb && (!next || iv[b].l < *next)) next = iv[b].l;
    auto exact = [&](int v) {
      for (int b : b_of)
        if (g.adjacent(v, b) != (iv[b].l <= lb)) return false;
      return true;
    };
    std::optional<int> pick;
    for (int v = 0; v < g.size() && !pick; ++v)
      if (!used.count(v) && iv[v].r >= lb && (!next || iv[v].r < *next) && exact(v)) pick = v;
    if (!pick) {
      for (int v = 0; v < g.size() && !pick; ++v)
        if (!used.count(v) && exact(v)) pick = v;
      if (pick) ++res.c_outside_minimality;
    }
    if (!pick) throw Error("no vertex separates b" + std::to_string(idx + 1) + " from the later b vertices");
    c_of[idx] = *pick;
    used.insert(*pick);
  }
  res.witness.kind = BipPattern{BipPattern::Kind::transversal_pair, t, 0};
  res.witness.columns = {a_of, b_of, c_of};
  if (!verify_witness(g, res.witness)) throw Error("internal: extracted transversal pair failed verification");
  return res;
}

std::vector<int> occurrence_vertices(const VertexOrder& ord, const PatternOccurrence& occ) {
  std::set<int> positions(occ.row_idx.begin(), occ.row_idx.end());
  positions.insert(occ.col_idx.begin(), occ.col_idx.end());
  std::vector<int> out;
  for (int p : positions) out.push_back(ord.at(p));
  return out;
}

bool is_independent(const Graph& g, const std::vector<int>& vertices) {
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

IndependentSetWitness polygon_independent_set_extract(const Graph& g, const VertexOrder& ord,
                                                      const PatternOccurrence& occ) {
  if (ord.size() != g.size() || !verify_occurrence(adjacency_matrix(g, ord), occ))
    throw Error("malformed pattern occurrence");
  auto vs = occurrence_vertices(ord, occ);
  auto local = maximum_independent_set(g.induced(vs));
  IndependentSetWitness w;
  for (int v : local) w.vertices.push_back(vs[v]);
  std::sort(w.vertices.begin(), w.vertices.end());
  if (!is_independent(g, w.vertices)) throw Error("internal: extracted set is not independent");
  return w;
}

StructureWitness terrain_halfgraph_extract(const Graph& g, const VertexOrder& ord, const PatternOccurrence& occ) {
  PatternKind s = occ.pattern.s;
  if (s == PatternKind::zero || s == PatternKind::one)
    throw Error("pattern " + pattern_kind_name(s) + " cannot occur in a terrain visibility graph");
  if (ord.size() != g.size() || !verify_occurrence(adjacency_matrix(g, ord), occ))
    throw Error("malformed pattern occurrence");
  int k = occ.pattern.k;
  std::vector<int> rows, cols;
  for (int j = 0; j < k; ++j) {
    rows.push_back(ord.at(occ.row_idx[j * (k + 1)]));
    cols.push_back(ord.at(occ.col_idx[j * (k + 1)]));
  }
  StructureWitness w;
  w.kind = BipPattern{BipPattern::Kind::half_graph, k, 0};
  if (s == PatternKind::up || s == PatternKind::left)
    w.columns = {cols, rows};
  else
    w.columns = {rows, cols};
  if (!verify_witness(g, w)) throw Error("internal: extracted half-graph failed verification");
  return w;
}

}  // namespace tww
