#include "tww/matrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace tww {

namespace {

using Key = std::vector<std::uint64_t>;

void append_slice(Key& key, const Bitset& row, int begin, int end) {
  Bitset b = row >> begin;
  b.resize(end - begin);
  boost::to_block_range(b, std::back_inserter(key));
}

// The layers are the bit planes of a matrix over a product alphabet.
struct Layered {
  std::vector<Matrix> layers;
  std::vector<Matrix> transposed;

  explicit Layered(std::vector<Matrix> ls) : layers(std::move(ls)) {
    for (const auto& l : layers) transposed.push_back(l.transpose());
  }
  int rows() const { return layers.empty() ? 0 : layers[0].rows(); }
  int cols() const { return layers.empty() ? 0 : layers[0].cols(); }

  static int distinct(const std::vector<Matrix>& ls, Interval lines, Interval span) {
    std::set<Key> seen;
    for (int r = lines.begin; r < lines.end; ++r) {
      Key key;
      for (const auto& l : ls) append_slice(key, l.row(r), span.begin, span.end);
      seen.insert(std::move(key));
    }
    return static_cast<int>(seen.size());
  }

  int rank(Interval rows, Interval cols) const {
    if (rows.size() <= 0 || cols.size() <= 0) return 0;
    return std::max(distinct(layers, rows, cols), distinct(transposed, cols, rows));
  }

  Layered swapped() const {
    Layered t = *this;
    std::swap(t.layers, t.transposed);
    return t;
  }
};

std::vector<Interval> parts_from_sizes(const std::vector<int>& sizes) {
  std::vector<Interval> out;
  int at = 0;
  for (int s : sizes) {
    out.push_back({at, at + s});
    at += s;
  }
  return out;
}

std::vector<int> sizes_from_cuts(int total, const std::vector<int>& cuts) {
  std::vector<int> sizes;
  int prev = 0;
  for (int c : cuts) {
    sizes.push_back(c - prev);
    prev = c;
  }
  sizes.push_back(total - prev);
  return sizes;
}

// Packs columns greedily into parts whose cells reach rank k against every
// row part. Greedy is optimal because rank only grows with the cell.
std::optional<std::vector<int>> greedy_cols(const Layered& m, const std::vector<Interval>& row_parts, int k) {
  std::vector<int> cuts;
  int start = 0;
  int formed = 0;
  for (int c = 1; c <= m.cols() && formed < k; ++c) {
    bool ok = true;
    for (const auto& rp : row_parts) {
      if (m.rank(rp, {start, c}) < k) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++formed;
      if (formed < k) cuts.push_back(c);
      start = c;
    }
  }
  if (formed < k) return std::nullopt;
  return cuts;
}

std::optional<Division> exact_division(const Layered& m, int k) {
  int rows = m.rows(), cols = m.cols();
  if (k < 1 || rows < k || cols < k) return std::nullopt;
  bool swap = rows > cols;
  const Layered work = swap ? m.swapped() : m;
  int n = work.rows();
  std::vector<int> cuts(k - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  while (true) {
    auto row_parts = parts_from_sizes(sizes_from_cuts(n, cuts));
    if (auto col_cuts = greedy_cols(work, row_parts, k)) {
      Division d;
      d.row_sizes = sizes_from_cuts(n, cuts);
      d.col_sizes = sizes_from_cuts(work.cols(), *col_cuts);
      if (swap) std::swap(d.row_sizes, d.col_sizes);
      return d;
    }
    int i = k - 2;
    while (i >= 0 && cuts[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cuts[i];
    for (int j = i + 1; j < k - 1; ++j) cuts[j] = cuts[j - 1] + 1;
  }
  return std::nullopt;
}

int exact_grid_rank(const Layered& m, int limit) {
  if (m.rows() > limit || m.cols() > limit)
    throw Error("matrix exceeds the exhaustive grid rank limit of " + std::to_string(limit));
  if (m.rows() == 0 || m.cols() == 0) return 0;
  int k = 1;
  while (k < std::min(m.rows(), m.cols()) && exact_division(m, k + 1)) ++k;
  return k;
}

// Local search over column cuts; rows are packed greedily for each choice.
std::optional<Division> heuristic_division(const Layered& m, int k) {
  int rows = m.rows(), cols = m.cols();
  if (rows < k || cols < k) return std::nullopt;
  const Layered t = m.swapped();
  auto score = [&](const std::vector<int>& col_cuts, std::vector<int>* row_cuts) {
    auto col_parts = parts_from_sizes(sizes_from_cuts(cols, col_cuts));
    std::vector<int> cuts;
    int start = 0, formed = 0;
    for (int r = 1; r <= rows && formed < k; ++r) {
      bool ok = true;
      for (const auto& cp : col_parts)
        if (t.rank(cp, {start, r}) < k) {
          ok = false;
          break;
        }
      if (ok) {
        ++formed;
        if (formed < k) cuts.push_back(r);
        start = r;
      }
    }
    if (row_cuts) *row_cuts = cuts;
    return formed;
  };
  auto regular_cuts = [&](int n) {
    std::vector<int> c;
    for (int i = 1; i < k; ++i) c.push_back(i * n / k);
    return c;
  };
  std::mt19937_64 rng(0x5eed);
  auto valid = [&](const std::vector<int>& c) {
    int prev = 0;
    for (int x : c) {
      if (x <= prev) return false;
      prev = x;
    }
    return prev < cols;
  };
  for (int restart = 0; restart < 40; ++restart) {
    std::vector<int> cuts = regular_cuts(cols);
    if (restart > 0) {
      std::vector<int> all(cols - 1);
      std::iota(all.begin(), all.end(), 1);
      std::shuffle(all.begin(), all.end(), rng);
      cuts.assign(all.begin(), all.begin() + (k - 1));
      std::sort(cuts.begin(), cuts.end());
    }
    int best = score(cuts, nullptr);
    for (int round = 0; round < 200 && best < k; ++round) {
      bool improved = false;
      for (int i = 0; i < k - 1 && !improved; ++i)
        for (int delta : {-1, 1, -2, 2, -4, 4}) {
          auto next = cuts;
          next[i] += delta;
          if (!valid(next)) continue;
          int s = score(next, nullptr);
          if (s > best) {
            best = s;
            cuts = next;
            improved = true;
            break;
          }
        }
      if (!improved) break;
    }
    std::vector<int> row_cuts;
    if (score(cuts, &row_cuts) >= k) {
      return Division{sizes_from_cuts(rows, row_cuts), sizes_from_cuts(cols, cuts)};
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Interval> Division::row_parts() const { return parts_from_sizes(row_sizes); }
std::vector<Interval> Division::col_parts() const { return parts_from_sizes(col_sizes); }

Division Division::from_cuts(int rows, const std::vector<int>& row_cuts, int cols, const std::vector<int>& col_cuts) {
  return Division{sizes_from_cuts(rows, row_cuts), sizes_from_cuts(cols, col_cuts)};
}

Division Division::regular(int rows, int cols, int k) {
  std::vector<int> rc, cc;
  for (int i = 1; i < k; ++i) {
    rc.push_back(i * rows / k);
    cc.push_back(i * cols / k);
  }
  return from_cuts(rows, rc, cols, cc);
}

void Division::validate(const Matrix& m) const {
  auto check = [](const std::vector<int>& sizes, int total, const char* what) {
    int sum = 0;
    for (int s : sizes) {
      if (s <= 0) throw Error(std::string("division has an empty ") + what + " part");
      sum += s;
    }
    if (sum != total) throw Error(std::string("division ") + what + " parts do not cover the matrix");
  };
  check(row_sizes, m.rows(), "row");
  check(col_sizes, m.cols(), "column");
}

int cell_rank(const Matrix& m, Interval rows, Interval cols) {
  if (rows.begin < 0 || rows.end > m.rows() || cols.begin < 0 || cols.end > m.cols() || rows.begin > rows.end ||
      cols.begin > cols.end)
    throw Error("cell out of bounds");
  Layered l({m});
  return l.rank(rows, cols);
}

bool is_rank_k_division(const Matrix& m, const Division& d, int k) {
  d.validate(m);
  if (static_cast<int>(d.row_sizes.size()) != k || static_cast<int>(d.col_sizes.size()) != k) return false;
  Layered l({m});
  for (auto rp : d.row_parts())
    for (auto cp : d.col_parts())
      if (l.rank(rp, cp) < k) return false;
  return true;
}

int grid_rank(const Matrix& m, int limit) { return exact_grid_rank(Layered({m}), limit); }

int grid_rank_layers(const std::vector<Matrix>& layers, int limit) {
  for (const auto& l : layers)
    if (l.rows() != layers[0].rows() || l.cols() != layers[0].cols()) throw Error("layer dimension mismatch");
  return exact_grid_rank(Layered(layers), limit);
}

std::optional<Division> rank_division_exact(const Matrix& m, int k) { return exact_division(Layered({m}), k); }

std::optional<Division> grid_rank_lower_bound(const Matrix& m, int k, int limit) {
  if (k < 1) throw Error("k must be positive");
  if (m.rows() == 0 || m.cols() == 0) return std::nullopt;
  if (k == 1) return Division{{m.rows()}, {m.cols()}};
  std::optional<Division> d;
  if (m.rows() <= limit && m.cols() <= limit) d = exact_division(Layered({m}), k);
  else d = heuristic_division(Layered({m}), k);
  if (d && !is_rank_k_division(m, *d, k)) throw Error("internal: division search returned an invalid division");
  return d;
}

std::string pattern_kind_name(PatternKind s) {
  switch (s) {
    case PatternKind::zero: return "0";
    case PatternKind::one: return "1";
    case PatternKind::up: return "up";
    case PatternKind::down: return "down";
    case PatternKind::left: return "left";
    case PatternKind::right: return "right";
  }
  return "?";
}

PatternKind parse_pattern_kind(const std::string& s) {
  for (auto k : kAllPatternKinds)
    if (pattern_kind_name(k) == s) return k;
  throw Error("unknown universal pattern kind '" + s + "'");
}

int universal_permutation(int k, int y) { return k * (y % k) + y / k; }

Matrix universal_pattern(UniversalPatternId id) {
  int k = id.k;
  if (k < 1) throw Error("universal pattern needs k >= 1");
  int n = k * k;
  Matrix m(n, n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      int key_col = universal_permutation(k, y);
      int key_row = universal_permutation(k, x);
      bool v = false;
      switch (id.s) {
        case PatternKind::zero: v = x == key_col; break;
        case PatternKind::one: v = x != key_col; break;
        case PatternKind::up: v = y >= key_row; break;
        case PatternKind::down: v = y <= key_row; break;
        case PatternKind::left: v = x <= key_col; break;
        case PatternKind::right: v = x >= key_col; break;
      }
      if (v) m.set(y, x);
    }
  return m;
}

namespace {

// Rows r_0 < ... and columns c_0 < ... with every column before every row.
// Step y fixes column y, then row y.
struct AboveSearch {
  const Matrix& m;
  Matrix mt;
  const Matrix& p;
  BudgetMeter& meter;
  int n;
  std::vector<int> rows, cols;

  AboveSearch(const Matrix& m_, const Matrix& p_, BudgetMeter& meter_)
      : m(m_), mt(m_.transpose()), p(p_), meter(meter_), n(p_.rows()) {}

  bool step(int y) {
    if (y == n) return true;
    meter.tick();
    int remaining = n - 1 - y;
    int col_lo = y == 0 ? 0 : cols[y - 1] + 1;
    int col_hi = y == 0 ? m.cols() - 1 - remaining : std::min(m.cols() - 1, rows[0] - 1) - remaining;
    if (y == 0) col_hi = std::min(col_hi, m.rows() - n - 1 - remaining);
    if (col_lo > col_hi) return false;
    Bitset cand(m.cols());
    cand.set();
    for (int yy = 0; yy < y; ++yy) {
      if (p.get(yy, y)) cand &= m.row(rows[yy]);
      else cand -= m.row(rows[yy]);
    }
    for (auto c = col_lo == 0 ? cand.find_first() : cand.find_next(col_lo - 1);
         c != Bitset::npos && static_cast<int>(c) <= col_hi; c = cand.find_next(c)) {
      cols.push_back(static_cast<int>(c));
      if (place_row(y)) return true;
      cols.pop_back();
    }
    return false;
  }

  bool place_row(int y) {
    int remaining = n - 1 - y;
    int row_lo = y == 0 ? cols[0] + n : rows[y - 1] + 1;
    int row_hi = m.rows() - 1 - remaining;
    if (row_lo > row_hi) return false;
    Bitset cand(m.rows());
    cand.set();
    for (int x = 0; x <= y; ++x) {
      if (p.get(y, x)) cand &= mt.row(cols[x]);
      else cand -= mt.row(cols[x]);
    }
    for (auto r = cand.find_next(row_lo - 1); r != Bitset::npos && static_cast<int>(r) <= row_hi;
         r = cand.find_next(r)) {
      rows.push_back(static_cast<int>(r));
      if (step(y + 1)) return true;
      rows.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::pair<std::vector<int>, std::vector<int>>> find_off_diagonal_submatrix(const Matrix& m,
                                                                                          const Matrix& pattern,
                                                                                          Side side,
                                                                                          BudgetMeter& meter) {
  if (pattern.rows() != pattern.cols()) throw Error("pattern must be square");
  int n = pattern.rows();
  if (n == 0) return std::pair<std::vector<int>, std::vector<int>>{};
  if (side == Side::below) {
    auto r = find_off_diagonal_submatrix(m.transpose(), pattern.transpose(), Side::above, meter);
    if (!r) return std::nullopt;
    return std::pair(r->second, r->first);
  }
  AboveSearch s(m, pattern, meter);
  if (!s.step(0)) return std::nullopt;
  return std::pair(s.rows, s.cols);
}

std::optional<PatternOccurrence> find_universal_pattern(const Matrix& m, int k, Side side, const Budget& budget,
                                                        const std::vector<PatternKind>& kinds) {
  if (k < 1) throw Error("k must be positive");
  if (k > 4) throw Error("universal pattern search supports k <= 4");
  std::vector<PatternKind> order(std::begin(kAllPatternKinds), std::end(kAllPatternKinds));
  if (!kinds.empty()) {
    std::erase_if(order, [&](PatternKind s) { return std::find(kinds.begin(), kinds.end(), s) == kinds.end(); });
  }
  BudgetMeter meter(budget, "pattern search");
  for (auto s : order) {
    UniversalPatternId id{k, s};
    auto hit = find_off_diagonal_submatrix(m, universal_pattern(id), side, meter);
    if (hit) {
      PatternOccurrence occ{id, hit->first, hit->second, side};
      if (!verify_occurrence(m, occ)) throw Error("internal: pattern occurrence failed verification");
      return occ;
    }
  }
  return std::nullopt;
}

bool verify_occurrence(const Matrix& m, const PatternOccurrence& occ) {
  int n = occ.pattern.k * occ.pattern.k;
  if (static_cast<int>(occ.row_idx.size()) != n || static_cast<int>(occ.col_idx.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    if (occ.row_idx[i] < 0 || occ.row_idx[i] >= m.rows() || occ.col_idx[i] < 0 || occ.col_idx[i] >= m.cols())
      return false;
    if (i > 0 && (occ.row_idx[i] <= occ.row_idx[i - 1] || occ.col_idx[i] <= occ.col_idx[i - 1])) return false;
  }
  if (occ.side == Side::above && occ.col_idx.back() >= occ.row_idx.front()) return false;
  if (occ.side == Side::below && occ.row_idx.back() >= occ.col_idx.front()) return false;
  return m.submatrix(occ.row_idx, occ.col_idx) == universal_pattern(occ.pattern);
}

std::tuple<int, int, int> union_grid_rank_check(const Matrix& m1, const Matrix& m2) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols()) throw Error("dimension mismatch");
  return {grid_rank(m1), grid_rank(m2), grid_rank_layers({m1, m2})};
}

}  // namespace tww
