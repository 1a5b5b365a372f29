#pragma once

#include "tww/bitmatrix.hpp"
#include "tww/budget.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace tww {

// Half-open index range [begin, end).
struct Interval {
  int begin = 0;
  int end = 0;
  int size() const { return end - begin; }
  bool operator==(const Interval&) const = default;
};

struct Division {
  std::vector<int> row_sizes;
  std::vector<int> col_sizes;

  std::vector<Interval> row_parts() const;
  std::vector<Interval> col_parts() const;
  // Division from cut positions (start indices of every part but the first).
  static Division from_cuts(int rows, const std::vector<int>& row_cuts, int cols, const std::vector<int>& col_cuts);
  static Division regular(int rows, int cols, int k);
  void validate(const Matrix& m) const;
  bool operator==(const Division&) const = default;
};

// max(#distinct rows, #distinct columns) of the cell.
int cell_rank(const Matrix& m, Interval rows, Interval cols);
bool is_rank_k_division(const Matrix& m, const Division& d, int k);

inline constexpr int kGridRankExhaustiveLimit = 16;

// Exact grid rank by enumerating row cuts and packing columns greedily.
int grid_rank(const Matrix& m, int limit = kGridRankExhaustiveLimit);
// Grid rank of the matrix over the product alphabet of several layers.
int grid_rank_layers(const std::vector<Matrix>& layers, int limit = kGridRankExhaustiveLimit);
// A rank-k division found by search; exact within the exhaustive limit.
std::optional<Division> grid_rank_lower_bound(const Matrix& m, int k, int limit = kGridRankExhaustiveLimit);
std::optional<Division> rank_division_exact(const Matrix& m, int k);

enum class PatternKind { zero, one, up, down, left, right };
inline constexpr PatternKind kAllPatternKinds[] = {PatternKind::zero, PatternKind::one, PatternKind::up,
                                                   PatternKind::down, PatternKind::left, PatternKind::right};
std::string pattern_kind_name(PatternKind s);
PatternKind parse_pattern_kind(const std::string& s);

struct UniversalPatternId {
  int k = 1;
  PatternKind s = PatternKind::zero;
  bool operator==(const UniversalPatternId&) const = default;
};

enum class Side { above, below };

struct PatternOccurrence {
  UniversalPatternId pattern;
  std::vector<int> row_idx;
  std::vector<int> col_idx;
  Side side = Side::above;
};

// The k^2 x k^2 matrix M_k^s, row 0 being the bottom row.
Matrix universal_pattern(UniversalPatternId id);
// Column of the 1 entry in row y of M_k^0.
int universal_permutation(int k, int y);

// Above: every column index precedes every row index. Below: the reverse.
std::optional<PatternOccurrence> find_universal_pattern(const Matrix& m, int k, Side side,
                                                        const Budget& budget = Budget::nodes(50'000'000),
                                                        const std::vector<PatternKind>& kinds = {});
// Occurrence of an arbitrary square pattern as an off-diagonal submatrix.
std::optional<std::pair<std::vector<int>, std::vector<int>>> find_off_diagonal_submatrix(
    const Matrix& m, const Matrix& pattern, Side side, BudgetMeter& meter);
bool verify_occurrence(const Matrix& m, const PatternOccurrence& occ);

std::tuple<int, int, int> union_grid_rank_check(const Matrix& m1, const Matrix& m2);

}  // namespace tww
