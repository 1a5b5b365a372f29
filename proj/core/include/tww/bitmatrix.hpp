#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace tww {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

template <class F>
void for_each_bit(const Bitset& b, F&& f) {
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) f(static_cast<int>(i));
}

inline std::vector<int> bits_of(const Bitset& b) {
  std::vector<int> out;
  for_each_bit(b, [&](int i) { out.push_back(i); });
  return out;
}

// Dense 0/1 matrix with bit-packed rows. Row 0 is the first row; when a
// matrix is drawn with the (1,1) entry at the bottom-left, row 0 is the
// bottom row.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const { return data_[r][c]; }
  void set(int r, int c, bool v = true) { data_[r][c] = v; }
  const Bitset& row(int r) const { return data_[r]; }
  Bitset& row(int r) { return data_[r]; }

  Matrix transpose() const;
  Matrix complement() const;
  // Rows reversed and columns reversed.
  Matrix rotate180() const;
  Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  Matrix block(int r0, int r1, int c0, int c1) const;
  int ones() const;

  bool operator==(const Matrix& o) const = default;

  // Rows as strings of '0'/'1', row 0 first.
  std::vector<std::string> to_strings() const;
  static Matrix from_strings(const std::vector<std::string>& rows);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Bitset> data_;
};

}  // namespace tww
