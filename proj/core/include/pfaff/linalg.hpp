#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pfaff/rational.hpp"

namespace pfaff {

// Dense exact rational matrix.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMat(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMat identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const RatMat&) const = default;

  // "[[0, 2], [1, 0]]"
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

RatMat operator*(const RatMat& a, const RatMat& b);
RatMat operator-(const RatMat& a, const RatMat& b);

Rat trace(const RatMat& m);
Rat det(const RatMat& m);

// General solution of A x = b by exact Gauss-Jordan elimination. Pivots are
// chosen column by column in index order, so callers control which unknowns
// end up free through the column order.
struct AffineSolution {
  bool consistent = true;
  // First (by original index) row reducing to 0 = value with value != 0.
  std::size_t inconsistent_row = 0;
  Rat inconsistent_value;

  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> free_cols;
  // x[pivot_cols[r]] = pivot_rhs[r] - sum_f pivot_free[r][f] * x[free_cols[f]]
  std::vector<Rat> pivot_rhs;
  std::vector<std::vector<Rat>> pivot_free;
};

AffineSolution solve_affine(const RatMat& a, const std::vector<Rat>& b);

std::size_t rank(const RatMat& m);

}  // namespace pfaff
