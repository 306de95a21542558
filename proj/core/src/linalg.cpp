#include "pfaff/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "pfaff/error.hpp"

namespace pfaff {

RatMat::RatMat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RatMat RatMat::identity(std::size_t n) {
  RatMat out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

std::string RatMat::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) s += ", ";
    s += '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += ", ";
      s += pfaff::to_string((*this)(r, c));
    }
    s += ']';
  }
  return s + "]";
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product dimension mismatch");
  RatMat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

RatMat operator-(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix shape mismatch");
  RatMat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  }
  return out;
}

Rat trace(const RatMat& m) {
  if (!m.is_square()) throw ShapeError("trace of a non-square matrix");
  Rat t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Rat det(const RatMat& m) {
  if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
  RatMat a = m;
  const std::size_t n = a.rows();
  Rat result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      result = -result;
    }
    result *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      const Rat f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return result;
}

AffineSolution solve_affine(const RatMat& a, const std::vector<Rat>& b) {
  if (b.size() != a.rows()) throw ShapeError("right-hand side length mismatch");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  RatMat m = a;
  std::vector<Rat> rhs = b;
  std::vector<std::size_t> row_id(rows);
  std::iota(row_id.begin(), row_id.end(), 0);

  AffineSolution sol;
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows; ++col) {
    std::size_t pivot = next;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) {
      sol.free_cols.push_back(col);
      continue;
    }
    if (pivot != next) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(next, j));
      std::swap(rhs[pivot], rhs[next]);
      std::swap(row_id[pivot], row_id[next]);
    }
    const Rat inv = Rat(1) / m(next, col);
    for (std::size_t j = col; j < cols; ++j) m(next, j) *= inv;
    rhs[next] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == next || m(i, col) == 0) continue;
      const Rat f = m(i, col);
      for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(next, j);
      rhs[i] -= f * rhs[next];
    }
    sol.pivot_cols.push_back(col);
    ++next;
  }
  for (std::size_t col = sol.pivot_cols.empty() ? 0 : sol.pivot_cols.back() + 1; col < cols; ++col) {
    if (std::find(sol.free_cols.begin(), sol.free_cols.end(), col) == sol.free_cols.end()) {
      sol.free_cols.push_back(col);
    }
  }
  std::sort(sol.free_cols.begin(), sol.free_cols.end());

  for (std::size_t i = next; i < rows; ++i) {
    if (rhs[i] == 0) continue;
    if (sol.consistent || row_id[i] < sol.inconsistent_row) {
      sol.consistent = false;
      sol.inconsistent_row = row_id[i];
      sol.inconsistent_value = rhs[i];
    }
  }

  for (std::size_t r = 0; r < sol.pivot_cols.size(); ++r) {
    sol.pivot_rhs.push_back(rhs[r]);
    std::vector<Rat> coeffs;
    coeffs.reserve(sol.free_cols.size());
    for (std::size_t f : sol.free_cols) coeffs.push_back(m(r, f));
    sol.pivot_free.push_back(std::move(coeffs));
  }
  return sol;
}

std::size_t rank(const RatMat& m) {
  return solve_affine(m, std::vector<Rat>(m.rows())).pivot_cols.size();
}

}  // namespace pfaff
