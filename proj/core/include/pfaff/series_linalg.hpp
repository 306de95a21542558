#pragma once

#include <cstddef>
#include <vector>

#include "pfaff/series.hpp"

namespace pfaff {

// n series sharing variable count and truncation.
class SeriesVec {
 public:
  SeriesVec() = default;
  explicit SeriesVec(std::vector<Series> components);

  static SeriesVec zeros(std::size_t n, std::size_t vars, int trunc);

  std::size_t size() const noexcept { return comps_.size(); }
  std::size_t vars() const noexcept { return comps_.empty() ? 0 : comps_.front().vars(); }
  int trunc() const noexcept { return comps_.empty() ? 0 : comps_.front().trunc(); }

  const Series& operator[](std::size_t i) const { return comps_[i]; }
  auto begin() const noexcept { return comps_.begin(); }
  auto end() const noexcept { return comps_.end(); }
  const std::vector<Series>& components() const noexcept { return comps_; }

  // Component-wise update; the replacement must match vars and trunc.
  void set(std::size_t i, Series s);

  bool is_zero() const;
  SeriesVec truncated(int new_trunc) const;

  bool operator==(const SeriesVec&) const = default;

 private:
  std::vector<Series> comps_;
};

SeriesVec add(const SeriesVec& a, const SeriesVec& b);
SeriesVec sub(const SeriesVec& a, const SeriesVec& b);
SeriesVec scale(const SeriesVec& a, const Rat& factor);

// Square n x n matrix of series sharing variable count and truncation.
class SeriesMat {
 public:
  SeriesMat() = default;
  SeriesMat(std::size_t n, std::vector<Series> row_major);

  static SeriesMat identity(std::size_t n, std::size_t vars, int trunc);

  std::size_t dim() const noexcept { return n_; }
  std::size_t vars() const noexcept { return entries_.empty() ? 0 : entries_.front().vars(); }
  int trunc() const noexcept { return entries_.empty() ? 0 : entries_.front().trunc(); }

  const Series& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  void set(std::size_t r, std::size_t c, Series s);

  // Matrix of constant terms.
  std::vector<std::vector<Rat>> constant_part() const;

  bool operator==(const SeriesMat&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Series> entries_;
};

SeriesMat sub(const SeriesMat& a, const SeriesMat& b);
// M - lambda*I
SeriesMat shift_diagonal(const SeriesMat& m, const Rat& lambda);
SeriesVec mat_vec(const SeriesMat& m, const SeriesVec& v);

// Cofactor expansion in the truncated ring.
Series det(const SeriesMat& m);

// The unique u with M*u == r through the common truncation. Throws
// NonUnitMatrix when det(M) has zero constant term.
SeriesVec solve_linear_series(const SeriesMat& m, const SeriesVec& r);

}  // namespace pfaff
