#include "pfaff/series_linalg.hpp"

#include <algorithm>
#include <utility>

#include "pfaff/error.hpp"

namespace pfaff {

namespace {

void require_compatible(const Series& s, std::size_t vars, int trunc) {
  if (s.vars() != vars || s.trunc() != trunc) {
    throw ShapeError("series components must share variable count and truncation");
  }
}

Series det_recursive(const SeriesMat& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t k = cols.size();
  if (k == 1) return m(row, cols[0]);
  Series total(m.vars(), m.trunc());
  for (std::size_t c = 0; c < k; ++c) {
    const Series& entry = m(row, cols[c]);
    if (entry.is_zero()) continue;
    const std::size_t removed = cols[c];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(c));
    const Series minor = det_recursive(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(c), removed);
    const Series term = mul(entry, minor);
    total = (c % 2 == 0) ? add(total, term) : sub(total, term);
  }
  return total;
}

}  // namespace

SeriesVec::SeriesVec(std::vector<Series> components) : comps_(std::move(components)) {
  if (comps_.empty()) throw ShapeError("a series vector needs at least one component");
  for (const auto& s : comps_) require_compatible(s, comps_.front().vars(), comps_.front().trunc());
}

SeriesVec SeriesVec::zeros(std::size_t n, std::size_t vars, int trunc) {
  return SeriesVec(std::vector<Series>(n, Series(vars, trunc)));
}

void SeriesVec::set(std::size_t i, Series s) {
  require_compatible(s, vars(), trunc());
  comps_.at(i) = std::move(s);
}

bool SeriesVec::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Series& s) { return s.is_zero(); });
}

SeriesVec SeriesVec::truncated(int new_trunc) const {
  std::vector<Series> out;
  out.reserve(comps_.size());
  for (const auto& s : comps_) out.push_back(s.truncated(new_trunc));
  return SeriesVec(std::move(out));
}

SeriesVec add(const SeriesVec& a, const SeriesVec& b) {
  if (a.size() != b.size()) throw ShapeError("series vector lengths differ");
  std::vector<Series> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(add(a[i], b[i]));
  return SeriesVec(std::move(out));
}

SeriesVec sub(const SeriesVec& a, const SeriesVec& b) {
  if (a.size() != b.size()) throw ShapeError("series vector lengths differ");
  std::vector<Series> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(sub(a[i], b[i]));
  return SeriesVec(std::move(out));
}

SeriesVec scale(const SeriesVec& a, const Rat& factor) {
  std::vector<Series> out;
  for (const auto& s : a) out.push_back(scale(s, factor));
  return SeriesVec(std::move(out));
}

SeriesMat::SeriesMat(std::size_t n, std::vector<Series> row_major)
    : n_(n), entries_(std::move(row_major)) {
  if (n_ == 0 || entries_.size() != n_ * n_) throw ShapeError("series matrix must be n x n, n >= 1");
  for (const auto& s : entries_) {
    require_compatible(s, entries_.front().vars(), entries_.front().trunc());
  }
}

SeriesMat SeriesMat::identity(std::size_t n, std::size_t vars, int trunc) {
  std::vector<Series> entries(n * n, Series(vars, trunc));
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = Series::constant(vars, trunc, Rat(1));
  return SeriesMat(n, std::move(entries));
}

void SeriesMat::set(std::size_t r, std::size_t c, Series s) {
  require_compatible(s, vars(), trunc());
  entries_.at(r * n_ + c) = std::move(s);
}

std::vector<std::vector<Rat>> SeriesMat::constant_part() const {
  std::vector<std::vector<Rat>> out(n_, std::vector<Rat>(n_));
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) out[r][c] = (*this)(r, c).constant_term();
  }
  return out;
}

SeriesMat sub(const SeriesMat& a, const SeriesMat& b) {
  if (a.dim() != b.dim()) throw ShapeError("series matrix dimensions differ");
  std::vector<Series> entries;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) entries.push_back(sub(a(r, c), b(r, c)));
  }
  return SeriesMat(a.dim(), std::move(entries));
}

SeriesMat shift_diagonal(const SeriesMat& m, const Rat& lambda) {
  SeriesMat out = m;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Series d = m(i, i);
    d.add_term(MultiIndex(m.vars()), -lambda);
    out.set(i, i, std::move(d));
  }
  return out;
}

SeriesVec mat_vec(const SeriesMat& m, const SeriesVec& v) {
  if (m.dim() != v.size()) throw ShapeError("matrix/vector dimensions differ");
  if (m.vars() != v.vars()) throw ShapeError("matrix/vector variable counts differ");
  const int trunc = std::min(m.trunc(), v.trunc());
  std::vector<Series> out;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Series acc(m.vars(), trunc);
    for (std::size_t c = 0; c < m.dim(); ++c) acc = add(acc, mul(m(r, c), v[c]));
    out.push_back(std::move(acc));
  }
  return SeriesVec(std::move(out));
}

Series det(const SeriesMat& m) {
  if (m.dim() == 0) throw ShapeError("determinant of an empty matrix");
  std::vector<std::size_t> cols(m.dim());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return det_recursive(m, cols, 0);
}

SeriesVec solve_linear_series(const SeriesMat& m, const SeriesVec& r) {
  const std::size_t n = m.dim();
  if (r.size() != n) throw ShapeError("right-hand side length does not match the matrix");
  if (m.vars() != r.vars()) throw ShapeError("matrix/vector variable counts differ");
  const int trunc = std::min(m.trunc(), r.trunc());

  std::vector<std::vector<Series>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i].push_back(m(i, j).truncated(trunc));
    rows[i].push_back(r[i].truncated(trunc));
  }

  // Gauss-Jordan with pivots that are units (nonzero constant term).
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot][col].constant_term() == 0) ++pivot;
    if (pivot == n) throw NonUnitMatrix("matrix is not invertible in the truncated series ring");
    std::swap(rows[col], rows[pivot]);
    const Series inv = inverse(rows[col][col]);
    for (auto& e : rows[col]) e = mul(e, inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || rows[i][col].is_zero()) continue;
      const Series factor = rows[i][col];
      for (std::size_t j = col; j <= n; ++j) rows[i][j] = sub(rows[i][j], mul(factor, rows[col][j]));
    }
  }

  std::vector<Series> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(rows[i][n]);
  return SeriesVec(std::move(out));
}

}  // namespace pfaff
