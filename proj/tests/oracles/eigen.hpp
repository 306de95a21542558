#pragma once

// Integer eigenvalues by brute force: det(M - jI) through plain Gaussian
// elimination, with no characteristic polynomial involved.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using QMat = std::vector<std::vector<mpq_class>>;

inline mpq_class det_by_elimination(QMat a) {
  const std::size_t n = a.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const mpq_class factor = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= factor * a[c][k];
    }
  }
  return det;
}

inline std::vector<std::int64_t> direct_integer_eigs(const QMat& m, std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t j = 0; j <= bound; ++j) {
    QMat shifted = m;
    for (std::size_t i = 0; i < m.size(); ++i) shifted[i][i] -= mpq_class(static_cast<long>(j));
    if (det_by_elimination(shifted) == 0) out.push_back(j);
  }
  return out;
}

inline QMat multiply(const QMat& a, const QMat& b) {
  QMat out(a.size(), std::vector<mpq_class>(b.front().size()));
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      for (std::size_t c = 0; c < b.front().size(); ++c) out[r][c] += a[r][k] * b[k][c];
    }
  }
  return out;
}

// Gauss-Jordan inverse; the input must be invertible.
inline QMat inverse(QMat a) {
  const std::size_t n = a.size();
  QMat inv(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const mpq_class d = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= d;
      inv[c][k] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

// P T P^{-1} with T upper triangular: the spectrum is exactly diag(T).
inline QMat planted_spectrum(const std::vector<mpq_class>& diagonal, const QMat& upper_noise, const QMat& p) {
  QMat t = upper_noise;
  for (std::size_t r = 0; r < t.size(); ++r) {
    for (std::size_t c = 0; c < r; ++c) t[r][c] = 0;
    t[r][r] = diagonal[r];
  }
  return multiply(multiply(p, t), inverse(p));
}

}  // namespace oracle
