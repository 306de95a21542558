#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "pfaff/multi_index.hpp"
#include "pfaff/rational.hpp"

namespace pfaff {

// Sparse multivariate power series over Q, truncated by total degree:
// only terms with |k| <= trunc are meaningful. Zero coefficients are never
// stored, so the zero series is the empty term map.
class Series {
 public:
  using Terms = std::map<MultiIndex, Rat>;

  Series() = default;
  Series(std::size_t vars, int trunc);

  static Series constant(std::size_t vars, int trunc, const Rat& value);
  static Series monomial(std::size_t vars, int trunc, const MultiIndex& k, const Rat& coeff);
  // x_axis, 1-based.
  static Series variable(std::size_t vars, int trunc, std::size_t axis);

  std::size_t vars() const noexcept { return vars_; }
  int trunc() const noexcept { return trunc_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rat coeff(const MultiIndex& k) const;
  Rat constant_term() const { return coeff(MultiIndex(vars_)); }

  // Adds `value` to the coefficient of x^k. Terms above the truncation are
  // ignored; a resulting zero is erased.
  void add_term(const MultiIndex& k, const Rat& value);

  // Drops terms with |k| > new_trunc. Raising the truncation is refused:
  // that would claim precision the series does not hold.
  Series truncated(int new_trunc) const;

  // Smallest total degree of a stored term.
  std::optional<int> lowest_degree() const;

  // Terms of total degree exactly d.
  Series homogeneous_part(int degree) const;

  Series operator-() const;

  bool operator==(const Series&) const = default;

  // Canonical text such as "1 - x2 + 1/2*x1^2"; "0" for the zero series.
  std::string to_string() const;

 private:
  std::size_t vars_ = 0;
  int trunc_ = 0;
  Terms terms_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series scale(const Series& a, const Rat& factor);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

// d/dx_axis. The result is exact only through trunc - 1.
Series partial(const Series& a, std::size_t axis);

// x_axis^p * a; shifted terms are kept, so trunc grows by p.
Series mul_axis_power(const Series& a, std::size_t axis, int p);

// Minimum exponent of x_axis over stored terms; std::nullopt stands for
// +infinity (zero series). Relative to the truncation: a value r certifies
// only that every computed term is divisible by x_axis^r.
std::optional<int> ord_axis(const Series& a, std::size_t axis);

// Sets x_axis = 0, keeping the variable count.
Series restrict_axis(const Series& a, std::size_t axis);

// Terms whose x_axis exponent equals `power`, with that exponent removed.
// The result has truncation a.trunc() - power.
Series axis_layer(const Series& a, std::size_t axis, int power);

// Multiplicative inverse of a series with nonzero constant term.
Series inverse(const Series& a);

}  // namespace pfaff
