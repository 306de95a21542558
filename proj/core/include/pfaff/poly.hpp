#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pfaff/linalg.hpp"
#include "pfaff/multi_index.hpp"
#include "pfaff/rational.hpp"
#include "pfaff/series_linalg.hpp"

namespace pfaff {

// x^xexp * y^yexp
struct Monomial {
  MultiIndex x;
  MultiIndex y;

  int degree() const noexcept { return x.total() + y.total(); }
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  // "x1*y1^2"; "1" for the unit monomial.
  std::string to_string() const;
};

// Exact polynomial in x_1..x_m, y_1..y_n with rational coefficients.
class Poly {
 public:
  using Terms = std::map<Monomial, Rat>;

  Poly() = default;
  Poly(std::size_t m, std::size_t n) : m_(m), n_(n) {}

  static Poly constant(std::size_t m, std::size_t n, const Rat& value);
  static Poly x_var(std::size_t m, std::size_t n, std::size_t axis);
  static Poly y_var(std::size_t m, std::size_t n, std::size_t component);

  std::size_t x_vars() const noexcept { return m_; }
  std::size_t y_vars() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rat coeff(const Monomial& mono) const;
  void add_term(const Monomial& mono, const Rat& value);

  // Largest total y-degree over monomials; 0 for the zero polynomial.
  int max_y_degree() const;

  // Value at x = 0, y = 0.
  Rat constant_term() const;

  bool operator==(const Poly&) const = default;

  // Terms by ascending total degree; ties put higher powers of earlier
  // variables first (x1 before x2 before y1). Re-parses to the same Poly.
  std::string to_string() const;

 private:
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  Terms terms_;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rat& factor);
Poly pow(const Poly& a, unsigned exponent);

inline Poly operator+(const Poly& a, const Poly& b) { return add(a, b); }
inline Poly operator-(const Poly& a, const Poly& b) { return sub(a, b); }
inline Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

// d/dx_axis, 1-based axis.
Poly partial_x(const Poly& p, std::size_t axis);
// d/dy_component, 1-based component.
Poly partial_y(const Poly& p, std::size_t component);
// x_axis^power * p
Poly mul_x_power(const Poly& p, std::size_t axis, int power);

// P(x, phi(x)) in the truncated ring at phi.trunc(). phi must have no
// constant term, which makes every coefficient through the truncation exact.
Series eval_series(const Poly& p, const SeriesVec& phi);

// A vector field: one Poly per unknown y_a.
class PolyMap {
 public:
  PolyMap() = default;
  explicit PolyMap(std::vector<Poly> components);

  std::size_t size() const noexcept { return comps_.size(); }
  std::size_t x_vars() const noexcept { return comps_.empty() ? 0 : comps_.front().x_vars(); }
  std::size_t y_vars() const noexcept { return comps_.empty() ? 0 : comps_.front().y_vars(); }
  const Poly& operator[](std::size_t i) const { return comps_[i]; }
  auto begin() const noexcept { return comps_.begin(); }
  auto end() const noexcept { return comps_.end(); }

  bool is_zero() const;
  int max_y_degree() const;

  bool operator==(const PolyMap&) const = default;

 private:
  std::vector<Poly> comps_;
};

PolyMap add(const PolyMap& a, const PolyMap& b);
PolyMap sub(const PolyMap& a, const PolyMap& b);
SeriesVec eval_series(const PolyMap& f, const SeriesVec& phi);

// Square matrix of polynomials, rows indexed by component, columns by y_b.
using PolyMatrix = std::vector<std::vector<Poly>>;

// Entry (a, b) = d f_a / d y_b.
PolyMatrix jacobian_y(const PolyMap& f);
// d f / d y at x = 0, y = 0.
RatMat jacobian_y_at_origin(const PolyMap& f);

PolyMap mat_vec(const PolyMatrix& m, const PolyMap& v);
Poly det(const PolyMatrix& m);
SeriesMat eval_series(const PolyMatrix& m, const SeriesVec& phi);

}  // namespace pfaff
