#include "pfaff/poly.hpp"

#include <algorithm>
#include <vector>

#include "format.hpp"
#include "pfaff/error.hpp"

namespace pfaff {

namespace {

void require_same_shape(const Poly& a, const Poly& b) {
  if (a.x_vars() != b.x_vars() || a.y_vars() != b.y_vars()) {
    throw ShapeError("polynomial variable counts differ");
  }
}

// Higher powers of earlier variables first, x before y.
bool print_before(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  if (a.x != b.x) return a.x > b.x;
  return a.y > b.y;
}

}  // namespace

std::string Monomial::to_string() const {
  std::string s;
  detail::append_power_product(s, "x", x);
  detail::append_power_product(s, "y", y);
  return s.empty() ? "1" : s;
}

Poly Poly::constant(std::size_t m, std::size_t n, const Rat& value) {
  Poly p(m, n);
  p.add_term({MultiIndex(m), MultiIndex(n)}, value);
  return p;
}

Poly Poly::x_var(std::size_t m, std::size_t n, std::size_t axis) {
  Poly p(m, n);
  p.add_term({MultiIndex::unit(m, axis), MultiIndex(n)}, Rat(1));
  return p;
}

Poly Poly::y_var(std::size_t m, std::size_t n, std::size_t component) {
  Poly p(m, n);
  p.add_term({MultiIndex(m), MultiIndex::unit(n, component)}, Rat(1));
  return p;
}

Rat Poly::coeff(const Monomial& mono) const {
  const auto it = terms_.find(mono);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Monomial& mono, const Rat& value) {
  if (mono.x.size() != m_ || mono.y.size() != n_) {
    throw ShapeError("monomial does not match the polynomial's variable counts");
  }
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly::max_y_degree() const {
  int best = 0;
  for (const auto& [mono, c] : terms_) best = std::max(best, mono.y.total());
  return best;
}

Rat Poly::constant_term() const { return coeff({MultiIndex(m_), MultiIndex(n_)}); }

std::string Poly::to_string() const {
  std::vector<std::pair<Monomial, Rat>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return print_before(a.first, b.first); });
  std::string out;
  for (const auto& [mono, c] : sorted) {
    const std::string text = mono.to_string();
    detail::append_term(out, c, text == "1" ? std::string() : text);
  }
  return out.empty() ? "0" : out;
}

Poly add(const Poly& a, const Poly& b) {
  require_same_shape(a, b);
  Poly out = a;
  for (const auto& [mono, c] : b.terms()) out.add_term(mono, c);
  return out;
}

Poly sub(const Poly& a, const Poly& b) {
  require_same_shape(a, b);
  Poly out = a;
  for (const auto& [mono, c] : b.terms()) out.add_term(mono, -c);
  return out;
}

Poly mul(const Poly& a, const Poly& b) {
  require_same_shape(a, b);
  Poly out(a.x_vars(), a.y_vars());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      out.add_term({ma.x + mb.x, ma.y + mb.y}, ca * cb);
    }
  }
  return out;
}

Poly scale(const Poly& a, const Rat& factor) {
  Poly out(a.x_vars(), a.y_vars());
  for (const auto& [mono, c] : a.terms()) out.add_term(mono, c * factor);
  return out;
}

Poly pow(const Poly& a, unsigned exponent) {
  Poly result = Poly::constant(a.x_vars(), a.y_vars(), Rat(1));
  Poly base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

Poly partial_x(const Poly& p, std::size_t axis) {
  if (axis < 1 || axis > p.x_vars()) throw DomainError("x axis out of range");
  Poly out(p.x_vars(), p.y_vars());
  for (const auto& [mono, c] : p.terms()) {
    const int e = mono.x[axis - 1];
    if (e == 0) continue;
    Monomial d = mono;
    d.x[axis - 1] -= 1;
    out.add_term(d, c * e);
  }
  return out;
}

Poly partial_y(const Poly& p, std::size_t component) {
  if (component < 1 || component > p.y_vars()) throw DomainError("y component out of range");
  Poly out(p.x_vars(), p.y_vars());
  for (const auto& [mono, c] : p.terms()) {
    const int e = mono.y[component - 1];
    if (e == 0) continue;
    Monomial d = mono;
    d.y[component - 1] -= 1;
    out.add_term(d, c * e);
  }
  return out;
}

Poly mul_x_power(const Poly& p, std::size_t axis, int power) {
  if (axis < 1 || axis > p.x_vars()) throw DomainError("x axis out of range");
  if (power < 0) throw DomainError("power must be non-negative");
  Poly out(p.x_vars(), p.y_vars());
  for (const auto& [mono, c] : p.terms()) {
    Monomial shifted = mono;
    shifted.x[axis - 1] += power;
    out.add_term(shifted, c);
  }
  return out;
}

Series eval_series(const Poly& p, const SeriesVec& phi) {
  if (phi.size() != p.y_vars()) throw ShapeError("substitution has the wrong number of components");
  if (phi.vars() != p.x_vars()) throw ShapeError("substitution has the wrong variable count");
  for (const auto& s : phi) {
    if (s.constant_term() != 0) throw DomainError("substituted series must have no constant term");
  }
  const std::size_t m = p.x_vars();
  const int trunc = phi.trunc();
  Series result(m, trunc);

  // powers[b][e] = phi_b^e, filled lazily.
  std::vector<std::vector<Series>> powers(phi.size());
  auto power_of = [&](std::size_t b, int e) -> const Series& {
    auto& cache = powers[b];
    if (cache.empty()) cache.push_back(Series::constant(m, trunc, Rat(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(mul(cache.back(), phi[b]));
    return cache[static_cast<std::size_t>(e)];
  };

  for (const auto& [mono, c] : p.terms()) {
    // phi has no constant term, so this monomial starts at degree |x| + |y|.
    if (mono.degree() > trunc) continue;
    Series product = Series::constant(m, trunc, c);
    for (std::size_t b = 0; b < mono.y.size(); ++b) {
      if (mono.y[b] > 0) product = mul(product, power_of(b, mono.y[b]));
    }
    for (const auto& [k, v] : product.terms()) result.add_term(k + mono.x, v);
  }
  return result;
}

PolyMap::PolyMap(std::vector<Poly> components) : comps_(std::move(components)) {
  for (const auto& p : comps_) require_same_shape(p, comps_.front());
}

bool PolyMap::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Poly& p) { return p.is_zero(); });
}

int PolyMap::max_y_degree() const {
  int best = 0;
  for (const auto& p : comps_) best = std::max(best, p.max_y_degree());
  return best;
}

PolyMap add(const PolyMap& a, const PolyMap& b) {
  if (a.size() != b.size()) throw ShapeError("polynomial map lengths differ");
  std::vector<Poly> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(add(a[i], b[i]));
  return PolyMap(std::move(out));
}

PolyMap sub(const PolyMap& a, const PolyMap& b) {
  if (a.size() != b.size()) throw ShapeError("polynomial map lengths differ");
  std::vector<Poly> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(sub(a[i], b[i]));
  return PolyMap(std::move(out));
}

SeriesVec eval_series(const PolyMap& f, const SeriesVec& phi) {
  std::vector<Series> out;
  out.reserve(f.size());
  for (const auto& p : f) out.push_back(eval_series(p, phi));
  return SeriesVec(std::move(out));
}

PolyMatrix jacobian_y(const PolyMap& f) {
  PolyMatrix jac(f.size());
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = 1; b <= f.y_vars(); ++b) jac[a].push_back(partial_y(f[a], b));
  }
  return jac;
}

RatMat jacobian_y_at_origin(const PolyMap& f) {
  const std::size_t n = f.y_vars();
  RatMat out(f.size(), n);
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      out(a, b) = f[a].coeff({MultiIndex(f.x_vars()), MultiIndex::unit(n, b + 1)});
    }
  }
  return out;
}

PolyMap mat_vec(const PolyMatrix& m, const PolyMap& v) {
  std::vector<Poly> out;
  for (const auto& row : m) {
    if (row.size() != v.size()) throw ShapeError("matrix/vector dimensions differ");
    Poly acc(v.x_vars(), v.y_vars());
    for (std::size_t b = 0; b < row.size(); ++b) acc = add(acc, mul(row[b], v[b]));
    out.push_back(std::move(acc));
  }
  return PolyMap(std::move(out));
}

namespace {

Poly det_recursive(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (cols.size() == 1) return m[row][cols[0]];
  Poly total(m[0][0].x_vars(), m[0][0].y_vars());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Poly& entry = m[row][cols[c]];
    if (entry.is_zero()) continue;
    const std::size_t removed = cols[c];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(c));
    const Poly term = mul(entry, det_recursive(m, cols, row + 1));
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(c), removed);
    total = (c % 2 == 0) ? add(total, term) : sub(total, term);
  }
  return total;
}

}  // namespace

Poly det(const PolyMatrix& m) {
  if (m.empty()) throw ShapeError("determinant of an empty matrix");
  for (const auto& row : m) {
    if (row.size() != m.size()) throw ShapeError("determinant of a non-square matrix");
  }
  std::vector<std::size_t> cols(m.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return det_recursive(m, cols, 0);
}

SeriesMat eval_series(const PolyMatrix& m, const SeriesVec& phi) {
  std::vector<Series> entries;
  for (const auto& row : m) {
    if (row.size() != m.size()) throw ShapeError("polynomial matrix must be square");
    for (const auto& p : row) entries.push_back(eval_series(p, phi));
  }
  return SeriesMat(m.size(), std::move(entries));
}

}  // namespace pfaff
