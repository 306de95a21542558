#include "pfaff/series.hpp"

#include <algorithm>
#include <vector>

#include "format.hpp"
#include "pfaff/error.hpp"

namespace pfaff {

namespace {

void require_same_vars(const Series& a, const Series& b) {
  if (a.vars() != b.vars()) throw ShapeError("series variable counts differ");
}

void require_axis(const Series& a, std::size_t axis) {
  if (axis < 1 || axis > a.vars()) throw DomainError("axis out of range");
}

}  // namespace

Series::Series(std::size_t vars, int trunc) : vars_(vars), trunc_(trunc) {
  if (vars == 0) throw DomainError("series needs at least one variable");
  if (trunc < 0) throw DomainError("truncation degree must be non-negative");
}

Series Series::constant(std::size_t vars, int trunc, const Rat& value) {
  Series s(vars, trunc);
  s.add_term(MultiIndex(vars), value);
  return s;
}

Series Series::monomial(std::size_t vars, int trunc, const MultiIndex& k, const Rat& coeff) {
  if (k.size() != vars) throw ShapeError("multi-index length does not match variable count");
  Series s(vars, trunc);
  s.add_term(k, coeff);
  return s;
}

Series Series::variable(std::size_t vars, int trunc, std::size_t axis) {
  return monomial(vars, trunc, MultiIndex::unit(vars, axis), Rat(1));
}

Rat Series::coeff(const MultiIndex& k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Series::add_term(const MultiIndex& k, const Rat& value) {
  if (k.size() != vars_) throw ShapeError("multi-index length does not match variable count");
  if (value == 0 || k.total() > trunc_) return;
  auto [it, inserted] = terms_.try_emplace(k, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

Series Series::truncated(int new_trunc) const {
  if (new_trunc > trunc_) throw DomainError("cannot raise the truncation of a series");
  Series out(vars_, new_trunc);
  for (const auto& [k, c] : terms_) {
    if (k.total() <= new_trunc) out.terms_.emplace_hint(out.terms_.end(), k, c);
  }
  return out;
}

std::optional<int> Series::lowest_degree() const {
  std::optional<int> best;
  for (const auto& [k, c] : terms_) {
    const int d = k.total();
    if (!best || d < *best) best = d;
  }
  return best;
}

Series Series::homogeneous_part(int degree) const {
  Series out(vars_, trunc_);
  for (const auto& [k, c] : terms_) {
    if (k.total() == degree) out.terms_.emplace_hint(out.terms_.end(), k, c);
  }
  return out;
}

Series Series::operator-() const {
  Series out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

std::string Series::to_string() const {
  std::vector<std::pair<MultiIndex, Rat>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = a.first.total();
    const int db = b.first.total();
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [k, c] : sorted) {
    std::string mono;
    detail::append_power_product(mono, "x", k);
    detail::append_term(out, c, mono);
  }
  return out.empty() ? "0" : out;
}

Series add(const Series& a, const Series& b) {
  require_same_vars(a, b);
  Series out = a.trunc() <= b.trunc() ? a : a.truncated(b.trunc());
  for (const auto& [k, c] : b.terms()) out.add_term(k, c);
  return out;
}

Series sub(const Series& a, const Series& b) {
  require_same_vars(a, b);
  Series out = a.trunc() <= b.trunc() ? a : a.truncated(b.trunc());
  for (const auto& [k, c] : b.terms()) out.add_term(k, -c);
  return out;
}

Series mul(const Series& a, const Series& b) {
  require_same_vars(a, b);
  const int trunc = std::min(a.trunc(), b.trunc());
  Series out(a.vars(), trunc);
  if (a.is_zero() || b.is_zero()) return out;

  struct Entry {
    int degree;
    const MultiIndex* k;
    const Rat* c;
  };
  std::vector<Entry> rhs;
  rhs.reserve(b.terms().size());
  for (const auto& [k, c] : b.terms()) rhs.push_back({k.total(), &k, &c});
  std::stable_sort(rhs.begin(), rhs.end(),
                   [](const Entry& x, const Entry& y) { return x.degree < y.degree; });

  Rat product;
  for (const auto& [ka, ca] : a.terms()) {
    const int budget = trunc - ka.total();
    if (budget < 0) continue;
    for (const Entry& e : rhs) {
      if (e.degree > budget) break;
      product = ca * *e.c;
      out.add_term(ka + *e.k, product);
    }
  }
  return out;
}

Series scale(const Series& a, const Rat& factor) {
  Series out(a.vars(), a.trunc());
  if (factor == 0) return out;
  for (const auto& [k, c] : a.terms()) out.add_term(k, c * factor);
  return out;
}

Series partial(const Series& a, std::size_t axis) {
  require_axis(a, axis);
  if (a.trunc() < 1) throw DomainError("cannot differentiate a series truncated at degree 0");
  Series out(a.vars(), a.trunc() - 1);
  const std::size_t i = axis - 1;
  for (const auto& [k, c] : a.terms()) {
    if (k[i] == 0) continue;
    MultiIndex lowered = k;
    lowered[i] -= 1;
    out.add_term(lowered, c * k[i]);
  }
  return out;
}

Series mul_axis_power(const Series& a, std::size_t axis, int p) {
  require_axis(a, axis);
  if (p < 0) throw DomainError("axis power must be non-negative");
  Series out(a.vars(), a.trunc() + p);
  const std::size_t i = axis - 1;
  for (const auto& [k, c] : a.terms()) {
    MultiIndex shifted = k;
    shifted[i] += p;
    out.add_term(shifted, c);
  }
  return out;
}

std::optional<int> ord_axis(const Series& a, std::size_t axis) {
  require_axis(a, axis);
  std::optional<int> best;
  for (const auto& [k, c] : a.terms()) {
    const int e = k[axis - 1];
    if (!best || e < *best) best = e;
  }
  return best;
}

Series restrict_axis(const Series& a, std::size_t axis) {
  require_axis(a, axis);
  Series out(a.vars(), a.trunc());
  for (const auto& [k, c] : a.terms()) {
    if (k[axis - 1] == 0) out.add_term(k, c);
  }
  return out;
}

Series axis_layer(const Series& a, std::size_t axis, int power) {
  require_axis(a, axis);
  if (power < 0 || power > a.trunc()) throw DomainError("layer index outside the truncation");
  Series out(a.vars(), a.trunc() - power);
  for (const auto& [k, c] : a.terms()) {
    if (k[axis - 1] != power) continue;
    MultiIndex lowered = k;
    lowered[axis - 1] = 0;
    out.add_term(lowered, c);
  }
  return out;
}

Series inverse(const Series& a) {
  const Rat a0 = a.constant_term();
  if (a0 == 0) throw NonUnitMatrix("series with zero constant term has no inverse");
  // Newton iteration b <- b*(2 - a*b); each step doubles the exact degree.
  Series b = Series::constant(a.vars(), a.trunc(), Rat(1) / a0);
  const Series two = Series::constant(a.vars(), a.trunc(), Rat(2));
  for (int exact = 0; exact < a.trunc(); exact = 2 * exact + 1) {
    b = mul(b, sub(two, mul(a, b)));
  }
  return b;
}

}  // namespace pfaff
