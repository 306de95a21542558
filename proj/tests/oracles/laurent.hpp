#pragma once

// Integrability relations recomputed from scratch: the Frobenius condition
// D_j(g_i) = D_i(g_j) for g_i = f_i / x_i^{p_i} and total derivatives
// D_j = d/dx_j + sum_b (g_j)_b d/dy_b, carried out over Laurent polynomials
// and multiplied by x_i^{p_i} x_j^{p_j} at the end.

#include <gmpxx.h>

#include <map>
#include <vector>

#include "pfaff/poly.hpp"

namespace oracle {

using Q = mpq_class;

// Exponents over x_1..x_m, y_1..y_n; negative exponents allowed.
struct Laurent {
  std::map<std::vector<int>, Q> t;

  void add(const std::vector<int>& e, const Q& c) {
    Q& slot = t[e];
    slot += c;
    if (slot == 0) t.erase(e);
  }
};

inline Laurent operator+(Laurent a, const Laurent& b) {
  for (const auto& [e, c] : b.t) a.add(e, c);
  return a;
}

inline Laurent operator-(Laurent a, const Laurent& b) {
  for (const auto& [e, c] : b.t) a.add(e, -c);
  return a;
}

inline Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a.t) {
    for (const auto& [eb, cb] : b.t) {
      std::vector<int> e(ea.size());
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      out.add(e, ca * cb);
    }
  }
  return out;
}

inline Laurent diff(const Laurent& a, std::size_t var) {
  Laurent out;
  for (const auto& [e, c] : a.t) {
    if (e[var] == 0) continue;
    std::vector<int> f = e;
    f[var] -= 1;
    out.add(f, c * e[var]);
  }
  return out;
}

inline Laurent shift(const Laurent& a, std::size_t var, int power) {
  Laurent out;
  for (const auto& [e, c] : a.t) {
    std::vector<int> f = e;
    f[var] += power;
    out.add(f, c);
  }
  return out;
}

inline Laurent from_poly(const pfaff::Poly& p) {
  Laurent out;
  for (const auto& [mono, c] : p.terms()) {
    std::vector<int> e = mono.x.exponents();
    e.insert(e.end(), mono.y.exponents().begin(), mono.y.exponents().end());
    out.add(e, c);
  }
  return out;
}

// Component a of x_i^{p_i} x_j^{p_j} (D_j g_i - D_i g_j), 0-based i, j.
inline std::vector<Laurent> frobenius_defect(std::size_t m, std::size_t n, const std::vector<int>& p,
                                             const std::vector<std::vector<Laurent>>& f, std::size_t i,
                                             std::size_t j) {
  auto g = [&](std::size_t axis) {
    std::vector<Laurent> out;
    for (const auto& comp : f[axis]) out.push_back(shift(comp, axis, -p[axis]));
    return out;
  };
  const auto gi = g(i);
  const auto gj = g(j);
  auto total_derivative = [&](const Laurent& h, std::size_t axis, const std::vector<Laurent>& field) {
    Laurent out = diff(h, axis);
    for (std::size_t b = 0; b < n; ++b) out = out + field[b] * diff(h, m + b);
    return out;
  };
  std::vector<Laurent> out;
  for (std::size_t a = 0; a < n; ++a) {
    Laurent d = total_derivative(gi[a], j, gj) - total_derivative(gj[a], i, gi);
    out.push_back(shift(shift(d, i, p[i]), j, p[j]));
  }
  return out;
}

}  // namespace oracle
