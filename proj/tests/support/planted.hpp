#pragma once

// Systems built around a known polynomial solution phi*:
//   f_i = J_i (y - phi*) + x_i^{p_i} d(phi*)/dx_i  [+ c_i (y_1 - phi*_1)^2]
// so that phi* solves every equation exactly.

#include <vector>

#include "pfaff/system.hpp"
#include "support/random.hpp"

namespace testing_support {

struct PlantedSystem {
  pfaff::PfaffianSystem sys;
  std::vector<pfaff::Poly> phi;  // x-only polynomials, no constant term

  pfaff::SeriesVec phi_series(int order) const {
    std::vector<pfaff::Series> comps;
    for (const auto& p : phi) {
      pfaff::Series s(sys.m(), order);
      for (const auto& [mono, c] : p.terms()) s.add_term(mono.x, c);
      comps.push_back(std::move(s));
    }
    return pfaff::SeriesVec(std::move(comps));
  }
};

inline std::vector<pfaff::Poly> random_x_polys(Rng& rng, std::size_t m, std::size_t n, int max_degree,
                                               int terms) {
  std::vector<pfaff::Poly> out;
  for (std::size_t a = 0; a < n; ++a) {
    pfaff::Poly p(m, n);
    for (int t = 0; t < terms; ++t) {
      MultiIndex k = rng.index(m, max_degree);
      if (k.total() == 0) continue;
      p.add_term({k, MultiIndex(n)}, Rat(rng.uniform(-3, 3)));
    }
    out.push_back(std::move(p));
  }
  return out;
}

inline PlantedSystem make_planted(const std::vector<int>& p, const std::vector<pfaff::RatMat>& jac,
                                  std::vector<pfaff::Poly> phi, const std::vector<Rat>& quadratic = {}) {
  const std::size_t m = p.size();
  const std::size_t n = phi.size();
  std::vector<pfaff::Poly> deviation;
  for (std::size_t a = 0; a < n; ++a) deviation.push_back(pfaff::Poly::y_var(m, n, a + 1) - phi[a]);
  std::vector<pfaff::PolyMap> f;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<pfaff::Poly> comps;
    for (std::size_t a = 0; a < n; ++a) {
      pfaff::Poly c = pfaff::mul_x_power(pfaff::partial_x(phi[a], i + 1), i + 1, p[i]);
      for (std::size_t b = 0; b < n; ++b) c = c + pfaff::scale(deviation[b], jac[i](a, b));
      if (i < quadratic.size() && a == 0) c = c + pfaff::scale(deviation[0] * deviation[0], quadratic[i]);
      comps.push_back(std::move(c));
    }
    f.emplace_back(std::move(comps));
  }
  return {pfaff::PfaffianSystem(m, n, p, std::move(f)), std::move(phi)};
}

}  // namespace testing_support
