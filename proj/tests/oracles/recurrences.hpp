#pragma once

// Closed forms and hand recursions for the bundled example systems.

#include <gmpxx.h>

#include <vector>

namespace oracle {

// x^2 y' = y - x: c_1 = 1, c_k = (k - 1) c_{k-1}.
inline std::vector<mpz_class> euler_coefficients(int order) {
  std::vector<mpz_class> c;
  mpz_class v = 1;
  for (int k = 1; k <= order; ++k) {
    if (k > 1) v *= k - 1;
    c.push_back(v);
  }
  return c;
}

// y = lambda*u / (1 - lambda*u), u = x1*x2, solves x_i dy/dx_i = y + y^2:
// coefficient of u^k is lambda^k.
inline mpq_class e2_diagonal_coefficient(const mpq_class& lambda, int k) {
  mpq_class v = 1;
  for (int s = 0; s < k; ++s) v *= lambda;
  return v;
}

}  // namespace oracle
