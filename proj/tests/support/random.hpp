#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pfaff/linalg.hpp"
#include "pfaff/poly.hpp"
#include "pfaff/series.hpp"

namespace testing_support {

using pfaff::MultiIndex;
using pfaff::Rat;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

  // num/den with num in [lo, hi], den in [1, max_den].
  Rat rational(int lo, int hi, int max_den = 1) {
    Rat r(uniform(lo, hi), uniform(1, max_den));
    r.canonicalize();
    return r;
  }

  MultiIndex index(std::size_t vars, int max_degree) {
    const int d = uniform(0, max_degree);
    std::vector<int> k(vars, 0);
    for (int s = 0; s < d; ++s) ++k[static_cast<std::size_t>(uniform(0, static_cast<int>(vars) - 1))];
    return MultiIndex(k);
  }

  pfaff::Series series(std::size_t vars, int trunc, int terms, bool constant_allowed = true) {
    pfaff::Series s(vars, trunc);
    for (int t = 0; t < terms; ++t) {
      MultiIndex k = index(vars, trunc);
      if (!constant_allowed && k.total() == 0) continue;
      s.add_term(k, rational(-5, 5, 3));
    }
    return s;
  }

  pfaff::Poly poly(std::size_t m, std::size_t n, int max_degree, int terms, int coeff_range = 2,
                   bool constant_allowed = false) {
    pfaff::Poly p(m, n);
    for (int t = 0; t < terms; ++t) {
      MultiIndex all = index(m + n, max_degree);
      if (!constant_allowed && all.total() == 0) continue;
      std::vector<int> xs(all.exponents().begin(), all.exponents().begin() + static_cast<long>(m));
      std::vector<int> ys(all.exponents().begin() + static_cast<long>(m), all.exponents().end());
      p.add_term({MultiIndex(xs), MultiIndex(ys)}, Rat(uniform(-coeff_range, coeff_range)));
    }
    return p;
  }

  pfaff::RatMat matrix(std::size_t rows, std::size_t cols, int lo, int hi, int max_den = 1) {
    pfaff::RatMat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(lo, hi, max_den);
    }
    return m;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace testing_support
