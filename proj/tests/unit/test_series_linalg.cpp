#include "doctest.h"
#include "pfaff/error.hpp"
#include "pfaff/series_linalg.hpp"
#include "support/random.hpp"

using namespace pfaff;
using testing_support::Rng;

TEST_SUITE("series_linalg") {
  TEST_CASE("vectors must agree on shape") {
    CHECK_THROWS_AS(SeriesVec({Series(1, 2), Series(1, 3)}), ShapeError);
    CHECK_THROWS_AS(SeriesVec({Series(1, 2), Series(2, 2)}), ShapeError);
    CHECK(SeriesVec::zeros(2, 3, 4).is_zero());
  }

  TEST_CASE("determinant of a diagonal series matrix") {
    const Series one = Series::constant(2, 3, Rat(1));
    const Series x1 = Series::variable(2, 3, 1);
    const SeriesMat m(2, {one + x1, Series(2, 3), Series(2, 3), one - x1});
    const Series d = det(m);
    CHECK(d.coeff({0, 0}) == 1);
    CHECK(d.coeff({2, 0}) == -1);
    CHECK(d.coeff({1, 0}) == 0);
    CHECK(det(SeriesMat::identity(3, 2, 3)) == one);
    const SeriesMat shifted = shift_diagonal(m, Rat(1));
    CHECK(shifted(0, 0) == x1);
  }

  TEST_CASE("linear solve with a unit determinant") {
    Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
      const std::size_t vars = static_cast<std::size_t>(rng.uniform(1, 2));
      const int trunc = rng.uniform(0, 4);
      std::vector<Series> entries;
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          Series s = rng.series(vars, trunc, 3, false);
          if (r == c) s.add_term(MultiIndex(vars), Rat(rng.uniform(1, 3)));
          if (r < c) s.add_term(MultiIndex(vars), Rat(rng.uniform(-2, 2)));
          entries.push_back(std::move(s));
        }
      }
      // Upper-triangular constant part with nonzero diagonal: a unit.
      const SeriesMat m(n, std::move(entries));
      std::vector<Series> rhs;
      for (std::size_t a = 0; a < n; ++a) rhs.push_back(rng.series(vars, trunc, 4));
      const SeriesVec r{rhs};
      const SeriesVec u = solve_linear_series(m, r);
      CHECK(mat_vec(m, u) == r);
    }
  }

  TEST_CASE("non-unit matrices are rejected") {
    const Series x = Series::variable(1, 3, 1);
    const SeriesMat m(1, {x});
    CHECK_THROWS_AS(solve_linear_series(m, SeriesVec({x})), NonUnitMatrix);
  }
}
