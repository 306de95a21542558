#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "pfaff/series_linalg.hpp"
#include "pfaff/system.hpp"
#include "pfaff/verdict.hpp"

namespace pfaff {

// F_ij for i < j; F_ji = -F_ij is never stored.
using DefectSet = std::map<std::pair<std::size_t, std::size_t>, PolyMap>;

// F_ij = x_j^{p_j} df_i/dx_j - x_i^{p_i} df_j/dx_i + (df_i/dy) f_j - (df_j/dy) f_i,
// exact, for 1 <= i < j <= m.
PolyMap compat_defect(const PfaffianSystem& sys, std::size_t i, std::size_t j);

DefectSet compat_defects(const PfaffianSystem& sys);

// Holds iff every F_ij is the zero polynomial. Fails carries the first
// nonzero pair (i, j, component) and one of its monomials.
Verdict is_completely_integrable(const PfaffianSystem& sys);

// F_ij(x, phi). Vanishes through phi's truncation whenever phi solves the
// system through that degree.
SeriesVec defect_on_solution(const PfaffianSystem& sys, const SeriesVec& phi, std::size_t i,
                             std::size_t j);

// n == 1 and not completely integrable => every formal solution converges.
Verdict check_theorem2(const PfaffianSystem& sys, const SeriesVec& phi);

struct Theorem3Options {
  std::size_t subset_cap = 10000;
};

// Searches size-n sets of nonzero scalar components of the F_ij (in
// lexicographic order) for one whose y-Jacobian has a determinant that is
// nonzero after substituting phi.
Verdict check_theorem3(const PfaffianSystem& sys, const SeriesVec& phi,
                       const Theorem3Options& options = {});

}  // namespace pfaff
