#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfaff/integrability.hpp"
#include "pfaff/linalg.hpp"
#include "pfaff/series_linalg.hpp"
#include "pfaff/system.hpp"
#include "pfaff/verdict.hpp"

namespace pfaff {

// det(M - lambda*I) as coefficients in ascending powers of lambda; the
// leading coefficient is (-1)^n.
struct CharPoly {
  std::vector<Rat> coeffs;

  std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  Rat operator()(const Rat& lambda) const;
};

// Faddeev-LeVerrier, exact.
CharPoly char_poly(const RatMat& m);

// floor of the maximum absolute row sum; bounds |lambda| for every eigenvalue.
std::int64_t eigenvalue_bound(const RatMat& m);

// All j in [0, bound] with det(M - jI) = 0, ascending. The bound defaults to
// eigenvalue_bound(m).
std::vector<std::int64_t> integer_eigs(const RatMat& m, std::optional<std::int64_t> bound = {});

struct CriteriaOptions {
  // Overrides the eigenvalue scan bound used by Theorems B and 1.
  std::optional<std::int64_t> eig_bound;
  Theorem3Options theorem3;
};

// Fuchsian system (every p_i == 1).
Verdict check_theoremA(const PfaffianSystem& sys);

// p_axis == 1 and J_axis(0) has no non-negative integer eigenvalue.
Verdict check_theoremB(const PfaffianSystem& sys, std::size_t axis, const CriteriaOptions& options = {});

// All p_i >= 2 and two axes with non-degenerate J_i(0). For m >= 3 complete
// integrability is also required; for m == 2 it is not.
Verdict check_theoremC(const PfaffianSystem& sys);

// p_1 == 1 and det(A - jI) is not identically zero for every j >= 0, where
// A = df_1/dy(x, phi)|_{x_1 = 0}. Only the j that are eigenvalues of A(0)
// need a series-level check; a determinant vanishing through the truncation
// is reported as inconclusive.
Verdict check_theorem1(const PfaffianSystem& sys, const SeriesVec& phi,
                       const CriteriaOptions& options = {});

// m == 2, p_1, p_2 >= 2 and ord_{x_i} df_i/dy(x, phi) >= p_i - 1 for i = 1, 2. A violating
// monomial is conclusive; absence of one is certified through phi's truncation.
Verdict check_theorem4(const PfaffianSystem& sys, const SeriesVec& phi);

struct CriteriaReport {
  std::vector<Verdict> verdicts;
  bool convergence_certified = false;
  std::vector<std::string> certified_by;
  std::string summary;
};

// A, B (each axis), C, 1, 2, 3, 4 in that order. Checks that need a formal
// solution are reported NotApplicable when phi is absent.
CriteriaReport run_all(const PfaffianSystem& sys, const std::optional<SeriesVec>& phi,
                       const CriteriaOptions& options = {});

}  // namespace pfaff
