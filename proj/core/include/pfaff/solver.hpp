#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfaff/series_linalg.hpp"
#include "pfaff/system.hpp"

namespace pfaff {

// How unconstrained coefficients are fixed.
struct FreePolicy {
  enum class Kind { Zero, Fail, Value };

  Kind kind = Kind::Zero;
  // For Kind::Value: coefficient vectors per multi-index. Components that
  // turn out free take these values; unlisted free components get 0.
  std::map<MultiIndex, std::vector<Rat>> values;

  static FreePolicy zero() { return {}; }
  static FreePolicy fail() { return {Kind::Fail, {}}; }
  static FreePolicy with_values(std::map<MultiIndex, std::vector<Rat>> v) {
    return {Kind::Value, std::move(v)};
  }
};

enum class CoeffStatus {
  // Fixed by the equations whatever values the free parameters take.
  Determined,
  // Never pinned down; value chosen by the FreePolicy.
  Free,
  // Fixed by the equations only once a free parameter is chosen; moves
  // with that parameter.
  ForcedConsistency,
};

std::string_view to_string(CoeffStatus s);

struct LedgerEntry {
  // One status per component y_1..y_n.
  std::vector<CoeffStatus> components;
  // Values of Free components (same length as components; 0 elsewhere).
  std::vector<Rat> assigned;

  bool has_free() const;
  // Free if any component is free, else ForcedConsistency if any was forced.
  CoeffStatus summary() const;
};

// Truncated solution phi = sum_{1 <= |k| <= order} c_k x^k.
struct FormalSolution {
  SeriesVec phi;
  std::map<MultiIndex, LedgerEntry> ledger;
  int order = 0;
};

enum class SolveStatus { Solved, Inconsistent, Aborted };

std::string_view to_string(SolveStatus s);

struct InconsistencyWitness {
  MultiIndex index;
  std::size_t equation = 0;   // 1-based i
  std::size_t component = 0;  // 1-based a
  Rat value;                  // the row reduced to 0 = value
  std::string row_text;       // "0 = value"
};

struct DegreeCounts {
  int degree = 0;
  std::size_t determined = 0;
  std::size_t free = 0;
  std::size_t forced = 0;
};

struct FreeLocation {
  MultiIndex index;
  std::size_t component = 0;  // 1-based
  Rat value;
};

struct SolveReport {
  SolveStatus status = SolveStatus::Solved;
  std::optional<InconsistencyWitness> inconsistency;
  std::vector<DegreeCounts> per_degree;
  std::vector<FreeLocation> free_parameters;
  // Extra degrees solved past the order so that unknowns only constrained
  // later (orders p_i >= 2) are classified correctly.
  int lookahead = 0;
  std::string message;
};

struct SolveResult {
  FormalSolution solution;
  SolveReport report;
};

// Degree-by-degree coefficient matching with exact elimination. Unknowns a
// degree leaves unconstrained stay symbolic until a later degree fixes them
// or the solve (plus lookahead) ends, where the policy assigns them.
SolveResult solve_formal(const PfaffianSystem& sys, int order, const FreePolicy& policy = {});

// r_i = x_i^{p_i} d(phi)/dx_i - f_i(x, phi), truncated to phi.trunc().
std::vector<SeriesVec> residual(const PfaffianSystem& sys, const SeriesVec& phi);

struct ResidualWitness {
  std::size_t equation = 0;   // 1-based
  std::size_t component = 0;  // 1-based
  MultiIndex index;
  Rat coeff;
};

struct DefectCheck {
  std::size_t i = 0;
  std::size_t j = 0;
  bool vanishes = true;
  int checked_degree = 0;
};

struct VerifyReport {
  // Largest D <= trunc with all residuals vanishing through degree D.
  int verified_degree = 0;
  int trunc = 0;
  std::optional<ResidualWitness> failure;
  std::vector<DefectCheck> defects;

  bool ok() const noexcept { return verified_degree == trunc; }
};

VerifyReport verify(const PfaffianSystem& sys, const SeriesVec& phi);

// d f_1/dy evaluated at phi, then restricted to x_1 = 0. Requires p_1 == 1.
SeriesMat restricted_jacobian_A(const PfaffianSystem& sys, const SeriesVec& phi);

// Rebuilds phi = sum_j c_j(x_2..x_m) x_1^j from its x_1^0 layer c0 by solving
// (A - jI) c_j = h_j for j = 1..order. A layer j at which det(A - jI) has zero
// constant term raises NonUnitMatrix carrying j, unless `pinned` supplies c_j;
// a pinned layer is checked against its equation and rejected (DomainError)
// if it does not satisfy it.
FormalSolution layered_solve_axis1(const PfaffianSystem& sys, int order, const SeriesVec& c0,
                                   const std::map<int, SeriesVec>& pinned = {});

}  // namespace pfaff
