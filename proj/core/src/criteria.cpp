#include "pfaff/criteria.hpp"

#include <algorithm>

#include "pfaff/error.hpp"
#include "pfaff/solver.hpp"

namespace pfaff {

namespace {

constexpr const char* kConverges = "the formal power series solution converges near 0";
constexpr const char* kAllConverge = "every formal power series solution converges near 0";

RatMat to_ratmat(const std::vector<std::vector<Rat>>& rows) {
  RatMat out(rows.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows.size(); ++c) out(r, c) = rows[r][c];
  }
  return out;
}

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s;
}

Verdict not_applicable(std::string theorem, std::string why) {
  Verdict v = make_verdict(std::move(theorem), VerdictStatus::NotApplicable);
  v.certificate.detail = std::move(why);
  return v;
}

}  // namespace

Rat CharPoly::operator()(const Rat& lambda) const {
  Rat acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * lambda + *it;
  return acc;
}

CharPoly char_poly(const RatMat& m) {
  if (!m.is_square()) throw ShapeError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  // det(lambda*I - M) = sum c[k] lambda^k with c[n] = 1.
  std::vector<Rat> c(n + 1);
  c[n] = 1;
  RatMat mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMat next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    c[n - k] = -trace(m * mk) / Rat(static_cast<long>(k));
  }
  CharPoly out;
  out.coeffs = std::move(c);
  if (n % 2 == 1) {
    for (auto& v : out.coeffs) v = -v;
  }
  return out;
}

std::int64_t eigenvalue_bound(const RatMat& m) {
  Rat best = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rat sum = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) sum += abs(m(r, c));
    best = std::max(best, sum);
  }
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), best.get_num_mpz_t(), best.get_den_mpz_t());
  return fl.get_si();
}

std::vector<std::int64_t> integer_eigs(const RatMat& m, std::optional<std::int64_t> bound) {
  const CharPoly p = char_poly(m);
  const std::int64_t limit = bound.value_or(eigenvalue_bound(m));
  std::vector<std::int64_t> out;
  for (std::int64_t j = 0; j <= limit; ++j) {
    if (p(Rat(static_cast<long>(j))) == 0) out.push_back(j);
  }
  return out;
}

Verdict check_theoremA(const PfaffianSystem& sys) {
  if (!sys.is_fuchsian()) {
    for (std::size_t i = 1; i <= sys.m(); ++i) {
      if (sys.p(i) != 1) {
        Verdict v = not_applicable("Theorem A", "p_" + std::to_string(i) + " = " +
                                                     std::to_string(sys.p(i)) + " > 1");
        v.certificate.indices = {i};
        return v;
      }
    }
  }
  Verdict v = make_verdict("Theorem A", VerdictStatus::Holds, kAllConverge);
  v.certificate.detail = "all p_i = 1 (Fuchsian system)";
  return v;
}

Verdict check_theoremB(const PfaffianSystem& sys, std::size_t axis, const CriteriaOptions& options) {
  if (axis < 1 || axis > sys.m()) throw DomainError("axis out of range");
  const std::string name = "Theorem B[" + std::to_string(axis) + "]";
  if (sys.p(axis) != 1) {
    Verdict v = not_applicable(name, "p_" + std::to_string(axis) + " = " +
                                         std::to_string(sys.p(axis)) + " is not Fuchsian");
    v.certificate.indices = {axis};
    return v;
  }
  const RatMat j0 = jacobian_y_at_origin(sys.f(axis));
  const std::int64_t bound = options.eig_bound.value_or(eigenvalue_bound(j0));
  const auto eigs = integer_eigs(j0, bound);
  if (!eigs.empty()) {
    Verdict v = make_verdict(name, VerdictStatus::Fails);
    v.certificate.indices = {axis};
    v.certificate.eigenvalue = eigs.front();
    v.certificate.detail = "J_" + std::to_string(axis) + "(0) = " + j0.to_string() +
                           " has non-negative integer eigenvalue(s) " + join_ints(eigs);
    return v;
  }
  Verdict v = make_verdict(name, VerdictStatus::Holds,
                           std::string(kAllConverge) + " (unique when completely integrable)");
  v.certificate.indices = {axis};
  v.certificate.detail = "J_" + std::to_string(axis) + "(0) = " + j0.to_string() +
                         " has no eigenvalue in {0.." + std::to_string(bound) + "}";
  return v;
}

Verdict check_theoremC(const PfaffianSystem& sys) {
  const std::string name = "Theorem C";
  if (sys.m() < 2) return not_applicable(name, "requires m >= 2");
  for (std::size_t i = 1; i <= sys.m(); ++i) {
    if (sys.p(i) < 2) {
      Verdict v = not_applicable(name, "p_" + std::to_string(i) + " = 1; requires every p_i > 1");
      v.certificate.indices = {i};
      return v;
    }
  }
  std::vector<std::size_t> nondegenerate;
  std::string dets;
  for (std::size_t i = 1; i <= sys.m(); ++i) {
    const Rat d = det(jacobian_y_at_origin(sys.f(i)));
    if (i > 1) dets += ", ";
    dets += "det J_" + std::to_string(i) + "(0) = " + to_string(d);
    if (d != 0) nondegenerate.push_back(i);
  }
  if (nondegenerate.size() < 2) {
    Verdict v = make_verdict(name, VerdictStatus::Fails);
    v.certificate.indices = nondegenerate;
    v.certificate.detail = "fewer than two non-degenerate Jacobi matrices at the origin: " + dets;
    return v;
  }
  if (sys.m() >= 3) {
    const Verdict integrable = is_completely_integrable(sys);
    if (integrable.status == VerdictStatus::Fails) {
      Verdict v = make_verdict(name, VerdictStatus::Fails);
      v.certificate = integrable.certificate;
      v.certificate.detail = "Jacobi matrices qualify, but for m >= 3 complete integrability is "
                             "required and fails: " + integrable.certificate.detail;
      return v;
    }
  }
  Verdict v = make_verdict(name, VerdictStatus::Holds,
                           "there is a unique formal power series solution and it converges near 0");
  v.certificate.indices = {nondegenerate[0], nondegenerate[1]};
  v.certificate.detail = dets;
  if (sys.m() == 2) {
    v.notes.push_back("for m = 2 complete integrability is not required");
  } else {
    v.notes.push_back("complete integrability verified (all F_ij vanish)");
  }
  return v;
}

Verdict check_theorem1(const PfaffianSystem& sys, const SeriesVec& phi, const CriteriaOptions& options) {
  const std::string name = "Theorem 1";
  if (sys.p(1) != 1) return not_applicable(name, "requires p_1 = 1");
  const SeriesMat a = restricted_jacobian_A(sys, phi);
  const RatMat a0 = to_ratmat(a.constant_part());
  const std::int64_t bound = options.eig_bound.value_or(eigenvalue_bound(a0));
  const auto resonant = integer_eigs(a0, bound);

  Verdict v;
  v.theorem = name;
  v.certificate.indices = {};
  std::string detail = "A(0) = " + a0.to_string();
  if (resonant.empty()) {
    v.status = VerdictStatus::Holds;
    v.conclusion = kConverges;
    v.certificate.detail = detail + " has no eigenvalue in {0.." + std::to_string(bound) +
                           "}, so every det(A - jI) has a nonzero constant term";
    return v;
  }
  std::vector<std::int64_t> unresolved;
  for (std::int64_t j : resonant) {
    const Series d = det(shift_diagonal(a, Rat(static_cast<long>(j))));
    if (d.is_zero()) {
      unresolved.push_back(j);
      continue;
    }
    if (v.certificate.witness.empty()) {
      v.certificate.witness = d.to_string();
      v.certificate.eigenvalue = j;
    }
    detail += "; det(A - " + std::to_string(j) + "I) = " + d.to_string();
  }
  v.certificate.verified_order = phi.trunc();
  if (unresolved.empty()) {
    v.status = VerdictStatus::Holds;
    v.conclusion = kConverges;
    v.certificate.detail = detail;
    return v;
  }
  v.status = VerdictStatus::InconclusiveAtOrder;
  v.order = phi.trunc();
  v.certificate.eigenvalue = unresolved.front();
  v.certificate.witness.clear();
  v.certificate.detail = detail + "; det(A - jI) vanishes through degree " +
                         std::to_string(phi.trunc()) + " for j = " + join_ints(unresolved);
  return v;
}

Verdict check_theorem4(const PfaffianSystem& sys, const SeriesVec& phi) {
  const std::string name = "Theorem 4";
  if (sys.m() != 2) return not_applicable(name, "requires m = 2");
  for (std::size_t i = 1; i <= 2; ++i) {
    if (sys.p(i) < 2) {
      Verdict v = not_applicable(name, "p_" + std::to_string(i) + " = 1; requires p_1, p_2 > 1");
      v.certificate.indices = {i};
      return v;
    }
  }
  for (std::size_t i = 1; i <= 2; ++i) {
    const int need = sys.p(i) - 1;
    const SeriesMat jac = eval_series(jacobian_y(sys.f(i)), phi);
    for (std::size_t r = 0; r < jac.dim(); ++r) {
      for (std::size_t c = 0; c < jac.dim(); ++c) {
        for (const auto& [k, coeff] : jac(r, c).terms()) {
          if (k[i - 1] >= need) continue;
          Verdict v = make_verdict(name, VerdictStatus::Fails);
          v.certificate.indices = {i, r + 1, c + 1};
          v.certificate.witness = Series::monomial(phi.vars(), phi.trunc(), k, coeff).to_string();
          v.certificate.detail = "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                 ") of df_" + std::to_string(i) + "/dy at phi has x" +
                                 std::to_string(i) + "-exponent " + std::to_string(k[i - 1]) +
                                 " < p_" + std::to_string(i) + " - 1 = " + std::to_string(need);
          return v;
        }
      }
    }
  }
  Verdict v = make_verdict(name, VerdictStatus::Holds, kConverges);
  v.certificate.verified_order = phi.trunc();
  v.certificate.detail = "no violation of ord_{x_i} df_i/dy(x, phi) >= p_i - 1 through degree " +
                         std::to_string(phi.trunc());
  v.notes.push_back("terms of total degree above " + std::to_string(phi.trunc()) +
                    " were not computed and are not covered by this certificate");
  return v;
}

CriteriaReport run_all(const PfaffianSystem& sys, const std::optional<SeriesVec>& phi,
                       const CriteriaOptions& options) {
  require_valid(sys);
  CriteriaReport report;
  auto& out = report.verdicts;
  const char* no_phi = "no formal solution supplied";

  out.push_back(check_theoremA(sys));
  for (std::size_t j = 1; j <= sys.m(); ++j) out.push_back(check_theoremB(sys, j, options));
  out.push_back(check_theoremC(sys));
  out.push_back(phi ? check_theorem1(sys, *phi, options) : not_applicable("Theorem 1", no_phi));
  // only the shape of phi is used
  out.push_back(check_theorem2(sys, phi ? *phi : SeriesVec::zeros(sys.n(), sys.m(), 1)));
  out.push_back(phi ? check_theorem3(sys, *phi, options.theorem3) : not_applicable("Theorem 3", no_phi));
  out.push_back(phi ? check_theorem4(sys, *phi) : not_applicable("Theorem 4", no_phi));

  for (const auto& v : out) {
    if (v.holds()) report.certified_by.push_back(v.theorem);
  }
  report.convergence_certified = !report.certified_by.empty();
  if (report.convergence_certified) {
    report.summary = "convergence certified via ";
    for (std::size_t i = 0; i < report.certified_by.size(); ++i) {
      if (i) report.summary += ", ";
      report.summary += report.certified_by[i];
    }
  } else {
    report.summary = "no criterion applies";
  }
  return report;
}

}  // namespace pfaff
