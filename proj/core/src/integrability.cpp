#include "pfaff/integrability.hpp"

#include <string>
#include <vector>

#include "pfaff/error.hpp"

namespace pfaff {

namespace {

void require_pair(const PfaffianSystem& sys, std::size_t i, std::size_t j) {
  if (i < 1 || j > sys.m() || i >= j) throw DomainError("defect indices must satisfy 1 <= i < j <= m");
}

void require_solution_shape(const PfaffianSystem& sys, const SeriesVec& phi) {
  if (phi.size() != sys.n() || phi.vars() != sys.m()) {
    throw ShapeError("solution shape does not match the system");
  }
}

// Lowest monomial in print order, as re-parseable text.
std::string first_monomial(const Poly& p) {
  const std::string text = p.to_string();
  const Monomial* best = nullptr;
  for (const auto& [mono, c] : p.terms()) {
    if (best == nullptr) {
      best = &mono;
      continue;
    }
    const int db = best->degree();
    const int dm = mono.degree();
    if (dm < db || (dm == db && (mono.x > best->x || (mono.x == best->x && mono.y > best->y)))) {
      best = &mono;
    }
  }
  return best == nullptr ? text : best->to_string();
}

struct ScalarComponent {
  std::size_t i;
  std::size_t j;
  std::size_t a;  // 1-based component
  Poly g;
};

bool next_combination(std::vector<std::size_t>& idx, std::size_t total) {
  const std::size_t k = idx.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (idx[pos] < total - k + pos) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

PolyMap compat_defect(const PfaffianSystem& sys, std::size_t i, std::size_t j) {
  require_pair(sys, i, j);
  const PolyMap& fi = sys.f(i);
  const PolyMap& fj = sys.f(j);
  const PolyMap ji_fj = mat_vec(jacobian_y(fi), fj);
  const PolyMap jj_fi = mat_vec(jacobian_y(fj), fi);
  std::vector<Poly> out;
  for (std::size_t a = 0; a < sys.n(); ++a) {
    Poly v = mul_x_power(partial_x(fi[a], j), j, sys.p(j));
    v = sub(v, mul_x_power(partial_x(fj[a], i), i, sys.p(i)));
    v = add(v, ji_fj[a]);
    v = sub(v, jj_fi[a]);
    out.push_back(std::move(v));
  }
  return PolyMap(std::move(out));
}

DefectSet compat_defects(const PfaffianSystem& sys) {
  DefectSet out;
  for (std::size_t i = 1; i <= sys.m(); ++i) {
    for (std::size_t j = i + 1; j <= sys.m(); ++j) out.emplace(std::pair{i, j}, compat_defect(sys, i, j));
  }
  return out;
}

Verdict is_completely_integrable(const PfaffianSystem& sys) {
  if (sys.m() < 2) {
    Verdict v = make_verdict("Integrability", VerdictStatus::Holds, "completely integrable");
    v.certificate.detail = "vacuous: m = 1 gives no pairs (i, j)";
    return v;
  }
  for (const auto& [ij, defect] : compat_defects(sys)) {
    for (std::size_t a = 0; a < defect.size(); ++a) {
      if (defect[a].is_zero()) continue;
      Verdict v = make_verdict("Integrability", VerdictStatus::Fails, "not completely integrable");
      v.certificate.indices = {ij.first, ij.second, a + 1};
      v.certificate.witness = first_monomial(defect[a]);
      v.certificate.detail = "F_" + std::to_string(ij.first) + std::to_string(ij.second) + "[" +
                             std::to_string(a + 1) + "] = " + defect[a].to_string();
      return v;
    }
  }
  Verdict v = make_verdict("Integrability", VerdictStatus::Holds, "completely integrable");
  v.certificate.detail = "all F_ij vanish identically";
  return v;
}

SeriesVec defect_on_solution(const PfaffianSystem& sys, const SeriesVec& phi, std::size_t i,
                             std::size_t j) {
  require_solution_shape(sys, phi);
  return eval_series(compat_defect(sys, i, j), phi);
}

Verdict check_theorem2(const PfaffianSystem& sys, const SeriesVec& phi) {
  require_solution_shape(sys, phi);
  if (sys.n() != 1) {
    Verdict v = make_verdict("Theorem 2", VerdictStatus::NotApplicable);
    v.certificate.detail = "requires a scalar unknown (n = 1)";
    return v;
  }
  const Verdict integrable = is_completely_integrable(sys);
  if (integrable.status != VerdictStatus::Fails) {
    Verdict v = make_verdict("Theorem 2", VerdictStatus::NotApplicable);
    v.certificate.detail = "system is completely integrable";
    return v;
  }
  Verdict v = make_verdict("Theorem 2", VerdictStatus::Holds,
                           "every formal power series solution converges near 0");
  v.certificate = integrable.certificate;
  return v;
}

Verdict check_theorem3(const PfaffianSystem& sys, const SeriesVec& phi,
                       const Theorem3Options& options) {
  require_solution_shape(sys, phi);
  if (sys.m() < 2) {
    Verdict v = make_verdict("Theorem 3", VerdictStatus::NotApplicable);
    v.certificate.detail = "requires m >= 2";
    return v;
  }
  std::vector<ScalarComponent> comps;
  for (const auto& [ij, defect] : compat_defects(sys)) {
    for (std::size_t a = 0; a < defect.size(); ++a) {
      if (!defect[a].is_zero()) comps.push_back({ij.first, ij.second, a + 1, defect[a]});
    }
  }
  if (comps.empty()) {
    Verdict v = make_verdict("Theorem 3", VerdictStatus::NotApplicable);
    v.certificate.detail = "system is completely integrable";
    return v;
  }
  const std::size_t n = sys.n();
  if (comps.size() < n) {
    Verdict v = make_verdict("Theorem 3", VerdictStatus::NotApplicable);
    v.certificate.detail = "only " + std::to_string(comps.size()) + " nonzero defect components, need " +
                           std::to_string(n);
    return v;
  }

  std::vector<std::size_t> pick(n);
  for (std::size_t s = 0; s < n; ++s) pick[s] = s;
  bool symbolic_nonzero = false;
  std::size_t tried = 0;
  do {
    if (tried == options.subset_cap) {
      Verdict v = make_verdict("Theorem 3", VerdictStatus::InconclusiveAtOrder);
      v.order = phi.trunc();
      v.certificate.detail = "subset cap of " + std::to_string(options.subset_cap) + " exceeded";
      v.notes.push_back("raise the subset cap to continue the search");
      return v;
    }
    ++tried;
    PolyMatrix jac(n);
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t b = 1; b <= n; ++b) jac[s].push_back(partial_y(comps[pick[s]].g, b));
    }
    if (!det(jac).is_zero()) symbolic_nonzero = true;
    const Series d = det(eval_series(jac, phi));
    if (!d.is_zero()) {
      Verdict v = make_verdict("Theorem 3", VerdictStatus::Holds,
                               "the formal solution converges near 0");
      std::string names;
      for (std::size_t s = 0; s < n; ++s) {
        const auto& c = comps[pick[s]];
        v.certificate.indices.insert(v.certificate.indices.end(), {c.i, c.j, c.a});
        if (s) names += ", ";
        names += "F_" + std::to_string(c.i) + std::to_string(c.j) + "[" + std::to_string(c.a) + "]";
      }
      v.certificate.witness = d.to_string();
      v.certificate.verified_order = phi.trunc();
      v.certificate.detail = "det d(" + names + ")/dy at phi";
      return v;
    }
  } while (next_combination(pick, comps.size()));

  if (symbolic_nonzero) {
    Verdict v = make_verdict("Theorem 3", VerdictStatus::InconclusiveAtOrder);
    v.order = phi.trunc();
    v.certificate.detail = "every candidate determinant vanishes on phi through the truncation";
    return v;
  }
  Verdict v = make_verdict("Theorem 3", VerdictStatus::Fails);
  v.certificate.detail = "every candidate Jacobian determinant is identically zero";
  return v;
}

}  // namespace pfaff
