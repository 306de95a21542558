#include <string>

#include "doctest.h"
#include "oracles/laurent.hpp"
#include "pfaff/integrability.hpp"
#include "pfaff/parser.hpp"
#include "support/random.hpp"

using namespace pfaff;
using testing_support::Rng;

namespace {

PfaffianSystem e2() { return PfaffianSystem::from_strings(2, 1, {1, 1}, {{"y1 + y1^2"}, {"y1 + y1^2"}}); }
PfaffianSystem e3() { return PfaffianSystem::from_strings(2, 1, {1, 1}, {{"y1"}, {"y1^2 - x1*y1"}}); }
PfaffianSystem e5() {
  return PfaffianSystem::from_strings(2, 1, {2, 2}, {{"x1*y1 + x1*x2"}, {"x2*y1 + x1*x2"}});
}

Series x1_series(int trunc) {
  Series s(2, trunc);
  s.add_term({1, 0}, Rat(1));
  return s;
}

// Random expression over m = 2 with f(0,0) = 0, coefficients in -2..2,
// total degree <= 2.
std::string random_expression(Rng& rng, std::size_t n) {
  const std::vector<std::string> vars = n == 1 ? std::vector<std::string>{"x1", "x2", "y1"}
                                               : std::vector<std::string>{"x1", "x2", "y1", "y2"};
  std::string text = "0";
  for (int t = 0; t < 4; ++t) {
    const int c = rng.uniform(-2, 2);
    if (c == 0) continue;
    std::string mono = vars[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(vars.size()) - 1))];
    if (rng.coin()) mono += "*" + vars[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(vars.size()) - 1))];
    text += " + (" + std::to_string(c) + ")*" + mono;
  }
  return text;
}

}  // namespace

TEST_SUITE("integrability") {
  TEST_CASE("defect of the bundled examples") {
    CHECK(compat_defect(e2(), 1, 2).is_zero());
    CHECK(compat_defect(e5(), 1, 2).is_zero());
    const PolyMap f = compat_defect(e3(), 1, 2);
    CHECK(f[0] == parse_expression("x1*y1 - y1^2", 2, 1));
    CHECK(f[0].to_string() == "x1*y1 - y1^2");
  }

  TEST_CASE("integrability verdicts") {
    CHECK(is_completely_integrable(e2()).holds());
    const Verdict v = is_completely_integrable(e3());
    CHECK(v.status == VerdictStatus::Fails);
    CHECK(v.certificate.indices == std::vector<std::size_t>{1, 2, 1});
    CHECK(v.certificate.witness == "x1*y1");
    const auto euler = PfaffianSystem::from_strings(1, 1, {2}, {{"y1 - x1"}});
    const Verdict vac = is_completely_integrable(euler);
    CHECK(vac.holds());
    CHECK(vac.certificate.detail.find("vacuous") != std::string::npos);
  }

  TEST_CASE("defect on a solution vanishes") {
    CHECK(defect_on_solution(e3(), SeriesVec({x1_series(5)}), 1, 2).is_zero());
    Series diag(2, 8);
    for (int k = 1; k <= 4; ++k) diag.add_term({k, k}, Rat(1));
    CHECK(defect_on_solution(e2(), SeriesVec({diag}), 1, 2).is_zero());
  }

  TEST_CASE("defect agrees with the Frobenius condition computed independently") {
    Rng rng(61);
    int nonzero = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
      std::vector<int> p{rng.uniform(1, 3), rng.uniform(1, 3)};
      std::vector<std::vector<std::string>> text(2);
      for (auto& row : text) {
        for (std::size_t a = 0; a < n; ++a) row.push_back(random_expression(rng, n));
      }
      const auto sys = PfaffianSystem::from_strings(2, n, p, text);
      std::vector<std::vector<oracle::Laurent>> f(2);
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t a = 0; a < n; ++a) f[i].push_back(oracle::from_poly(parse_expression(text[i][a], 2, n)));
      }
      const auto expected = oracle::frobenius_defect(2, n, p, f, 0, 1);
      const PolyMap got = compat_defect(sys, 1, 2);
      for (std::size_t a = 0; a < n; ++a) {
        CHECK_MESSAGE(oracle::from_poly(got[a]).t == expected[a].t, got[a].to_string());
        if (!got[a].is_zero()) ++nonzero;
      }
    }
    CHECK(nonzero > 10);
  }

  TEST_CASE("theorem 2") {
    CHECK(check_theorem2(e3(), SeriesVec({x1_series(4)})).holds());
    CHECK(check_theorem2(e2(), SeriesVec({x1_series(4)})).status == VerdictStatus::NotApplicable);
    const auto two = PfaffianSystem::from_strings(2, 2, {1, 1}, {{"y1", "y2"}, {"y1*y2", "x1*y1"}});
    CHECK(check_theorem2(two, SeriesVec::zeros(2, 2, 3)).status == VerdictStatus::NotApplicable);
  }

  TEST_CASE("theorem 3") {
    const Verdict v = check_theorem3(e3(), SeriesVec({x1_series(4)}));
    CHECK(v.holds());
    CHECK(v.certificate.witness == "-x1");
    const Verdict at_zero = check_theorem3(e3(), SeriesVec::zeros(1, 2, 4));
    CHECK(at_zero.holds());
    CHECK(at_zero.certificate.witness == "x1");
    CHECK(check_theorem3(e2(), SeriesVec::zeros(1, 2, 4)).status == VerdictStatus::NotApplicable);
  }

  TEST_CASE("theorem 3 without a nonvanishing determinant") {
    // F_12 = x2 does not involve y, so every determinant vanishes.
    const auto sys = PfaffianSystem::from_strings(2, 1, {1, 1}, {{"x2"}, {"0"}});
    const PolyMap f = compat_defect(sys, 1, 2);
    REQUIRE_FALSE(f.is_zero());
    const Verdict v = check_theorem3(sys, SeriesVec::zeros(1, 2, 4));
    CHECK(v.status == VerdictStatus::Fails);
  }
}
