#include <algorithm>

#include "doctest.h"
#include "pfaff/error.hpp"
#include "pfaff/system.hpp"

using namespace pfaff;

namespace {

bool mentions(const std::vector<std::string>& list, const std::string& needle) {
  return std::any_of(list.begin(), list.end(),
                     [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

}  // namespace

TEST_SUITE("system") {
  TEST_CASE("a valid system") {
    const auto sys = PfaffianSystem::from_strings(1, 1, {2}, {{"y1 - x1"}});
    CHECK(validate(sys).empty());
    CHECK_FALSE(sys.is_fuchsian());
    CHECK(sys.max_y_degree() == 1);
    CHECK_NOTHROW(require_valid(sys));
  }

  TEST_CASE("every violation is reported") {
    const auto sys = PfaffianSystem::from_strings(2, 1, {0, 1}, {{"1 + y1"}, {"y1"}});
    const auto problems = validate(sys);
    CHECK(problems.size() >= 2);
    CHECK(mentions(problems, "p_1"));
    CHECK(mentions(problems, "constant term in f_1"));
    CHECK_THROWS_AS(require_valid(sys), InvalidSystem);
  }

  TEST_CASE("shape mismatches") {
    const PfaffianSystem sys(2, 1, {1}, {PolyMap({Poly(2, 1)})});
    CHECK_FALSE(validate(sys).empty());
  }

  TEST_CASE("parse errors name the offending entry") {
    try {
      PfaffianSystem::from_strings(1, 2, {1}, {{"y1", "x1 y1"}});
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      const std::string what = e.what();
      CHECK(what.find("f_1[2]") != std::string::npos);
      CHECK(what.find("column 4") != std::string::npos);
    }
  }
}
