#include "doctest.h"
#include "pfaff/error.hpp"
#include "pfaff/multi_index.hpp"

using namespace pfaff;

namespace {

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_SUITE("multi_index") {
  TEST_CASE("basic arithmetic") {
    const MultiIndex a{2, 0, 1};
    const MultiIndex b{1, 0, 1};
    CHECK(a.total() == 3);
    CHECK(a.dominates(b));
    CHECK_FALSE(b.dominates(a));
    CHECK(a - b == MultiIndex{1, 0, 0});
    CHECK(a + b == MultiIndex{3, 0, 2});
    CHECK(MultiIndex::unit(3, 2) == MultiIndex{0, 1, 0});
    CHECK(a.to_string() == "(2,0,1)");
    CHECK_THROWS(b - a);
    CHECK_THROWS(MultiIndex(std::vector<int>{1, -1}));
  }

  TEST_CASE("indices of a degree are complete, distinct and lexicographic") {
    for (std::size_t vars = 1; vars <= 4; ++vars) {
      for (int d = 0; d <= 6; ++d) {
        const auto list = indices_of_degree(vars, d);
        CHECK(static_cast<long>(list.size()) == binomial(d + static_cast<long>(vars) - 1, static_cast<long>(vars) - 1));
        for (std::size_t i = 0; i < list.size(); ++i) {
          CHECK(list[i].total() == d);
          if (i > 0) CHECK(list[i - 1] < list[i]);
        }
      }
    }
    const auto two = indices_of_degree(2, 2);
    REQUIRE(two.size() == 3);
    CHECK(two[0] == MultiIndex{0, 2});
    CHECK(two[2] == MultiIndex{2, 0});
  }
}
