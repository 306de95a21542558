#include <benchmark/benchmark.h>

#include "pfaff/criteria.hpp"
#include "pfaff/diagnostics.hpp"
#include "pfaff/series.hpp"
#include "pfaff/solver.hpp"

using namespace pfaff;

namespace {

Series dense(std::size_t vars, int trunc, int salt) {
  Series s(vars, trunc);
  for (int d = 0; d <= trunc; ++d) {
    for (const auto& k : indices_of_degree(vars, d)) {
      s.add_term(k, Rat((static_cast<long>(k.total()) * 7 + salt) % 11 - 5, 1 + d % 3));
    }
  }
  return s;
}

void BM_SeriesMul(benchmark::State& state) {
  const int trunc = static_cast<int>(state.range(0));
  const Series a = dense(2, trunc, 1);
  const Series b = dense(2, trunc, 4);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
  state.SetComplexityN(trunc);
}
BENCHMARK(BM_SeriesMul)->DenseRange(4, 20, 4)->Complexity();

void BM_SolveEuler(benchmark::State& state) {
  const auto sys = PfaffianSystem::from_strings(1, 1, {2}, {{"y1 - x1"}});
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_formal(sys, order));
}
BENCHMARK(BM_SolveEuler)->Arg(10)->Arg(20)->Arg(40);

void BM_SolveE5(benchmark::State& state) {
  const auto sys =
      PfaffianSystem::from_strings(2, 1, {2, 2}, {{"x1*y1 + x1*x2"}, {"x2*y1 + x1*x2"}});
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_formal(sys, order));
}
BENCHMARK(BM_SolveE5)->Arg(6)->Arg(10)->Arg(15);

void BM_SolveE2Diagonal(benchmark::State& state) {
  const auto sys = PfaffianSystem::from_strings(2, 1, {1, 1}, {{"y1 + y1^2"}, {"y1 + y1^2"}});
  const auto policy = FreePolicy::with_values({{MultiIndex{1, 1}, {Rat(1)}}});
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_formal(sys, order, policy));
}
BENCHMARK(BM_SolveE2Diagonal)->Arg(8)->Arg(16)->Arg(24);

void BM_IntegerEigs(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  RatMat m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Rat(static_cast<long>((3 * r + 5 * c) % 7) - 3, 1 + (r + c) % 2);
  }
  for (auto _ : state) benchmark::DoNotOptimize(integer_eigs(m));
}
BENCHMARK(BM_IntegerEigs)->Arg(2)->Arg(4)->Arg(8);

void BM_GevreyFit(benchmark::State& state) {
  const auto sys = PfaffianSystem::from_strings(1, 1, {2}, {{"y1 - x1"}});
  const GrowthProfile profile = degree_profile(solve_formal(sys, 40).solution);
  for (auto _ : state) benchmark::DoNotOptimize(gevrey_fit(profile));
}
BENCHMARK(BM_GevreyFit);

}  // namespace

BENCHMARK_MAIN();
