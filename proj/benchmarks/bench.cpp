#include <benchmark/benchmark.h>

#include "sbnet/discrepancy.hpp"
#include "sbnet/extremal.hpp"
#include "sbnet/haar_sums.hpp"
#include "sbnet/nets.hpp"
#include "sbnet/reduction.hpp"

using namespace sbnet;

static void BM_Render(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto A = SignAssignment::random(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(render(A));
  state.SetComplexityN(std::int64_t{1} << (2 * (n + 1)));
}
BENCHMARK(BM_Render)->DenseRange(4, 10)->Complexity(benchmark::oN);

static void BM_Extrema(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto A = SignAssignment::random(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(extrema(A));
}
BENCHMARK(BM_Extrema)->DenseRange(4, 12);

static void BM_ExtremalWalk(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto A = SignAssignment::random(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(extremal_squares(A));
}
BENCHMARK(BM_ExtremalWalk)->DenseRange(4, 14);

static void BM_SignsFromNet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto net = extremal_squares(SignAssignment::random(n, 1)).as_net();
  for (auto _ : state) benchmark::DoNotOptimize(signs_from_net(net));
}
BENCHMARK(BM_SignsFromNet)->DenseRange(4, 12);

static void BM_StarDiscrepancy(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto P = PointSetQ::from_net(van_der_corput(m));
  for (auto _ : state) benchmark::DoNotOptimize(star_discrepancy(P));
}
BENCHMARK(BM_StarDiscrepancy)->DenseRange(4, 10);

static void BM_Counterexample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_counterexample(n));
}
BENCHMARK(BM_Counterexample)->Arg(12)->Arg(16)->Arg(20);

BENCHMARK_MAIN();
