#include <benchmark/benchmark.h>

#include "hooklen/identities.hpp"
#include "hooklen/involution.hpp"
#include "hooklen/series.hpp"
#include "hooklen/tree.hpp"

namespace {

using namespace hooklen;

void BM_EnumerateOrdered(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto trees = enumerate_ordered(n);
    benchmark::DoNotOptimize(trees);
  }
}
BENCHMARK(BM_EnumerateOrdered)->DenseRange(6, 12, 2);

void BM_PDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FamilyParams fam = FamilyParams::parse("binary");
  for (auto _ : state) {
    auto p = p_direct(n, fam);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_PDirect)->DenseRange(4, 10, 2);

void BM_QDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FamilyParams fam = FamilyParams::parse("negk:2");
  for (auto _ : state) {
    auto q = q_direct(n, fam);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_QDirect)->DenseRange(3, 7, 1);

void BM_QRecursive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FamilyParams fam = FamilyParams::parse("negk:2");
  for (auto _ : state) {
    auto q = q_recursive(n, fam);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_QRecursive)->DenseRange(3, 7, 1);

void BM_SolveY(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const FamilyParams fam = FamilyParams::parse("recip:3");
  for (auto _ : state) {
    auto y = solve_y(fam, order);
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(BM_SolveY)->DenseRange(4, 16, 4);

void BM_VerifyLagrange(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    bool ok = verify_lagrange(order);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_VerifyLagrange)->DenseRange(4, 12, 4);

void BM_InvolutionSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long sum = 0;
    for (const auto& t : enumerate_increasing(n)) {
      const IncreasingTree image = involute(t);
      sum += sign(image);
    }
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_InvolutionSweep)->DenseRange(4, 7, 1);

}  // namespace

BENCHMARK_MAIN();
