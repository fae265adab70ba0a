#include <benchmark/benchmark.h>

#include "qrmt/analytic.hpp"
#include "qrmt/eigensolver.hpp"
#include "qrmt/sampler.hpp"
#include "qrmt/specfun.hpp"

namespace {

using namespace qrmt;

void BM_Eigenvalues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RngStream rng(1, 0);
  const SymmetricMatrix h = goe_matrix(n, 0.5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(h));
}
BENCHMARK(BM_Eigenvalues)->Arg(20)->Arg(50);

void BM_SampleLevy(benchmark::State& state) {
  const auto p = EnsembleParams::from_lambda_auto(50, 1.0);
  RngStream rng(2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_q_gt1(p, rng));
}
BENCHMARK(BM_SampleLevy);

void BM_SampleRestricted(benchmark::State& state) {
  const auto p = EnsembleParams::from_q(50, 0.0, 25.0);
  RngStream rng(3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_q_lt1(p, rng));
}
BENCHMARK(BM_SampleRestricted);

void BM_SeededDraw(benchmark::State& state) {
  const auto p = EnsembleParams::from_lambda_auto(20, 1.0);
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_ensemble(p, 7, i++));
}
BENCHMARK(BM_SeededDraw);

void BM_Kummer(benchmark::State& state) {
  double z = -0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kummer_m(10.5, 12.0, z));
    z = z < -1e4 ? -0.5 : z * 1.3;
  }
}
BENCHMARK(BM_Kummer);

void BM_LevelDensity(benchmark::State& state) {
  const auto p = EnsembleParams::from_lambda_auto(50, 0.75);
  double e = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(level_density(e, p));
    e = e > 3.0 ? 0.1 : e + 0.01;
  }
}
BENCHMARK(BM_LevelDensity);

void BM_GapProbability(benchmark::State& state) {
  const auto p = EnsembleParams::from_lambda(20, 1.0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(gap_probability(0.8, p));
}
BENCHMARK(BM_GapProbability);

void BM_LevyDensity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(levy_density(2.0, 1.5, 1.0));
}
BENCHMARK(BM_LevyDensity);

}  // namespace

BENCHMARK_MAIN();
