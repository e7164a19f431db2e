#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "qcorr/dynamics.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/quantifiers.hpp"
#include "qcorr/sampling.hpp"
#include "qcorr/teleport.hpp"

namespace {

using namespace qcorr;

DensityMatrix4 sample_state() {
  std::mt19937_64 rng(1);
  return random_density_matrix(rng);
}

void BM_EigHermitian(benchmark::State& state) {
  const DensityMatrix4 rho = sample_state();
  for (auto _ : state) benchmark::DoNotOptimize(linalg::eig_hermitian(rho.matrix()));
}
BENCHMARK(BM_EigHermitian);

void BM_JcState(benchmark::State& state) {
  const JCParams p{{0.8, std::numbers::pi / 4}, 1.3};
  for (auto _ : state) benchmark::DoNotOptimize(jc_state(p));
}
BENCHMARK(BM_JcState);

void BM_JcOracle(benchmark::State& state) {
  const JCParams p{{0.8, std::numbers::pi / 4}, 1.3};
  for (auto _ : state) benchmark::DoNotOptimize(jc_unitary_oracle(p));
}
BENCHMARK(BM_JcOracle);

void BM_LquGeneric(benchmark::State& state) {
  const DensityMatrix4 rho = sample_state();
  for (auto _ : state) benchmark::DoNotOptimize(lqu_generic(rho));
}
BENCHMARK(BM_LquGeneric);

void BM_LqfiGeneric(benchmark::State& state) {
  const DensityMatrix4 rho = sample_state();
  for (auto _ : state) benchmark::DoNotOptimize(lqfi_generic(rho));
}
BENCHMARK(BM_LqfiGeneric);

void BM_Coherence(benchmark::State& state) {
  const DensityMatrix4 rho = sample_state();
  for (auto _ : state) benchmark::DoNotOptimize(coherence_jsd(rho));
}
BENCHMARK(BM_Coherence);

void BM_LquBruteForce(benchmark::State& state) {
  const DensityMatrix4 rho = sample_state();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lqu_brute_force(rho, n));
}
BENCHMARK(BM_LquBruteForce)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_LqfiBruteForce(benchmark::State& state) {
  const DensityMatrix4 rho = sample_state();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lqfi_brute_force(rho, n));
}
BENCHMARK(BM_LqfiBruteForce)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_FidelityAverage(benchmark::State& state) {
  const TeleportChannel ch = build_channel(sample_state());
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fidelity_average(ch, {n, n}));
}
BENCHMARK(BM_FidelityAverage)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
