#include <benchmark/benchmark.h>

#include <random>

#include "ptchain/bethe.hpp"
#include "ptchain/exceptional.hpp"
#include "ptchain/jacobi.hpp"
#include "ptchain/metric.hpp"
#include "ptchain/oracle.hpp"

using namespace ptchain;

static void BM_SolveSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ChainSpec spec(n, 0.9 * gamma_critical(n));
  for (auto _ : state) benchmark::DoNotOptimize(solve_spectrum(spec));
}
BENCHMARK(BM_SolveSpectrum)->Arg(8)->Arg(20)->Arg(200);

static void BM_SolveSpectrumNearCritical(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ChainSpec spec(n, gamma_critical(n) * (1 + 1e-4));
  for (auto _ : state) benchmark::DoNotOptimize(solve_spectrum(spec));
}
BENCHMARK(BM_SolveSpectrumNearCritical)->Arg(20)->Arg(200);

static void BM_HermitianEquivalent(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ChainSpec spec(n, 0.5 * gamma_critical(n));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_equivalent(spec));
}
BENCHMARK(BM_HermitianEquivalent)->Arg(8)->Arg(12)->Arg(32);

static void BM_PolyRoots(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CharPoly p = char_poly(ChainSpec(n, 0.5 * gamma_critical(n)));
  for (auto _ : state) benchmark::DoNotOptimize(poly_roots(p));
}
BENCHMARK(BM_PolyRoots)->Arg(8)->Arg(12)->Arg(24);

static void BM_OracleCriticalLevels(benchmark::State& state) {
  const ChainSpec spec(200, 0.99);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_critical_levels(spec));
}
BENCHMARK(BM_OracleCriticalLevels);

static void BM_Jacobi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  RealMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) a(i, j) = a(j, i) = dist(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_eigensystem(a));
}
BENCHMARK(BM_Jacobi)->Arg(8)->Arg(32)->Arg(64);

static void BM_CriticalSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double gc = gamma_critical(n);
  std::vector<double> gammas;
  for (int i = 0; i <= 8; ++i) gammas.push_back(gc * (1 - std::pow(10.0, -4.0 + 0.25 * i)));
  for (auto _ : state) benchmark::DoNotOptimize(critical_sweep(ChainSpec(n, 0.0), gammas));
}
BENCHMARK(BM_CriticalSweep)->Arg(20)->Arg(200);

BENCHMARK_MAIN();
