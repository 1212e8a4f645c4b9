// Micro-benchmarks for the hot loops: path simulation, the squared
// Bessel chain, exponential-functional draws, root finding and CF
// inversion.
#include <benchmark/benchmark.h>

#include "levydiff/functionals.hpp"
#include "levydiff/gou.hpp"
#include "levydiff/limits.hpp"
#include "levydiff/potential.hpp"

using namespace levydiff;

static void BM_SimulatePath(benchmark::State& state) {
  const PotentialSpec spec = PotentialSpec::drifted_brownian(3.0);
  RngStream rng(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_path(spec, 10.0, 1e-3, rng));
  }
}
BENCHMARK(BM_SimulatePath);

static void BM_SimulatePathJumps(benchmark::State& state) {
  const PotentialSpec spec = PotentialSpec::drift_minus_cp(1, 3, 1);
  RngStream rng(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_path(spec, 10.0, 1e-3, rng));
  }
}
BENCHMARK(BM_SimulatePathJumps);

static void BM_Besq2Chain(benchmark::State& state) {
  RngStream rng(7);
  double u = 1.0;
  for (auto _ : state) {
    for (int i = 0; i < 1000; ++i) u = besq2_step(u, 1e-3, rng);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_Besq2Chain);

static void BM_SampleAInfinity(benchmark::State& state) {
  const PotentialSpec spec = PotentialSpec::drifted_brownian(3.0);
  RngStream rng(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_A_infinity(spec, 1e-3, rng));
  }
}
BENCHMARK(BM_SampleAInfinity);

static void BM_FindKappa(benchmark::State& state) {
  const PotentialSpec spec = PotentialSpec::drift_minus_cp(1, 3, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_kappa(spec));
  }
}
BENCHMARK(BM_FindKappa);

static void BM_CdfInversionStable(benchmark::State& state) {
  const LimitLaw law{LimitLaw::Kind::Stable, 0.5, 0.25};
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cdf_via_cf_inversion(law, x));
    x = x < 10.0 ? x + 0.1 : 0.1;
  }
}
BENCHMARK(BM_CdfInversionStable);
