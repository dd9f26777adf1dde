#include <benchmark/benchmark.h>

#include <random>

#include "biphoton/schmidt.hpp"

using namespace biphoton;

namespace {

JsaMatrix random_jsa(int n) {
  std::mt19937 rng(n);
  std::normal_distribution<double> gauss(0.0, 1.0);
  JsaMatrix jsa;
  jsa.grid_signal = {2.3552e15, 2.3572e15, n};
  jsa.grid_idler = jsa.grid_signal;
  jsa.values.resize(n, n);
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) jsa.values(m, k) = cplx(gauss(rng), gauss(rng));
  return jsa;
}

void BM_SchmidtDecompose(benchmark::State& state) {
  const JsaMatrix jsa = random_jsa(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const SchmidtSpectrum sp = schmidt_decompose(jsa, 0.0);
    benchmark::DoNotOptimize(sp.lambdas[0]);
  }
}

void BM_ReducedDensity(benchmark::State& state) {
  const JsaMatrix jsa = random_jsa(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const Eigen::MatrixXcd rho = reduced_density(jsa, Side::signal);
    benchmark::DoNotOptimize(rho(0, 0));
  }
}

void BM_TemporalMode(benchmark::State& state) {
  const JsaMatrix jsa = random_jsa(static_cast<int>(state.range(0)));
  const SchmidtSpectrum sp = schmidt_decompose(jsa, 0.0);
  const TimeGrid grid = conjugate_time_grid(sp.grid_signal);
  for (auto _ : state) {
    const std::vector<cplx> v = temporal_mode(sp, 0, grid);
    benchmark::DoNotOptimize(v[0]);
  }
}

} // namespace

BENCHMARK(BM_SchmidtDecompose)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_ReducedDensity)->Arg(64)->Arg(128);
BENCHMARK(BM_TemporalMode)->Arg(128)->Arg(512);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
}
