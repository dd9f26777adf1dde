#include <benchmark/benchmark.h>

#include "biphoton/cavity.hpp"
#include "biphoton/dbr.hpp"

using namespace biphoton;

namespace {

DbrParams demo_grating() {
  DbrParams p;
  p.kappa = 2000.0;
  p.length = 4e-3;
  p.grating_k = 2.0 * 1.6047 * omega0_default / c0;
  return p;
}

CavityAssembly demo_assembly() {
  CavityAssembly cav;
  cav.dispersion = ktp_dispersion();
  cav.dbr = demo_grating();
  cav.mirror = MirrorParams::from_rho_squared(0.95);
  cav.gap = 0.1999e-3;
  cav.pol = Polarization::signal;
  return cav;
}

// Detuning scan across the stop band and both flanks.
void BM_DbrCoefficients(benchmark::State& state) {
  const DbrParams p = demo_grating();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    cplx acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double delta = -6000.0 + 12000.0 * i / (n - 1);
      acc += dbr_coefficients(p, delta).r;
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * n);
}

// Interior fields at a fixed depth, same scan.
void BM_CoupledModeFields(benchmark::State& state) {
  const DbrParams p = demo_grating();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    cplx acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double delta = -6000.0 + 12000.0 * i / (n - 1);
      acc += coupled_mode_fields(p, delta, 1.7e-3).Q;
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * n);
}

// Full assembly response over the production frequency band.
void BM_CavityResponse(benchmark::State& state) {
  const CavityAssembly cav = demo_assembly();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    cplx acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double omega = 2.3552e15 + 2.0e12 * i / (n - 1);
      acc += cavity_response(cav, omega).R;
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * n);
}

} // namespace

BENCHMARK(BM_DbrCoefficients)->Arg(256)->Arg(1191);
BENCHMARK(BM_CoupledModeFields)->Arg(256)->Arg(1191);
BENCHMARK(BM_CavityResponse)->Arg(256)->Arg(1191);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
}
