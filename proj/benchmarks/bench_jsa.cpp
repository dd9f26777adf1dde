#include <benchmark/benchmark.h>

#include "biphoton/cavity.hpp"
#include "biphoton/jsa.hpp"

using namespace biphoton;

namespace {

CavityAssembly arm(Polarization pol) {
  CavityAssembly cav;
  cav.dispersion = ktp_dispersion();
  cav.dbr.kappa = 2000.0;
  cav.dbr.length = 4e-3;
  cav.dbr.grating_k =
      2.0 * cav.dispersion.wavenumber(pol, cav.dispersion.omega0);
  cav.mirror = MirrorParams::from_rho_squared(0.95);
  cav.gap = 0.1999e-3;
  cav.pol = pol;
  return cav;
}

PumpSpectrum pump() {
  PumpSpectrum p;
  p.sigma = 0.3e12;
  p.center = 2.0 * ktp_dispersion().omega0;
  return p;
}

// One matrix entry via the closed-form exponential sum.
void BM_EntryAnalytic(benchmark::State& state) {
  const CavityAssembly sig = arm(Polarization::signal);
  const CavityAssembly idl = arm(Polarization::idler);
  const double w0 = sig.dispersion.omega0;
  for (auto _ : state) {
    cplx acc = 0.0;
    for (int i = 0; i < 16; ++i) {
      const double ws = w0 * (1.0 + 1e-5 * i);
      acc += phase_matching_integral_analytic(sig, idl, ws, w0);
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 16);
}

// Same entries through the composite quadrature route.
void BM_EntryQuadrature(benchmark::State& state) {
  const CavityAssembly sig = arm(Polarization::signal);
  const CavityAssembly idl = arm(Polarization::idler);
  const double w0 = sig.dispersion.omega0;
  for (auto _ : state) {
    cplx acc = 0.0;
    for (int i = 0; i < 16; ++i) {
      const double ws = w0 * (1.0 + 1e-5 * i);
      acc += phase_matching_integral(sig, idl, ws, w0);
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 16);
}

// Whole-matrix build at a modest grid, analytic integrator.
void BM_BuildJsa(benchmark::State& state) {
  const CavityAssembly sig = arm(Polarization::signal);
  const CavityAssembly idl = arm(Polarization::idler);
  const PumpSpectrum pmp = pump();
  const int n = static_cast<int>(state.range(0));
  const FrequencyGrid grid{2.3552e15, 2.3572e15, n};
  for (auto _ : state) {
    const JsaMatrix jsa = build_jsa(sig, idl, pmp, grid, grid);
    benchmark::DoNotOptimize(jsa.values(0, 0));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

} // namespace

BENCHMARK(BM_EntryAnalytic);
BENCHMARK(BM_EntryQuadrature);
BENCHMARK(BM_BuildJsa)->Arg(64)->Arg(128);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
}
