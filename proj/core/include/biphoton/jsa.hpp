#pragma once

#include <Eigen/Dense>

#include "biphoton/cavity.hpp"
#include "biphoton/grid.hpp"

namespace biphoton {

// Gaussian pump spectral amplitude around the sum-frequency carrier:
//   E(w_sum) = amplitude * exp(-((w_sum - center)/sigma)^2)
struct PumpSpectrum {
  double sigma = 0.0;   // 1/e half width in the amplitude, rad/s
  double center = 0.0;  // 2 * omega0, rad/s
  double amplitude = 1.0;

  void validate() const;
  double operator()(double omega_sum) const;
};

struct JsaMatrix {
  FrequencyGrid grid_signal, grid_idler;
  Eigen::MatrixXcd values; // values(m, n) = B(w_s[m], w_i[n])
};

// Node budget for the direct quadrature of the phase-matching integral.
// Panels are sized so the fastest phase in the integrand gets at least
// points_per_period nodes per cycle.
struct QuadratureSettings {
  double points_per_period = 20.0;
  int panel_degree = 10;
  int min_panels = 4;
  // When set, the integral is recomputed at doubled node density and a
  // relative change above convergence_tol raises NumericalError.
  bool check_convergence = false;
  double convergence_tol = 1e-6;
};

enum class IntegratorKind { analytic, quadrature };

// Equal panels needed so a phase accumulating at |rate| over [0, length]
// receives points_per_period nodes per cycle, floored at min_panels.
int panel_count(const QuadratureSettings& settings, double rate, double length);

struct JsaBuildOptions {
  IntegratorKind integrator = IntegratorKind::analytic;
  QuadratureSettings quadrature;
  ModeNormalization normalization = ModeNormalization::free_field;
  int workers = 1;
};

// Overlap of the pump plane wave with the conjugated signal and idler
// cavity modes over the grating, integrated by composite Gauss-Legendre
// panels sized from the integrand's fastest phase.
cplx phase_matching_integral(const CavityAssembly& signal_cav,
                             const CavityAssembly& idler_cav, double omega_s,
                             double omega_i,
                             const QuadratureSettings& settings = {},
                             ModeNormalization norm = ModeNormalization::free_field);

// Same integral in closed form through the exponential decomposition of the
// modes. Production path for full grids.
cplx phase_matching_integral_analytic(const CavityAssembly& signal_cav,
                                      const CavityAssembly& idler_cav,
                                      double omega_s, double omega_i,
                                      ModeNormalization norm = ModeNormalization::free_field);

// Two-photon spectral amplitude over the tensor grid:
//   B(m, n) = sqrt(w_i/w_s)/w_s * E(w_s + w_i) * integral(w_s, w_i)
// Rows scan the signal frequency, columns the idler frequency. Entries are
// independent, so worker threads split row ranges and the result is
// byte-identical for any worker count.
JsaMatrix build_jsa(const CavityAssembly& signal_cav,
                    const CavityAssembly& idler_cav, const PumpSpectrum& pump,
                    const FrequencyGrid& grid_signal,
                    const FrequencyGrid& grid_idler,
                    const JsaBuildOptions& options = {});

} // namespace biphoton
