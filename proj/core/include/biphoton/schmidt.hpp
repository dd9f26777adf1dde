#pragma once

#include <Eigen/Dense>
#include <vector>

#include "biphoton/jsa.hpp"

namespace biphoton {

// Schmidt decomposition of the quadrature-weighted amplitude matrix
// B * sqrt(dws * dwi) = U S V^H:
//   B(m, n) / ||B|| = sum_j sqrt(lambda_j) psi_j[m] phi_j[n]
// lambdas carries the full normalized spectrum (sums to 1); psi and phi
// store one retained mode per column, continuum normalized so that
// sum |psi_j[m]|^2 dws = 1. The phase of each mode pair is fixed by making
// the largest-magnitude component of psi_j real positive.
struct SchmidtSpectrum {
  std::vector<double> lambdas;
  Eigen::MatrixXcd psi; // grid_signal.points x modes_retained
  Eigen::MatrixXcd phi; // grid_idler.points x modes_retained
  int modes_retained = 0;
  double weighted_norm = 0.0; // ||B|| in the continuum L2 sense
  FrequencyGrid grid_signal, grid_idler;
};

SchmidtSpectrum schmidt_decompose(const JsaMatrix& jsa,
                                  double truncation = 1e-8);

enum class Side { signal, idler };

// Unnormalized single-photon spectral correlation kernel
//   rho(w, w') = sum_other B B^* dw_other
// for the requested side. Hermitian by construction; its eigenvalues,
// scaled by this side's grid step and the trace, reproduce the lambdas.
Eigen::MatrixXcd reduced_density(const JsaMatrix& jsa, Side side);

struct EntanglementMetrics {
  double entropy_bits = 0.0;   // -sum lambda log2 lambda
  double purity = 0.0;         // sum lambda^2
  double cooperativity = 0.0;  // 1 / purity
};

EntanglementMetrics metrics(const std::vector<double>& lambdas);

struct TimeGrid {
  double t_start = 0.0;
  double dt = 0.0;
  int points = 0;

  double at(int i) const { return t_start + dt * i; }
};

// Time grid conjugate to a frequency grid: dt = 2 pi / (N dw), N points
// from t = 0. On this grid the mode synthesis is a unitary DFT, so the
// discrete Parseval identity holds to rounding.
TimeGrid conjugate_time_grid(const FrequencyGrid& grid);

// Temporal profile of signal mode j at the crystal exit face:
//   v_j(t) = (2 pi)^{-1/2} sum_m psi_j[m] e^{-i w_m t} dw
// normalized afterwards to unit discrete energy sum |v|^2 dt = 1.
std::vector<cplx> temporal_mode(const SchmidtSpectrum& spectrum,
                                int mode_index, const TimeGrid& grid);

} // namespace biphoton
