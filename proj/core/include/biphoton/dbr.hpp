#pragma once

#include "biphoton/numeric.hpp"

namespace biphoton {

// First-order Bragg grating written along [0, L]: relative permittivity
// modulation eps(x) = 1 + deps * cos(grating_k * x), coupling strength
// kappa = deps * k / 4 absorbed into a single frequency-independent rate.
struct DbrParams {
  double kappa = 0.0;     // forward/backward coupling rate, 1/m
  double length = 0.0;    // grating length L, m
  double grating_k = 0.0; // grating wavenumber K, rad/m

  void validate() const;
};

// Which sign of S = sqrt(4 kappa^2 - delta^2) to feed the closed form.
// Physical results are even in S; the alternative branch exists so tests
// can demonstrate that invariance.
enum class RootBranch { principal, negated };

// Envelope transfer functions of the two-point boundary problem
//   dA/dx =  i kappa B e^{+i delta x},  dB/dx = -i kappa A e^{-i delta x}
// with A given at x = 0 and B given at x = L:
//   A(x) = Q(x) A(0) + i kappa P(x) B(L) e^{i delta L}
//   B(x) = -i kappa W(x) A(0) + V(x) B(L)
// S and D are the auxiliaries of the closed form (D is the classic
// denominator i delta (e^{SL}-1) + S (e^{SL}+1)).
struct CoupledModeFields {
  cplx Q, P, V, W;
  cplx S, D;
};

CoupledModeFields coupled_mode_fields(const DbrParams& p, double delta,
                                      double x,
                                      RootBranch branch = RootBranch::principal);

// Left/right amplitude reflection and transmission of the bare grating.
// r is for incidence from x < 0, rprime from x > L; t = tprime.
struct DbrCoefficients {
  cplx r, t, rprime, tprime;
};

DbrCoefficients dbr_coefficients(const DbrParams& p, double delta);

// |kappa P(L)|^2 + |V(0)|^2 - 1. Zero for a lossless grating at real
// detuning; the residual is a global correctness probe for the closed form.
double energy_defect(const DbrParams& p, double delta);

} // namespace biphoton
