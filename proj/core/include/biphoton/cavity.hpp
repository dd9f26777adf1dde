#pragma once

#include <vector>

#include "biphoton/dbr.hpp"
#include "biphoton/dispersion.hpp"
#include "biphoton/grid.hpp"

namespace biphoton {

// Lossless partially transmitting mirror: amplitude reflectivity rho,
// transmissivity tau, rho^2 + tau^2 = 1.
struct MirrorParams {
  double rho = 0.0;
  double tau = 1.0;

  static MirrorParams from_rho_squared(double rho2);
  void validate() const;
};

// Half cavity for one down-conversion arm: mirror at x = -d, vacuum gap of
// width d, grating over [0, L]. The carried dispersion model supplies the
// crystal wavenumber for this arm's polarization; the gap wavenumber is the
// vacuum omega / c0.
struct CavityAssembly {
  DbrParams dbr;
  MirrorParams mirror;
  double gap = 0.0; // d, m
  DispersionModel dispersion;
  Polarization pol = Polarization::signal;

  void validate() const;
};

// Left-incidence steady state at one frequency. f is the round-trip
// denominator 1 - rho r e^{2 i k_gap d}; R the amplitude reflection of the
// whole assembly back through the mirror; a2 the gap amplitude just inside
// the mirror (tau / f).
struct CavityResponse {
  cplx f, R, a2;
  double k_crystal;  // k(omega) in the grating medium
  double k_gap;      // omega / c0 in the gap
  double delta;      // grating detuning at omega
};

CavityResponse cavity_response(const CavityAssembly& cav, double omega);

// Field scattered in from the right side (x > L): the transmitted left-going
// amplitude at x = 0 per unit B(L), and the reflection R' back to the right.
// Diagnostic companion of cavity_response for reciprocity checks.
struct RightIncidenceResponse {
  cplx b0_per_bL, Rprime;
};

RightIncidenceResponse right_incidence_response(const CavityAssembly& cav,
                                                double omega);

// Normalization of the intracavity mode against the external continuum.
enum class ModeNormalization { free_field, unit };

double normalization_constant(ModeNormalization n);

// Intracavity mode profile over the grating, x in [0, L]:
//   u(x, w) = N (tau / f) e^{i k_gap d} [Q(x) e^{i k x} - i kappa W(x) e^{-i k x}]
cplx mode_function(const CavityAssembly& cav, double x, double omega,
                   ModeNormalization norm = ModeNormalization::free_field);

// Evaluates u(x, omega) many times at fixed omega without redoing the
// per-frequency setup; the quadrature integrator leans on this.
class ModeEvaluator {
 public:
  ModeEvaluator(const CavityAssembly& cav, double omega,
                ModeNormalization norm = ModeNormalization::free_field);
  cplx operator()(double x) const;

  double k() const { return k_; }
  double delta() const { return delta_; }
  cplx prefactor() const { return pre_; }

 private:
  cplx S_, G_;
  cplx pre_; // N (tau / f) e^{i k_gap d}
  double k_ = 0.0, delta_ = 0.0, kappa_ = 0.0, length_ = 0.0;
};

// Per-frequency linear response of the bare grating and of the assembly.
struct SpectrumPoint {
  double omega;
  double k;               // crystal wavenumber of the arm
  double dbr_r2, dbr_t2;  // bare grating |r|^2, |t|^2
  double cavity_R2;       // assembly |R|^2
  double intracavity_a2;  // |a2|^2
};

std::vector<SpectrumPoint> reflectivity_spectrum(const CavityAssembly& cav,
                                                 const FrequencyGrid& grid);

} // namespace biphoton
