#pragma once

#include "biphoton/constants.hpp"

namespace biphoton {

enum class Polarization { signal, idler, pump };

// One polarization branch, linearized around its reference frequency:
//   k(w) = n0 * wref / c0 + kprime * (w - wref)
// n0 is the phase index at wref, kprime = dk/dw the group slowness (s/m).
struct DispersionBranch {
  double n0 = 1.0;
  double kprime = 1.0 / c0;
};

// Three-branch model for the collinear interaction. The signal and idler
// branches are referenced to the degenerate carrier omega0; the pump branch
// is referenced to 2*omega0 (sum frequency of the degenerate pair).
struct DispersionModel {
  DispersionBranch signal;
  DispersionBranch idler;
  DispersionBranch pump;
  double omega0 = omega0_default;

  double reference(Polarization p) const {
    return p == Polarization::pump ? 2.0 * omega0 : omega0;
  }
  const DispersionBranch& branch(Polarization p) const {
    switch (p) {
      case Polarization::signal: return signal;
      case Polarization::idler: return idler;
      default: return pump;
    }
  }

  // Crystal wavenumber k(w) in rad/m. Throws std::domain_error for w <= 0.
  double wavenumber(Polarization p, double omega) const;

  // Phase mismatch Delta(w) = K - 2 k(w) against a grating of wavenumber K.
  double detuning(Polarization p, double omega, double grating_k) const;

  // Throws std::invalid_argument if any branch is unphysical.
  void validate() const;
};

// Flux-grown KTP at 800 nm signal/idler, 400 nm pump; type-0 z-polarized
// interaction with indices and group slownesses from the Sellmeier fits.
DispersionModel ktp_dispersion();

// All three branches propagate in vacuum: n0 = 1, kprime = 1/c0, so
// k(w) = w/c0 exactly (the linearization is exact for vacuum).
DispersionModel vacuum_dispersion(double omega0 = omega0_default);

} // namespace biphoton
