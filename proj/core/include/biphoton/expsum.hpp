#pragma once

#include <vector>

#include "biphoton/cavity.hpp"
#include "biphoton/numeric.hpp"

namespace biphoton {

// Finite sum of complex exponentials c * e^{b x}. Closed under conjugation
// and products, and integrates in closed form, which is what makes the
// analytic phase-matching route cheap.
struct ExpTerm {
  cplx coeff;
  cplx rate;
};

struct ExpSum {
  std::vector<ExpTerm> terms;

  cplx eval(double x) const;
  ExpSum conjugated() const;
  ExpSum operator*(const ExpSum& other) const;

  // Multiply by the plane wave e^{rate_shift * x}.
  void shift(cplx rate_shift);

  // Integral over [0, length].
  cplx integrate(double length) const;
};

// Exponential decomposition of the intracavity mode u(x, omega) over the
// grating, identical in value to mode_function up to the band-edge clamp
// noted in the implementation.
ExpSum cavity_mode_exponentials(const CavityAssembly& cav, double omega,
                                ModeNormalization norm);

} // namespace biphoton
