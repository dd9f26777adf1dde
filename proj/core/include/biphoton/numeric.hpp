#pragma once

#include <complex>

namespace biphoton {

using cplx = std::complex<double>;

// sinh(z)/z with the removable singularity filled in. The series keeps the
// small-argument regime exact in even powers of z, which also makes every
// caller manifestly invariant under z -> -z.
inline cplx sinch(cplx z) {
  const cplx z2 = z * z;
  if (std::norm(z) < 1e-4) {
    return 1.0 + z2 * (1.0 / 6.0 + z2 * (1.0 / 120.0 + z2 / 5040.0));
  }
  return std::sinh(z) / z;
}

// (e^z - 1)/z without cancellation: e^z - 1 = 2 e^{z/2} sinh(z/2).
inline cplx expm1_over(cplx z) {
  const cplx h = 0.5 * z;
  return std::exp(h) * sinch(h);
}

} // namespace biphoton
