#include "biphoton/dispersion.hpp"

#include <stdexcept>

namespace biphoton {

double DispersionModel::wavenumber(Polarization p, double omega) const {
  if (!(omega > 0.0))
    throw std::domain_error("wavenumber: omega must be positive");
  const DispersionBranch& b = branch(p);
  const double wref = reference(p);
  return b.n0 * wref / c0 + b.kprime * (omega - wref);
}

double DispersionModel::detuning(Polarization p, double omega,
                                 double grating_k) const {
  return grating_k - 2.0 * wavenumber(p, omega);
}

void DispersionModel::validate() const {
  if (!(omega0 > 0.0))
    throw std::invalid_argument("dispersion: omega0 must be positive");
  for (Polarization p :
       {Polarization::signal, Polarization::idler, Polarization::pump}) {
    const DispersionBranch& b = branch(p);
    if (!(b.n0 >= 1.0))
      throw std::invalid_argument("dispersion: n0 must be >= 1");
    if (!(b.kprime > 0.0))
      throw std::invalid_argument("dispersion: kprime must be positive");
  }
}

DispersionModel ktp_dispersion() {
  DispersionModel m;
  m.omega0 = omega0_default;
  m.signal = {1.6047, 5.4212e-9};
  m.idler = {1.6605, 5.6149e-9};
  m.pump = {1.6326, 5.6949e-9};
  return m;
}

DispersionModel vacuum_dispersion(double omega0) {
  DispersionModel m;
  m.omega0 = omega0;
  m.signal = {1.0, 1.0 / c0};
  m.idler = {1.0, 1.0 / c0};
  m.pump = {1.0, 1.0 / c0};
  return m;
}

} // namespace biphoton
