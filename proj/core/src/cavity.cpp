#include "biphoton/cavity.hpp"

#include <cmath>
#include <stdexcept>

#include "biphoton/constants.hpp"
#include "biphoton/errors.hpp"

namespace biphoton {

MirrorParams MirrorParams::from_rho_squared(double rho2) {
  if (!(rho2 >= 0.0 && rho2 < 1.0))
    throw std::invalid_argument("mirror: rho^2 must be in [0, 1)");
  MirrorParams m;
  m.rho = std::sqrt(rho2);
  m.tau = std::sqrt(1.0 - rho2);
  return m;
}

void MirrorParams::validate() const {
  if (!(rho >= 0.0 && rho < 1.0) || !(tau > 0.0 && tau <= 1.0))
    throw std::invalid_argument("mirror: need 0 <= rho < 1 and 0 < tau <= 1");
  if (std::abs(rho * rho + tau * tau - 1.0) > 1e-12)
    throw std::invalid_argument("mirror: rho^2 + tau^2 must equal 1");
}

void CavityAssembly::validate() const {
  dbr.validate();
  mirror.validate();
  dispersion.validate();
  if (!(gap >= 0.0))
    throw std::invalid_argument("cavity: gap must be non-negative");
}

double normalization_constant(ModeNormalization n) {
  return n == ModeNormalization::free_field
             ? 1.0 / std::sqrt(2.0 * pi * c0)
             : 1.0;
}

CavityResponse cavity_response(const CavityAssembly& cav, double omega) {
  cav.validate();
  CavityResponse out;
  out.k_crystal = cav.dispersion.wavenumber(cav.pol, omega);
  out.k_gap = omega / c0;
  out.delta = cav.dbr.grating_k - 2.0 * out.k_crystal;

  const DbrCoefficients g = dbr_coefficients(cav.dbr, out.delta);
  const double phase = 2.0 * out.k_gap * cav.gap;
  const cplx round_trip = cplx(std::cos(phase), std::sin(phase));

  out.f = 1.0 - cav.mirror.rho * g.r * round_trip;
  if (std::abs(out.f) < 1e-150)
    throw NumericalError("cavity: round-trip denominator vanished");
  out.a2 = cav.mirror.tau / out.f;
  out.R = -cav.mirror.rho +
          round_trip * g.r * cav.mirror.tau * cav.mirror.tau / out.f;
  return out;
}

RightIncidenceResponse right_incidence_response(const CavityAssembly& cav,
                                                double omega) {
  const CavityResponse resp = cavity_response(cav, omega);
  const DbrCoefficients g = dbr_coefficients(cav.dbr, resp.delta);
  const double phase = 2.0 * resp.k_gap * cav.gap;
  const cplx round_trip = cplx(std::cos(phase), std::sin(phase));

  RightIncidenceResponse out;
  out.b0_per_bL = g.t / resp.f;
  out.Rprime = g.rprime + round_trip * cav.mirror.rho * g.t * g.t / resp.f;
  return out;
}

ModeEvaluator::ModeEvaluator(const CavityAssembly& cav, double omega,
                             ModeNormalization norm) {
  const CavityResponse resp = cavity_response(cav, omega);
  k_ = resp.k_crystal;
  delta_ = resp.delta;
  kappa_ = cav.dbr.kappa;
  length_ = cav.dbr.length;

  const cplx hL = 0.5 * std::sqrt(cplx(4.0 * kappa_ * kappa_ -
                                       delta_ * delta_, 0.0)) * length_;
  S_ = 2.0 * hL / length_;
  G_ = std::cosh(hL) + cplx(0.0, 0.5 * delta_ * length_) * sinch(hL);

  const double gap_phase = resp.k_gap * cav.gap;
  pre_ = normalization_constant(norm) * resp.a2 *
         cplx(std::cos(gap_phase), std::sin(gap_phase));
}

cplx ModeEvaluator::operator()(double x) const {
  const cplx u = 0.5 * S_ * (x - length_);
  const cplx sc = sinch(u);
  // Q and W share cosh/sinch of the same argument; carry their carrier
  // phases explicitly.
  const cplx q_env =
      (std::cosh(u) + cplx(0.0, -0.5 * delta_ * (x - length_)) * sc) / G_;
  const cplx w_env = ((x - length_) * sc) / G_;
  const double aq = 0.5 * delta_ * x + k_ * x;
  const double aw = -0.5 * delta_ * x - k_ * x;
  const cplx q_term = cplx(std::cos(aq), std::sin(aq)) * q_env;
  const cplx w_term =
      cplx(0.0, -kappa_) * cplx(std::cos(aw), std::sin(aw)) * w_env;
  return pre_ * (q_term + w_term);
}

cplx mode_function(const CavityAssembly& cav, double x, double omega,
                   ModeNormalization norm) {
  if (!(x >= 0.0 && x <= cav.dbr.length))
    throw std::domain_error("mode_function: x outside [0, L]");
  return ModeEvaluator(cav, omega, norm)(x);
}

std::vector<SpectrumPoint> reflectivity_spectrum(const CavityAssembly& cav,
                                                 const FrequencyGrid& grid) {
  grid.validate();
  std::vector<SpectrumPoint> rows;
  rows.reserve(grid.points);
  for (int i = 0; i < grid.points; ++i) {
    const double omega = grid.at(i);
    const CavityResponse resp = cavity_response(cav, omega);
    const DbrCoefficients g = dbr_coefficients(cav.dbr, resp.delta);
    SpectrumPoint pt;
    pt.omega = omega;
    pt.k = resp.k_crystal;
    pt.dbr_r2 = std::norm(g.r);
    pt.dbr_t2 = std::norm(g.t);
    pt.cavity_R2 = std::norm(resp.R);
    pt.intracavity_a2 = std::norm(resp.a2);
    rows.push_back(pt);
  }
  return rows;
}

} // namespace biphoton
