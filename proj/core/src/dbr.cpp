#include "biphoton/dbr.hpp"

#include <cmath>
#include <stdexcept>

#include "biphoton/errors.hpp"

namespace biphoton {

void DbrParams::validate() const {
  if (!(kappa >= 0.0))
    throw std::invalid_argument("dbr: kappa must be non-negative");
  if (!(length > 0.0))
    throw std::invalid_argument("dbr: length must be positive");
  if (!(grating_k > 0.0))
    throw std::invalid_argument("dbr: grating_k must be positive");
}

namespace {

// Shared core of the closed form. Everything is expressed through cosh and
// sinch of half arguments,
//   Q(x) = e^{+i d x/2} [cosh(u) - i d (x-L)/2 sinch(u)] / G,  u = S(x-L)/2
//   P(x) = e^{+i d (x-L)/2} x sinch(S x/2) / G
//   V(x) = e^{-i d (x-L)/2} [cosh(S x/2) + i d x/2 sinch(S x/2)] / G
//   W(x) = e^{-i d x/2} (x-L) sinch(u) / G
// with G = cosh(S L/2) + i d (L/2) sinch(S L/2). cosh and sinch are even,
// so the choice of square root branch for S drops out identically, and the
// band edge S -> 0 needs no special casing.
struct ClosedForm {
  cplx S, G;
  double delta, length;

  ClosedForm(const DbrParams& p, double delta_, RootBranch branch)
      : delta(delta_), length(p.length) {
    const double s2 = 4.0 * p.kappa * p.kappa - delta_ * delta_;
    S = std::sqrt(cplx(s2, 0.0));
    if (branch == RootBranch::negated) S = -S;
    const cplx hL = 0.5 * S * length;
    G = std::cosh(hL) + cplx(0.0, 0.5 * delta_ * length) * sinch(hL);
    if (std::abs(G) < 1e-150)
      throw NumericalError("dbr: closed-form denominator vanished");
  }

  cplx q(double x) const {
    const cplx u = 0.5 * S * (x - length);
    const cplx ph(std::cos(0.5 * delta * x), std::sin(0.5 * delta * x));
    return ph * (std::cosh(u) + cplx(0.0, -0.5 * delta * (x - length)) * sinch(u)) / G;
  }
  cplx p(double x) const {
    const cplx u = 0.5 * S * x;
    const double a = 0.5 * delta * (x - length);
    return cplx(std::cos(a), std::sin(a)) * (x * sinch(u)) / G;
  }
  cplx v(double x) const {
    const cplx u = 0.5 * S * x;
    const double a = -0.5 * delta * (x - length);
    return cplx(std::cos(a), std::sin(a)) *
           (std::cosh(u) + cplx(0.0, 0.5 * delta * x) * sinch(u)) / G;
  }
  cplx w(double x) const {
    const cplx u = 0.5 * S * (x - length);
    const double a = -0.5 * delta * x;
    return cplx(std::cos(a), std::sin(a)) * ((x - length) * sinch(u)) / G;
  }
};

} // namespace

CoupledModeFields coupled_mode_fields(const DbrParams& p, double delta,
                                      double x, RootBranch branch) {
  p.validate();
  if (!(x >= 0.0 && x <= p.length))
    throw std::domain_error("coupled_mode_fields: x outside [0, L]");

  const ClosedForm cf(p, delta, branch);
  CoupledModeFields out;
  out.S = cf.S;
  out.D = 2.0 * std::exp(0.5 * cf.S * p.length) * cf.S * cf.G;
  out.Q = cf.q(x);
  out.P = cf.p(x);
  out.V = cf.v(x);
  out.W = cf.w(x);
  return out;
}

DbrCoefficients dbr_coefficients(const DbrParams& p, double delta) {
  p.validate();
  const ClosedForm cf(p, delta, RootBranch::principal);
  DbrCoefficients out;
  // t = Q(L), r = -i kappa W(0), r' = r e^{i delta L}, t' = t.
  out.t = cf.q(p.length);
  out.r = cplx(0.0, -p.kappa) * cf.w(0.0);
  out.tprime = out.t;
  const double a = delta * p.length;
  out.rprime = out.r * cplx(std::cos(a), std::sin(a));
  return out;
}

double energy_defect(const DbrParams& p, double delta) {
  const CoupledModeFields at_L = coupled_mode_fields(p, delta, p.length);
  const CoupledModeFields at_0 = coupled_mode_fields(p, delta, 0.0);
  return std::norm(p.kappa * at_L.P) + std::norm(at_0.V) - 1.0;
}

} // namespace biphoton
