#include "biphoton/schmidt.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "biphoton/errors.hpp"

#define LAPACK_COMPLEX_CUSTOM
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace biphoton {

SchmidtSpectrum schmidt_decompose(const JsaMatrix& jsa, double truncation) {
  const int m = static_cast<int>(jsa.values.rows());
  const int n = static_cast<int>(jsa.values.cols());
  if (m < 1 || n < 1)
    throw std::invalid_argument("schmidt: empty matrix");
  if (!(truncation >= 0.0))
    throw std::invalid_argument("schmidt: truncation must be >= 0");

  const double dws = jsa.grid_signal.spacing();
  const double dwi = jsa.grid_idler.spacing();
  const int k = std::min(m, n);

  // zgesdd destroys its input; weight the copy by the quadrature measure.
  Eigen::MatrixXcd a = jsa.values * std::sqrt(dws * dwi);
  Eigen::MatrixXcd u(m, k), vt(k, n);
  std::vector<double> s(k);

  const lapack_int info = LAPACKE_zgesdd(
      LAPACK_COL_MAJOR, 'S', m, n, a.data(), m, s.data(), u.data(), m,
      vt.data(), k);
  if (info != 0)
    throw NumericalError("schmidt: zgesdd failed with info = " +
                         std::to_string(info));

  double total = 0.0;
  for (double sv : s) total += sv * sv;
  if (!(total > 0.0))
    throw NumericalError("schmidt: amplitude matrix is identically zero");

  SchmidtSpectrum out;
  out.grid_signal = jsa.grid_signal;
  out.grid_idler = jsa.grid_idler;
  out.weighted_norm = std::sqrt(total);
  out.lambdas.resize(k);
  for (int j = 0; j < k; ++j) out.lambdas[j] = s[j] * s[j] / total;

  int retained = 0;
  while (retained < k && out.lambdas[retained] >= truncation) ++retained;
  if (retained == 0) retained = 1;
  out.modes_retained = retained;

  out.psi.resize(m, retained);
  out.phi.resize(n, retained);
  const double inv_sqrt_dws = 1.0 / std::sqrt(dws);
  const double inv_sqrt_dwi = 1.0 / std::sqrt(dwi);
  for (int j = 0; j < retained; ++j) {
    // Phase convention: rotate so the largest |psi_j| sample is real
    // positive, compensating in phi_j to keep the product fixed.
    int arg_max = 0;
    double best = -1.0;
    for (int i = 0; i < m; ++i) {
      const double mag = std::norm(u(i, j));
      if (mag > best) {
        best = mag;
        arg_max = i;
      }
    }
    const cplx pivot = u(arg_max, j);
    const cplx rot =
        std::abs(pivot) > 0.0 ? std::conj(pivot) / std::abs(pivot) : cplx(1.0);
    for (int i = 0; i < m; ++i) out.psi(i, j) = u(i, j) * rot * inv_sqrt_dws;
    for (int i = 0; i < n; ++i)
      out.phi(i, j) = vt(j, i) * std::conj(rot) * inv_sqrt_dwi;
  }
  return out;
}

Eigen::MatrixXcd reduced_density(const JsaMatrix& jsa, Side side) {
  const double dws = jsa.grid_signal.spacing();
  const double dwi = jsa.grid_idler.spacing();
  if (side == Side::signal)
    return jsa.values * jsa.values.adjoint() * dwi;
  return jsa.values.transpose() * jsa.values.conjugate() * dws;
}

EntanglementMetrics metrics(const std::vector<double>& lambdas) {
  EntanglementMetrics out;
  for (double l : lambdas) {
    if (l > 0.0) out.entropy_bits -= l * std::log2(l);
    out.purity += l * l;
  }
  if (!(out.purity > 0.0))
    throw std::invalid_argument("metrics: spectrum is empty");
  out.cooperativity = 1.0 / out.purity;
  return out;
}

TimeGrid conjugate_time_grid(const FrequencyGrid& grid) {
  grid.validate();
  TimeGrid t;
  t.t_start = 0.0;
  t.dt = 2.0 * pi / (grid.points * grid.spacing());
  t.points = grid.points;
  return t;
}

std::vector<cplx> temporal_mode(const SchmidtSpectrum& spectrum,
                                int mode_index, const TimeGrid& grid) {
  if (mode_index < 0 || mode_index >= spectrum.modes_retained)
    throw std::invalid_argument("temporal_mode: mode index out of range");
  if (grid.points < 1 || !(grid.dt > 0.0))
    throw std::invalid_argument("temporal_mode: bad time grid");

  const int m = static_cast<int>(spectrum.psi.rows());
  const double dw = spectrum.grid_signal.spacing();
  const double w_min = spectrum.grid_signal.omega_min;
  const double scale = dw / std::sqrt(2.0 * pi);

  std::vector<cplx> v(grid.points);
  double energy = 0.0;
  for (int j = 0; j < grid.points; ++j) {
    const double t = grid.at(j);
    // Carrier factored out so the envelope sum only sees offsets m dw t.
    cplx env(0.0, 0.0);
    for (int i = 0; i < m; ++i) {
      const double arg = -(dw * i) * t;
      env += spectrum.psi(i, mode_index) * cplx(std::cos(arg), std::sin(arg));
    }
    const double carg = -w_min * t;
    v[j] = scale * cplx(std::cos(carg), std::sin(carg)) * env;
    energy += std::norm(v[j]);
  }
  energy *= grid.dt;
  if (!(energy > 0.0))
    throw NumericalError("temporal_mode: zero energy synthesis");
  const double inv = 1.0 / std::sqrt(energy);
  for (cplx& x : v) x *= inv;
  return v;
}

} // namespace biphoton
