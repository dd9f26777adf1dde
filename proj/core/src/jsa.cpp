#include "biphoton/jsa.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "biphoton/constants.hpp"
#include "biphoton/errors.hpp"
#include "biphoton/expsum.hpp"
#include "biphoton/quadrature.hpp"

namespace biphoton {

void PumpSpectrum::validate() const {
  if (!(sigma > 0.0))
    throw std::invalid_argument("pump: sigma must be positive");
  if (!(center > 0.0))
    throw std::invalid_argument("pump: center must be positive");
}

double PumpSpectrum::operator()(double omega_sum) const {
  const double s = (omega_sum - center) / sigma;
  return amplitude * std::exp(-s * s);
}

namespace {

void check_shared_geometry(const CavityAssembly& sig,
                           const CavityAssembly& idl) {
  if (sig.dbr.length != idl.dbr.length || sig.gap != idl.gap)
    throw std::invalid_argument(
        "jsa: signal and idler assemblies must share L and d");
  const DispersionBranch& a = sig.dispersion.pump;
  const DispersionBranch& b = idl.dispersion.pump;
  if (a.n0 != b.n0 || a.kprime != b.kprime ||
      sig.dispersion.omega0 != idl.dispersion.omega0)
    throw std::invalid_argument(
        "jsa: signal and idler assemblies must share the pump dispersion");
}

// Bound on the fastest rate in the product integrand: carriers, half
// detunings, and the evanescent decay both arms can contribute.
double fastest_rate(const CavityAssembly& sig, const CavityAssembly& idl,
                    double omega_s, double omega_i, double kp) {
  const double ks = sig.dispersion.wavenumber(sig.pol, omega_s);
  const double ki = idl.dispersion.wavenumber(idl.pol, omega_i);
  const double ds = std::abs(sig.dbr.grating_k - 2.0 * ks);
  const double di = std::abs(idl.dbr.grating_k - 2.0 * ki);
  return kp + ks + ki + 0.5 * ds + 0.5 * di +
         2.0 * (sig.dbr.kappa + idl.dbr.kappa);
}

// Integrates the pump-weighted product of the conjugate mode profiles over
// the grating; when asked, repeats at doubled node density and insists the
// two values agree.
cplx overlap_with_check(const ModeEvaluator& us, const ModeEvaluator& ui,
                        double kp, double rate, double length,
                        const QuadratureSettings& q,
                        const GaussLegendreRule& rule, double omega_s,
                        double omega_i) {
  auto integrand = [&](double x) {
    const cplx pump_wave(std::cos(kp * x), std::sin(kp * x));
    return pump_wave * std::conj(us(x)) * std::conj(ui(x));
  };
  const cplx value = integrate_panels(rule, 0.0, length,
                                      panel_count(q, rate, length), integrand);
  if (!q.check_convergence) return value;

  QuadratureSettings dense = q;
  dense.points_per_period *= 2.0;
  const cplx refined = integrate_panels(
      rule, 0.0, length, panel_count(dense, rate, length), integrand);
  const double scale = std::max(std::abs(value), std::abs(refined));
  if (scale > 0.0 && std::abs(value - refined) > q.convergence_tol * scale) {
    std::ostringstream msg;
    msg << "quadrature did not converge at (omega_s=" << omega_s
        << ", omega_i=" << omega_i << "): |I1 - I2| = "
        << std::abs(value - refined) << ", scale = " << scale;
    throw NumericalError(msg.str());
  }
  return value;
}

cplx quadrature_overlap(const CavityAssembly& sig, const CavityAssembly& idl,
                        double omega_s, double omega_i,
                        const QuadratureSettings& q, ModeNormalization norm,
                        const GaussLegendreRule& rule) {
  const double kp =
      sig.dispersion.wavenumber(Polarization::pump, omega_s + omega_i);
  const ModeEvaluator us(sig, omega_s, norm);
  const ModeEvaluator ui(idl, omega_i, norm);
  const double rate = fastest_rate(sig, idl, omega_s, omega_i, kp);
  return overlap_with_check(us, ui, kp, rate, sig.dbr.length, q, rule,
                            omega_s, omega_i);
}

// Splits [0, rows) across workers; rethrows the first worker exception.
void run_rows(int workers, int rows,
              const std::function<void(int, int)>& fill) {
  if (workers <= 1) {
    fill(0, rows);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  pool.reserve(workers);
  const int chunk = (rows + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int b = w * chunk;
    const int e = std::min(rows, b + chunk);
    if (b < e)
      pool.emplace_back([&fill, &errors, w, b, e] {
        try {
          fill(b, e);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& err : errors)
    if (err) std::rethrow_exception(err);
}

} // namespace

int panel_count(const QuadratureSettings& settings, double rate,
                double length) {
  if (settings.panel_degree < 1)
    throw std::invalid_argument("quadrature: panel_degree must be >= 1");
  if (settings.min_panels < 1)
    throw std::invalid_argument("quadrature: min_panels must be >= 1");
  const double periods = std::abs(rate) * length / (2.0 * pi);
  const double nodes = settings.points_per_period * periods;
  int panels = static_cast<int>(std::ceil(nodes / settings.panel_degree));
  if (panels < settings.min_panels) panels = settings.min_panels;
  return panels;
}

cplx phase_matching_integral(const CavityAssembly& signal_cav,
                             const CavityAssembly& idler_cav, double omega_s,
                             double omega_i, const QuadratureSettings& settings,
                             ModeNormalization norm) {
  check_shared_geometry(signal_cav, idler_cav);
  const GaussLegendreRule rule(settings.panel_degree);
  return quadrature_overlap(signal_cav, idler_cav, omega_s, omega_i, settings,
                            norm, rule);
}

cplx phase_matching_integral_analytic(const CavityAssembly& signal_cav,
                                      const CavityAssembly& idler_cav,
                                      double omega_s, double omega_i,
                                      ModeNormalization norm) {
  check_shared_geometry(signal_cav, idler_cav);
  const double kp =
      signal_cav.dispersion.wavenumber(Polarization::pump, omega_s + omega_i);
  ExpSum product = cavity_mode_exponentials(signal_cav, omega_s, norm).conjugated() *
                   cavity_mode_exponentials(idler_cav, omega_i, norm).conjugated();
  product.shift(cplx(0.0, kp));
  return product.integrate(signal_cav.dbr.length);
}

JsaMatrix build_jsa(const CavityAssembly& signal_cav,
                    const CavityAssembly& idler_cav, const PumpSpectrum& pump,
                    const FrequencyGrid& grid_signal,
                    const FrequencyGrid& grid_idler,
                    const JsaBuildOptions& options) {
  check_shared_geometry(signal_cav, idler_cav);
  grid_signal.validate();
  grid_idler.validate();
  pump.validate();
  if (options.workers < 1)
    throw std::invalid_argument("jsa: workers must be >= 1");

  const int rows = grid_signal.points;
  const int cols = grid_idler.points;
  JsaMatrix out;
  out.grid_signal = grid_signal;
  out.grid_idler = grid_idler;
  out.values.resize(rows, cols);

  const double L = signal_cav.dbr.length;

  if (options.integrator == IntegratorKind::analytic) {
    // Per-axis mode decompositions are reused across the other axis; only
    // the pump rate couples the two frequencies.
    std::vector<ExpSum> sig_terms(rows), idl_terms(cols);
    for (int m = 0; m < rows; ++m)
      sig_terms[m] =
          cavity_mode_exponentials(signal_cav, grid_signal.at(m),
                                   options.normalization).conjugated();
    for (int n = 0; n < cols; ++n)
      idl_terms[n] =
          cavity_mode_exponentials(idler_cav, grid_idler.at(n),
                                   options.normalization).conjugated();

    auto fill_rows = [&](int m_begin, int m_end) {
      for (int m = m_begin; m < m_end; ++m) {
        const double ws = grid_signal.at(m);
        for (int n = 0; n < cols; ++n) {
          const double wi = grid_idler.at(n);
          const double kp = signal_cav.dispersion.wavenumber(
              Polarization::pump, ws + wi);
          cplx overlap(0.0, 0.0);
          for (const ExpTerm& a : sig_terms[m].terms)
            for (const ExpTerm& b : idl_terms[n].terms) {
              const cplx rate = a.rate + b.rate + cplx(0.0, kp);
              overlap += a.coeff * b.coeff * L * expm1_over(rate * L);
            }
          out.values(m, n) =
              std::sqrt(wi / ws) / ws * pump(ws + wi) * overlap;
        }
      }
    };

    run_rows(std::min(options.workers, rows), rows, fill_rows);
    return out;
  }

  // Quadrature route: only sensible for small grids; evaluator setup is
  // cached per axis, the x sweep dominates.
  const GaussLegendreRule rule(options.quadrature.panel_degree);
  std::vector<ModeEvaluator> us, ui;
  us.reserve(rows);
  ui.reserve(cols);
  for (int m = 0; m < rows; ++m)
    us.emplace_back(signal_cav, grid_signal.at(m), options.normalization);
  for (int n = 0; n < cols; ++n)
    ui.emplace_back(idler_cav, grid_idler.at(n), options.normalization);

  auto fill_rows_quad = [&](int m_begin, int m_end) {
    for (int m = m_begin; m < m_end; ++m) {
      const double ws = grid_signal.at(m);
      for (int n = 0; n < cols; ++n) {
        const double wi = grid_idler.at(n);
        const double kp =
            signal_cav.dispersion.wavenumber(Polarization::pump, ws + wi);
        const double rate = fastest_rate(signal_cav, idler_cav, ws, wi, kp);
        const cplx overlap = overlap_with_check(
            us[m], ui[n], kp, rate, L, options.quadrature, rule, ws, wi);
        out.values(m, n) = std::sqrt(wi / ws) / ws * pump(ws + wi) * overlap;
      }
    }
  };

  run_rows(std::min(options.workers, rows), rows, fill_rows_quad);
  return out;
}

} // namespace biphoton
