#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "biphoton/cavity.hpp"
#include "biphoton/constants.hpp"

using namespace biphoton;

namespace {

// The 800 nm vacuum demo device: kappa = 1/mm, L = 4 mm, d = 0.1999 mm,
// mirror power reflectivity 0.99.
CavityAssembly vacuum_demo() {
  CavityAssembly cav;
  cav.dispersion = vacuum_dispersion();
  cav.dbr.kappa = 1000.0;
  cav.dbr.length = 4e-3;
  cav.dbr.grating_k = 2.0 * cav.dispersion.omega0 / c0;
  cav.mirror = MirrorParams::from_rho_squared(0.99);
  cav.gap = 0.1999e-3;
  cav.pol = Polarization::signal;
  return cav;
}

CavityAssembly ktp_signal_arm(double rho2 = 0.95) {
  CavityAssembly cav;
  cav.dispersion = ktp_dispersion();
  cav.dbr.kappa = 2000.0;
  cav.dbr.length = 4e-3;
  cav.dbr.grating_k =
      2.0 * cav.dispersion.wavenumber(Polarization::signal,
                                      cav.dispersion.omega0);
  cav.mirror = MirrorParams::from_rho_squared(rho2);
  cav.gap = 0.1999e-3;
  cav.pol = Polarization::signal;
  return cav;
}

} // namespace

TEST_SUITE("cavity") {

TEST_CASE("mirror factory enforces the lossless split") {
  const MirrorParams m = MirrorParams::from_rho_squared(0.95);
  CHECK(m.rho == doctest::Approx(std::sqrt(0.95)).epsilon(1e-15));
  CHECK(m.rho * m.rho + m.tau * m.tau == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(MirrorParams::from_rho_squared(1.0), std::invalid_argument);
  CHECK_THROWS_AS(MirrorParams::from_rho_squared(-0.1), std::invalid_argument);
}

TEST_CASE("no grating: the assembly reflects like the bare mirror") {
  CavityAssembly cav = vacuum_demo();
  cav.dbr.kappa = 0.0;
  const CavityResponse resp = cavity_response(cav, cav.dispersion.omega0);
  CHECK(std::abs(resp.f - 1.0) < 1e-14);
  CHECK(std::abs(resp.R + cav.mirror.rho) < 1e-14);
  CHECK(std::abs(resp.a2 - cav.mirror.tau) < 1e-14);
}

TEST_CASE("no mirror: the assembly reflects like the grating") {
  CavityAssembly cav = vacuum_demo();
  cav.mirror = MirrorParams{0.0, 1.0};
  const double w = cav.dispersion.omega0 * (1.0 + 2e-7);
  const CavityResponse resp = cavity_response(cav, w);
  const DbrCoefficients g = dbr_coefficients(cav.dbr, resp.delta);
  const double ph = 2.0 * resp.k_gap * cav.gap;
  CHECK(std::abs(resp.R - g.r * cplx(std::cos(ph), std::sin(ph))) < 1e-14);
  CHECK(std::abs(std::abs(resp.R) - std::abs(g.r)) < 1e-14);
}

TEST_CASE("assembly scattering is unitary and reciprocal") {
  for (CavityAssembly cav : {vacuum_demo(), ktp_signal_arm()}) {
    for (double rel : {-4.2e-4, -1e-5, 0.0, 3e-6, 5.5e-4}) {
      const double w = cav.dispersion.omega0 * (1.0 + rel);
      const CavityResponse resp = cavity_response(cav, w);
      const DbrCoefficients g = dbr_coefficients(cav.dbr, resp.delta);
      // Transmission through mirror, gap and grating in either direction.
      const double T2 = cav.mirror.tau * cav.mirror.tau * std::norm(g.t) /
                        std::norm(resp.f);
      CHECK(std::norm(resp.R) + T2 == doctest::Approx(1.0).epsilon(1e-12));
      const RightIncidenceResponse rr = right_incidence_response(cav, w);
      CHECK(std::norm(rr.Rprime) + T2 == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(rr.Rprime) ==
            doctest::Approx(std::abs(resp.R)).epsilon(1e-12));
      CHECK(std::abs(rr.b0_per_bL - g.t / resp.f) < 1e-15);
    }
  }
}

TEST_CASE("demo device resonates at the design wavelength") {
  const CavityAssembly cav = vacuum_demo();
  FrequencyGrid grid{2.3552e15, 2.3572e15, 2001};
  const auto rows = reflectivity_spectrum(cav, grid);

  int i_dip = 0, i_peak = 0, i_fmin = 0;
  double dip = 2.0, peak = -1.0, fmin = 1e300;
  for (int i = 0; i < grid.points; ++i) {
    if (rows[i].cavity_R2 < dip) { dip = rows[i].cavity_R2; i_dip = i; }
    if (rows[i].intracavity_a2 > peak) { peak = rows[i].intracavity_a2; i_peak = i; }
    const CavityResponse resp = cavity_response(cav, grid.at(i));
    if (std::abs(resp.f) < fmin) { fmin = std::abs(resp.f); i_fmin = i; }
  }
  const int i0 = grid.nearest(cav.dispersion.omega0);
  // Reflection dip, buildup peak and round-trip resonance coincide at the
  // carrier.
  CHECK(std::abs(i_dip - i0) <= 2);
  CHECK(std::abs(i_peak - i0) <= 2);
  CHECK(std::abs(i_fmin - i0) <= 2);
  CHECK(peak > 100.0);
  // Away from the stop band the mirror dominates.
  CHECK(rows[0].cavity_R2 == doctest::Approx(0.99).epsilon(2e-2));
  // Bare grating at stop-band center: tanh(4)^2.
  const DbrCoefficients g0 =
      dbr_coefficients(cav.dbr, 0.0);
  CHECK(std::norm(g0.r) == doctest::Approx(0.9986590493169741).epsilon(1e-12));
}

TEST_CASE("mode profile without grating or mirror is a plane wave") {
  CavityAssembly cav = vacuum_demo();
  cav.dbr.kappa = 0.0;
  cav.mirror = MirrorParams{0.0, 1.0};
  const double w = 2.356e15;
  const double k = w / c0;
  const double N = normalization_constant(ModeNormalization::free_field);
  for (double x : {0.0, 1.1e-3, 2.7e-3, 4e-3}) {
    const cplx u = mode_function(cav, x, w);
    const double phase = k * (x + cav.gap);
    const cplx expect = N * cplx(std::cos(phase), std::sin(phase));
    // k*(x+gap) is ~3e4 rad, so the two phase factorizations differ by a
    // few ulp of the argument (~1e-11 rad).
    CHECK(std::abs(u - expect) < 5e-11 * N);
  }
}

TEST_CASE("deep grating mode decays across the stack") {
  const CavityAssembly cav = ktp_signal_arm();
  const double w0 = cav.dispersion.omega0;
  const double head = std::abs(mode_function(cav, 0.0, w0));
  const double tail = std::abs(mode_function(cav, cav.dbr.length, w0));
  CHECK(tail / head < 1e-3);
  // On resonance the buildup makes the head exceed the bare input.
  CHECK(head > normalization_constant(ModeNormalization::free_field));
}

TEST_CASE("normalization switch rescales the mode uniformly") {
  const CavityAssembly cav = ktp_signal_arm();
  const double w = cav.dispersion.omega0 * (1.0 + 1e-5);
  const double expected = 1.0 / std::sqrt(2.0 * pi * c0);
  for (double x : {0.2e-3, 1.7e-3, 3.9e-3}) {
    const cplx a = mode_function(cav, x, w, ModeNormalization::free_field);
    const cplx b = mode_function(cav, x, w, ModeNormalization::unit);
    CHECK(std::abs(a / b - expected) < 1e-15);
  }
}

TEST_CASE("mode evaluator matches the one-shot entry point") {
  const CavityAssembly cav = ktp_signal_arm();
  const double w = cav.dispersion.omega0 * (1.0 - 3e-6);
  const ModeEvaluator ev(cav, w);
  for (int i = 0; i <= 16; ++i) {
    const double x = cav.dbr.length * i / 16.0;
    CHECK(std::abs(ev(x) - mode_function(cav, x, w)) <=
          1e-14 * std::abs(ev(x)) + 1e-300);
  }
}

TEST_CASE("argument validation") {
  const CavityAssembly cav = ktp_signal_arm();
  CHECK_THROWS_AS(mode_function(cav, -1e-9, cav.dispersion.omega0),
                  std::domain_error);
  CHECK_THROWS_AS(mode_function(cav, 5e-3, cav.dispersion.omega0),
                  std::domain_error);
  CavityAssembly bad = cav;
  bad.gap = -1e-6;
  CHECK_THROWS_AS(cavity_response(bad, cav.dispersion.omega0),
                  std::invalid_argument);
  FrequencyGrid g{2.3552e15, 2.3572e15, 1};
  CHECK_THROWS_AS(reflectivity_spectrum(cav, g), std::invalid_argument);
}

} // TEST_SUITE
