#pragma once

namespace biphoton {

// Vacuum speed of light, m/s. Rounded value: the tabulated KTP dispersion
// data and the default frequency window are quoted against c = 3e8, and the
// window is pinned in absolute rad/s. All geometry-derived phases are
// expressed through wavelengths and are insensitive to the rounding.
inline constexpr double c0 = 3.0e8;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Degenerate carrier: vacuum wavelength 800 nm, the design point of the
// default device. omega0_default = 2*pi*c0 / 800 nm.
inline constexpr double lambda0_default = 800e-9;
inline constexpr double omega0_default = 2.0 * pi * c0 / lambda0_default;

} // namespace biphoton
