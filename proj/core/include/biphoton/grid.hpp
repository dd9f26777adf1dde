#pragma once

#include <stdexcept>
#include <vector>

namespace biphoton {

// Uniform angular-frequency grid, endpoints included.
struct FrequencyGrid {
  double omega_min = 0.0;
  double omega_max = 0.0;
  int points = 0;

  void validate() const {
    if (points < 2)
      throw std::invalid_argument("grid: need at least 2 points");
    if (!(omega_min > 0.0) || !(omega_max > omega_min))
      throw std::invalid_argument("grid: need 0 < omega_min < omega_max");
  }
  double spacing() const { return (omega_max - omega_min) / (points - 1); }
  double at(int i) const { return omega_min + spacing() * i; }
  std::vector<double> values() const {
    std::vector<double> v(points);
    for (int i = 0; i < points; ++i) v[i] = at(i);
    return v;
  }
  // Index of the grid point closest to omega.
  int nearest(double omega) const {
    const double s = (omega - omega_min) / spacing();
    int i = static_cast<int>(s + 0.5);
    if (i < 0) i = 0;
    if (i >= points) i = points - 1;
    return i;
  }
};

} // namespace biphoton
