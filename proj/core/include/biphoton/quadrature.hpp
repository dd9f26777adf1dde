#pragma once

#include <vector>

#include "biphoton/numeric.hpp"

namespace biphoton {

// Gauss-Legendre rule on [-1, 1]. Nodes found by Newton iteration on the
// Legendre polynomial from the Chebyshev initial guess.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendreRule(int degree);
};

// Composite integration of a complex-valued integrand over [a, b] with the
// given number of equal panels.
template <typename F>
cplx integrate_panels(const GaussLegendreRule& rule, double a, double b,
                      int panels, F&& f) {
  const double h = (b - a) / panels;
  cplx acc(0.0, 0.0);
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    cplx panel(0.0, 0.0);
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
      panel += rule.weights[j] * f(mid + 0.5 * h * rule.nodes[j]);
    acc += 0.5 * h * panel;
  }
  return acc;
}

} // namespace biphoton
