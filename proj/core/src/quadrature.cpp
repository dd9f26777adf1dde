#include "biphoton/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "biphoton/constants.hpp"

namespace biphoton {

GaussLegendreRule::GaussLegendreRule(int degree) {
  if (degree < 1)
    throw std::invalid_argument("quadrature: degree must be >= 1");
  nodes.resize(degree);
  weights.resize(degree);

  const int m = (degree + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev guess for the i-th root, then Newton on P_n.
    double x = std::cos(pi * (i + 0.75) / (degree + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= degree; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = degree * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[degree - 1 - i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[degree - 1 - i] = weights[i];
  }
}

} // namespace biphoton
