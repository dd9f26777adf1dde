#pragma once

#include <stdexcept>
#include <string>

namespace biphoton {

// Bad user input: malformed config file, unknown key, out-of-range value.
// The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Computation failed or did not converge (quadrature refinement check,
// SVD failure, vanishing denominators). The CLI maps this to exit code 3.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what)
      : std::runtime_error(what) {}
};

} // namespace biphoton
