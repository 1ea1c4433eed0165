#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

/// Bad user input: invalid order, alpha out of range, malformed sizes.
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Numerical instability detected (filter paths diverging, overflow guards).
struct instability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An iterative scheme (series, quadrature, power iteration) failed to converge.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace riesz
