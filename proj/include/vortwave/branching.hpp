#pragma once

#include <cmath>

#include "vortwave/errors.hpp"

namespace vortwave {

/// Sign test for the split of the infinity-isocline under negative vorticity.
///
/// For the concave profile  phi(Y) = -alpha*cosh(Y) - omega*Y - f  (alpha > 0,
/// omega < 0) the returned value equals max_Y phi(Y) / alpha. A positive value
/// means phi has two zeros, i.e. two isocline branches; zero is a tangency;
/// negative means none.
inline double branching_discriminant(double alpha, double omega, double f) {
  if (!(alpha > 0.0)) {
    throw DomainError("branching_discriminant: alpha must be positive");
  }
  const double r = omega / alpha;
  return r * std::asinh(r) - std::sqrt(1.0 + r * r) - f / alpha;
}

}  // namespace vortwave
