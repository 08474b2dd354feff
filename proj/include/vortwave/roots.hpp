#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/tools/toms748_solve.hpp>

#include "vortwave/errors.hpp"

namespace vortwave {

/// Refines a sign-changing bracket [lo, hi] (flo*fhi <= 0) to full double
/// precision and returns the endpoint with the smaller residual.
template <class F>
double refine_bracketed_root(F&& fn, double lo, double hi, double flo, double fhi, const char* component) {
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw NumericalError(component, "root not bracketed on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                        "], f = (" + std::to_string(flo) + ", " + std::to_string(fhi) + ")");
  }
  std::uintmax_t max_iter = 200;
  const auto tol = boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 1);
  const auto [a, b] = boost::math::tools::toms748_solve(fn, lo, hi, flo, fhi, tol, max_iter);
  return std::abs(fn(a)) <= std::abs(fn(b)) ? a : b;
}

/// Positive zeros of  phi(Y) = alpha*cosh(Y) - omega*Y - f, ascending.
///
/// phi is convex for alpha > 0 and concave for alpha < 0 with its single
/// extremum at Y = asinh(omega/alpha), so splitting there gives at most two
/// monotone pieces with at most one zero each. A double zero at the extremum
/// is reported through `tangent`.
struct IsoclineRoots {
  std::vector<double> Y;
  bool tangent = false;
};

inline IsoclineRoots phi_roots(double alpha, double omega, double f, double Y_limit = 700.0) {
  IsoclineRoots out;
  auto phi = [&](double Y) { return alpha * std::cosh(Y) - omega * Y - f; };

  if (alpha == 0.0) {
    if (omega != 0.0) {
      const double Y = -f / omega;
      if (Y > 0.0 && Y <= Y_limit) out.Y.push_back(Y);
    }
    return out;
  }

  // Root on a monotone piece starting at `from` whose value moves away from
  // phi(from) towards +inf (dir = +1) or -inf (dir = -1).
  auto unbounded_piece = [&](double from, double f_from, int dir) {
    if (f_from == 0.0 && from > 0.0) {
      out.Y.push_back(from);
      return;
    }
    if ((dir > 0 && f_from >= 0.0) || (dir < 0 && f_from <= 0.0)) return;
    double step = std::max(1.0, from);
    double lo = from;
    double flo = f_from;
    for (;;) {
      double hi = std::min(from + step, Y_limit);
      double fhi = phi(hi);
      if ((fhi > 0.0) != (flo > 0.0) || fhi == 0.0) {
        out.Y.push_back(refine_bracketed_root(phi, lo, hi, flo, fhi, "isocline"));
        return;
      }
      if (hi >= Y_limit) return;
      lo = hi;
      flo = fhi;
      step *= 2.0;
    }
  };

  const double ratio = omega / alpha;
  const double Ym = ratio > 0.0 ? std::asinh(ratio) : 0.0;
  const double f0 = phi(0.0);

  if (Ym <= 0.0) {
    // phi monotone on (0, inf): increasing for alpha > 0, decreasing otherwise.
    unbounded_piece(0.0, f0, alpha > 0.0 ? +1 : -1);
    return out;
  }

  const double fm = phi(Ym);
  const double scale = std::abs(f) + std::abs(alpha) * std::cosh(Ym) + std::abs(omega) * Ym;
  if (std::abs(fm) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
    if (Ym <= Y_limit) out.Y.push_back(Ym);
    out.tangent = true;
    return out;
  }
  const bool convex = alpha > 0.0;
  // The extremum must lie on the far side of zero from infinity for any root.
  if ((convex && fm > 0.0) || (!convex && fm < 0.0)) return out;
  if (Ym > Y_limit) return out;
  // Left piece [0, Ym].
  if ((f0 > 0.0) == convex && f0 != 0.0) {
    out.Y.push_back(refine_bracketed_root(phi, 0.0, Ym, f0, fm, "isocline"));
  }
  unbounded_piece(Ym, fm, convex ? +1 : -1);
  return out;
}

}  // namespace vortwave
