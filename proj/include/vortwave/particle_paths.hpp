#pragma once

// Particle trajectories, transit times, drift and closed physical orbits.
//
// Steady frame: X = kx - ft, Y = ky. A particle on a steady orbit that moves
// from X = pi to X = -pi in time tau has advanced (f*tau - 2*pi)/k in x; the
// sign of that number is the drift direction.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/trapezoidal.hpp>

#include "vortwave/errors.hpp"
#include "vortwave/field_eval.hpp"
#include "vortwave/integrate.hpp"
#include "vortwave/phase_portrait.hpp"
#include "vortwave/roots.hpp"
#include "vortwave/wave_core.hpp"

namespace vortwave {

enum class Layer { internal_wave, vortex, surface_wave, bed_adjacent, unbounded };

inline std::string_view to_string(Layer l) {
  switch (l) {
    case Layer::internal_wave: return "internal_wave";
    case Layer::vortex: return "vortex";
    case Layer::surface_wave: return "surface_wave";
    case Layer::bed_adjacent: return "bed_adjacent";
    case Layer::unbounded: return "unbounded";
  }
  return "?";
}

struct Trajectory {
  SteadyCoeffs coeffs;
  std::vector<double> times;
  std::vector<Vec2> steady;
  std::vector<Vec2> physical;
  std::vector<double> H;
  Layer layer = Layer::unbounded;
  bool truncated = false;

  /// max |H(t) - H(0)|
  double max_hamiltonian_drift() const {
    double m = 0.0;
    for (double v : H) m = std::max(m, std::abs(v - H.front()));
    return m;
  }
};

class IntegrationError : public NumericalError {
 public:
  IntegrationError(const std::string& what, Trajectory partial)
      : NumericalError("integrator", what), partial_(std::move(partial)) {}
  const Trajectory& partial() const noexcept { return partial_; }

 private:
  Trajectory partial_;
};

/// x = (X - phase_shift + f t)/k, y = Y/k
inline Vec2 steady_to_physical(double t, Vec2 s, const SteadyCoeffs& co) {
  return {(s.x - co.phase_shift + co.f * t) / co.k, s.y / co.k};
}

inline Vec2 physical_to_steady(double t, Vec2 x, const SteadyCoeffs& co) {
  return {co.k * x.x - co.f * t + co.phase_shift, co.k * x.y};
}

inline std::vector<Vec2> to_physical(const Trajectory& traj) {
  std::vector<Vec2> out;
  out.reserve(traj.steady.size());
  for (std::size_t i = 0; i < traj.steady.size(); ++i) {
    out.push_back(steady_to_physical(traj.times[i], traj.steady[i], traj.coeffs));
  }
  return out;
}

inline std::vector<Vec2> to_steady(const std::vector<double>& times, const std::vector<Vec2>& physical,
                                   const SteadyCoeffs& co) {
  if (times.size() != physical.size()) throw DomainError("to_steady: times and states differ in length");
  std::vector<Vec2> out;
  out.reserve(physical.size());
  for (std::size_t i = 0; i < physical.size(); ++i) out.push_back(physical_to_steady(times[i], physical[i], co));
  return out;
}

namespace detail {

inline Trajectory make_trajectory(const RawRun& run, const SteadyCoeffs& co) {
  Trajectory traj;
  traj.coeffs = co;
  traj.truncated = run.truncated;
  traj.times = run.t;
  traj.steady.reserve(run.y.size());
  traj.H.reserve(run.y.size());
  for (const auto& s : run.y) {
    traj.steady.push_back({s[0], s[1]});
    traj.H.push_back(hamiltonian(s[0], s[1], co));
  }
  traj.physical = to_physical(traj);
  return traj;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Layers

/// Layer of the orbit through (pi, Y) in the normalized portrait.
inline Layer classify_level(double Y, const SteadyCoeffs& co) {
  detail::require_normalized(co, "classify_level");
  if (!(Y >= 0.0)) throw DomainError("classify_level: Y must be >= 0");
  if (co.Ak == 0.0) return steady_rhs(kPi, Y, co).x < 0.0 ? Layer::bed_adjacent : Layer::unbounded;
  const auto crit = find_critical_points(co);
  const double H = hamiltonian(kPi, Y, co);
  const bool three = crit.size() == 3 && crit[1].kind == PointKind::center && crit[2].kind == PointKind::saddle;
  if (crit.empty()) return Layer::unbounded;
  const double H0 = crit[0].H_value;
  if (three) {
    if (Y < crit[1].Y) return H > H0 ? Layer::internal_wave : Layer::vortex;
    if (Y < crit[2].Y) return H < H0 ? Layer::vortex : Layer::surface_wave;
    return Layer::unbounded;
  }
  // Single saddle: the orbits below its lower separatrix run along the bed.
  if (steady_rhs(kPi, Y, co).x < 0.0 && H > H0) {
    const IsoclineRoots at_pi = phi_roots(-co.Ak, co.omega, co.f);
    if (at_pi.Y.empty() || Y < at_pi.Y.front()) return Layer::bed_adjacent;
  }
  return Layer::unbounded;
}

/// Heights on X = pi where the layer changes, ascending: separatrix crossings
/// and the critical points on that line. Empty for Ak = 0.
inline std::vector<double> layer_boundaries(const SteadyCoeffs& co) {
  detail::require_normalized(co, "layer_boundaries");
  std::vector<double> out;
  if (co.Ak == 0.0) return out;
  const auto crit = find_critical_points(co);
  if (crit.empty()) return out;
  const double H0 = crit[0].H_value;
  auto h = [&](double Y) { return hamiltonian(kPi, Y, co) - H0; };
  // Below the first X = pi root, H(pi, .) decreases from 0; the level H0 is crossed once.
  const IsoclineRoots at_pi = phi_roots(-co.Ak, co.omega, co.f);
  double top = at_pi.Y.empty() ? 1.0 : at_pi.Y.front();
  if (at_pi.Y.empty()) {
    while (h(top) > 0.0 && top < kHyperbolicLimit / 2) top *= 2.0;
  }
  if (h(0.0) > 0.0 && h(top) < 0.0) out.push_back(refine_bracketed_root(h, 0.0, top, h(0.0), h(top), "layers"));
  const bool three = crit.size() == 3 && crit[1].kind == PointKind::center && crit[2].kind == PointKind::saddle;
  if (three) {
    out.push_back(crit[1].Y);
    const double a = crit[1].Y, b = crit[2].Y;
    if (h(a) < 0.0 && h(b) > 0.0) out.push_back(refine_bracketed_root(h, a, b, h(a), h(b), "layers"));
    out.push_back(crit[2].Y);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Trajectories

/// Integrates the steady system from (X0, Y0) for |t| <= t_end (backward when
/// backward = true) and tags the orbit with its layer.
inline Trajectory integrate_steady(double X0, double Y0, const SteadyCoeffs& co, double t_end,
                                   const IntegrateOptions& opt = {}, bool backward = false);

namespace detail {

/// First time the orbit from (X0, Y0) meets a line X = pi + 2 pi m, in the
/// given direction; returns the crossing height, or nothing.
inline std::optional<double> height_at_pi(double X0, double Y0, const SteadyCoeffs& co, double sign,
                                          const IntegrateOptions& opt, double t_max) {
  const double two_pi = 2.0 * kPi;
  auto wrap = [&](double X) { return std::remainder(X - kPi, two_pi); };  // distance to nearest pi-line
  if (std::abs(wrap(X0)) < 1e-14) return Y0;
  std::optional<double> hit;
  StepObserver obs = [&](double t0, const State2& y0, double t1, const State2& y1,
                         const std::function<State2(double)>& interp) {
    const double n0 = std::floor((y0[0] - kPi) / two_pi);
    const double n1 = std::floor((y1[0] - kPi) / two_pi);
    if (n0 == n1) return true;
    const double line = kPi + two_pi * std::max(n0, n1);
    const double tc = locate_crossing(interp, t0, t1, 0, line, y0[0], y1[0]);
    hit = interp(tc)[1];
    return false;
  };
  integrate_raw(X0, Y0, co, t_max, sign, opt, obs);
  return hit;
}

}  // namespace detail

/// Layer of the orbit through an arbitrary point: follow it (forward, then
/// backward) to a line X = pi mod 2 pi and classify there.
inline Layer classify_layer(double X0, double Y0, const SteadyCoeffs& co, const IntegrateOptions& opt = {}) {
  const SteadyCoeffs n = co.normalized();
  const double X = X0 + (n.phase_shift - co.phase_shift);
  if (n.Ak == 0.0) return classify_level(Y0, n);
  const double t_max = 1e4 * detail::wave_period(n);
  for (double sign : {1.0, -1.0}) {
    const auto Y = detail::height_at_pi(X, Y0, n, sign, opt, t_max);
    if (Y) return classify_level(*Y, n);
  }
  return Layer::unbounded;
}

inline Trajectory integrate_steady(double X0, double Y0, const SteadyCoeffs& co, double t_end,
                                   const IntegrateOptions& opt, bool backward) {
  RawRun run;
  try {
    run = integrate_raw(X0, Y0, co, t_end, backward ? -1.0 : 1.0, opt);
  } catch (const RawIntegrationError& e) {
    throw IntegrationError(e.message(), detail::make_trajectory(e.partial(), co));
  }
  Trajectory traj = detail::make_trajectory(run, co);
  try {
    traj.layer = classify_layer(X0, Y0, co, opt);
  } catch (const NumericalError&) {
    traj.layer = Layer::unbounded;
  }
  return traj;
}

// ---------------------------------------------------------------------------
// Transit time

enum class TransitStatus { transits, not_applicable };

inline std::string_view to_string(TransitStatus s) {
  return s == TransitStatus::transits ? "transits" : "not_applicable";
}

struct TransitResult {
  TransitStatus status = TransitStatus::not_applicable;
  double tau_quadrature = std::numeric_limits<double>::quiet_NaN();
  double tau_event = std::numeric_limits<double>::quiet_NaN();

  /// The preferred value (quadrature).
  double tau() const { return tau_quadrature; }
};

struct TransitOptions {
  bool with_event = true;
  IntegrateOptions integrate{1e-13, 1e-15};
  double quad_tol = 1e-14;
};

namespace detail {

/// Height of the leftward orbit H = Hs above X, i.e. the root of H(X, .) = Hs
/// on the stretch [0, Y_top(X)] where dH/dY = X' < 0.
inline std::optional<double> orbit_height(double X, double Hs, const SteadyCoeffs& co) {
  if (Hs == 0.0) return 0.0;
  if (Hs > 0.0) return std::nullopt;  // H(X, 0) = 0 is the maximum on the stretch
  double top;
  const IsoclineRoots iso = phi_roots(co.Ak * std::cos(X), co.omega, co.f);
  auto h = [&](double Y) { return hamiltonian(X, Y, co) - Hs; };
  if (!iso.Y.empty()) {
    top = iso.Y.front();
  } else {
    top = 1.0;
    while (h(top) > 0.0) {
      top *= 2.0;
      if (top > kHyperbolicLimit - 1.0) return std::nullopt;
    }
  }
  const double ht = h(top);
  if (ht > 0.0) return std::nullopt;
  return refine_bracketed_root(h, 0.0, top, -Hs, ht, "transit");
}

}  // namespace detail

/// Time for the orbit through (pi, Y) to reach X = -pi. Computed by
/// quadrature of dt = dX / (-X') along the orbit and, optionally, by event
/// detection on an integrated trajectory.
inline TransitResult transit_time(double Y, const SteadyCoeffs& co, const TransitOptions& opt = {}) {
  detail::require_normalized(co, "transit_time");
  if (!(Y >= 0.0)) throw DomainError("transit_time: Y must be >= 0");
  TransitResult out;
  if (!(steady_rhs(kPi, Y, co).x < 0.0)) return out;
  if (co.Ak != 0.0) {
    const IsoclineRoots at_pi = phi_roots(-co.Ak, co.omega, co.f);
    if (!at_pi.Y.empty() && Y >= at_pi.Y.front()) return out;
  }
  const double Hs = hamiltonian(kPi, Y, co);

  // Applicability on a coarse node set before the real quadrature.
  for (int i = 0; i <= 64; ++i) {
    const double X = -kPi + 2.0 * kPi * i / 64.0;
    if (!detail::orbit_height(X, Hs, co)) return out;
  }

  bool ok = true;
  auto integrand = [&](double X) {
    const auto Yx = detail::orbit_height(X, Hs, co);
    if (!Yx) {
      ok = false;
      return 0.0;
    }
    const double xdot = steady_rhs(X, *Yx, co).x;
    if (!(xdot < 0.0)) {
      ok = false;
      return 0.0;
    }
    return -1.0 / xdot;
  };
  // Integrand is smooth and 2 pi periodic: the trapezoid rule converges
  // geometrically. Symmetric in X, so integrate over [0, pi] and double.
  double err = 0.0;
  double tau = 2.0 * boost::math::quadrature::trapezoidal(integrand, 0.0, kPi, opt.quad_tol, 20, &err);
  if (!ok) return out;
  if (!(err <= 1e-11 * std::abs(tau))) {
    tau = 2.0 * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, kPi, 15, opt.quad_tol);
    if (!ok) return out;
  }
  out.status = TransitStatus::transits;
  out.tau_quadrature = tau;

  if (opt.with_event) {
    double hit = std::numeric_limits<double>::quiet_NaN();
    StepObserver obs = [&](double t0, const State2& y0, double t1, const State2& y1,
                           const std::function<State2(double)>& interp) {
      if (y1[0] > -kPi) return true;
      hit = locate_crossing(interp, t0, t1, 0, -kPi, y0[0], y1[0]);
      return false;
    };
    const double t_max = 4.0 * tau + 10.0 * detail::wave_period(co);
    integrate_raw(kPi, Y, co, t_max, 1.0, opt.integrate, obs);
    out.tau_event = hit;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Drift

enum class DriftDirection { forward, backward, closed, always_forward };

inline std::string_view to_string(DriftDirection d) {
  switch (d) {
    case DriftDirection::forward: return "forward";
    case DriftDirection::backward: return "backward";
    case DriftDirection::closed: return "closed";
    case DriftDirection::always_forward: return "always_forward";
  }
  return "?";
}

struct DriftReport {
  double Y0 = 0.0;
  double tau = std::numeric_limits<double>::quiet_NaN();
  double drift = std::numeric_limits<double>::quiet_NaN();  // metres per transit
  DriftDirection direction = DriftDirection::closed;
  Layer layer = Layer::unbounded;
  double mean_speed = std::numeric_limits<double>::quiet_NaN();  // m/s where known
};

/// forward / backward / closed from the sign of tau - 2 pi / f.
inline DriftDirection classify_transit(double tau, double f) {
  const double T = 2.0 * kPi / f;
  const double tol = 1e-12 * T;
  if (tau > T + tol) return DriftDirection::forward;
  if (tau < T - tol) return DriftDirection::backward;
  return DriftDirection::closed;
}

namespace detail {

/// Time for the orbit from (pi, Y) to advance to X = 3 pi (rightward transit).
inline double rightward_transit(double Y, const SteadyCoeffs& co, const IntegrateOptions& opt, double t_max) {
  double hit = std::numeric_limits<double>::quiet_NaN();
  StepObserver obs = [&](double t0, const State2& y0, double t1, const State2& y1,
                         const std::function<State2(double)>& interp) {
    if (y1[0] < 3.0 * kPi) return true;
    hit = locate_crossing(interp, t0, t1, 0, 3.0 * kPi, y0[0], y1[0]);
    return false;
  };
  integrate_raw(kPi, Y, co, t_max, 1.0, opt, obs);
  return hit;
}

/// Other intersection of a vortex orbit with X = pi, across the center.
inline double vortex_partner(double Y, const SteadyCoeffs& co, const CriticalPoint& center,
                             const CriticalPoint& upper) {
  const double Hs = hamiltonian(kPi, Y, co);
  auto h = [&](double y) { return hamiltonian(kPi, y, co) - Hs; };
  if (Y < center.Y) return refine_bracketed_root(h, center.Y, upper.Y, h(center.Y), h(upper.Y), "vortex");
  return refine_bracketed_root(h, 0.0, center.Y, h(0.0), h(center.Y), "vortex");
}

}  // namespace detail

struct DriftOptions {
  TransitOptions transit{false, {1e-12, 1e-14}, 1e-14};
  IntegrateOptions integrate{1e-11, 1e-13};
  double t_max_periods = 1e4;
};

/// Drift of the particle whose steady orbit passes through (pi, Y).
inline DriftReport drift_per_period(double Y, const SteadyCoeffs& co, const DriftOptions& opt = {}) {
  detail::require_normalized(co, "drift_per_period");
  DriftReport r;
  r.Y0 = Y;
  r.layer = classify_level(Y, co);
  const double k = co.k;

  if (co.Ak == 0.0) {
    // Horizontal streamlines: X' = -omega Y - f.
    const double xdot = -co.omega * Y - co.f;
    r.mean_speed = (xdot + co.f) / k;
    if (xdot < 0.0) {
      r.tau = 2.0 * kPi / -xdot;
      r.drift = (co.f * r.tau - 2.0 * kPi) / k;
      r.direction = classify_transit(r.tau, co.f);
    } else {
      r.direction = DriftDirection::always_forward;
    }
    return r;
  }

  switch (r.layer) {
    case Layer::internal_wave:
    case Layer::bed_adjacent: {
      const TransitResult t = transit_time(Y, co, opt.transit);
      if (t.status != TransitStatus::transits) {
        throw NumericalError("drift", "transit quadrature failed for a transiting layer at Y = " + std::to_string(Y));
      }
      r.tau = t.tau();
      r.drift = (co.f * r.tau - 2.0 * kPi) / k;
      r.direction = classify_transit(r.tau, co.f);
      r.mean_speed = r.drift / r.tau;
      return r;
    }
    case Layer::vortex: {
      // The steady orbit is closed, so x advances at f/k on average. The
      // particle never moves backward if X' + f > 0 on the orbit; between
      // its extreme heights X' + f >= -Ak cosh Y - omega Y.
      const auto crit = find_critical_points(co);
      const double partner = std::abs(Y - crit[1].Y) < 1e-14 ? Y : detail::vortex_partner(Y, co, crit[1], crit[2]);
      const double lo = std::min(Y, partner);
      const double hi = std::max(Y, partner);
      // The bound is concave in y, so its minimum sits at an end point.
      auto bound = [&](double y) { return -co.Ak * std::cosh(y) - co.omega * y; };
      const double m = std::min(bound(lo), bound(hi));
      r.mean_speed = co.f / k;
      r.direction = m > 0.0 ? DriftDirection::always_forward : DriftDirection::forward;
      return r;
    }
    case Layer::surface_wave: {
      // X' > 0 along the whole orbit, hence x' = (X' + f)/k > f/k.
      r.direction = DriftDirection::always_forward;
      const double t_max = opt.t_max_periods * detail::wave_period(co);
      const double tau_r = detail::rightward_transit(Y, co, opt.integrate, t_max);
      if (std::isfinite(tau_r)) {
        r.tau = tau_r;
        r.drift = (co.f * tau_r + 2.0 * kPi) / k;
        r.mean_speed = r.drift / tau_r;
      }
      return r;
    }
    case Layer::unbounded: {
      const double xdot = steady_rhs(kPi, Y, co).x + co.f;
      r.direction = xdot > 0.0 ? DriftDirection::forward : DriftDirection::backward;
      r.mean_speed = xdot / k;
      return r;
    }
  }
  return r;
}

/// Drift reports for a list of physical heights y (metres) at X = pi.
inline std::vector<DriftReport> drift_profile(const WaveParams& p, const std::vector<double>& y_samples,
                                              const DriftOptions& opt = {}) {
  if (!(p.c() > 0.0)) throw UnsupportedConfiguration("drift_profile: needs a right-going wave (c > 0)");
  const SteadyCoeffs co = SteadyCoeffs::from(p).normalized();
  std::vector<DriftReport> out;
  out.reserve(y_samples.size());
  for (double y : y_samples) out.push_back(drift_per_period(p.k() * y, co, opt));
  return out;
}

// ---------------------------------------------------------------------------
// Closed orbits

struct ClosedOrbit {
  bool found = false;
  double Y = std::numeric_limits<double>::quiet_NaN();
  double tau = std::numeric_limits<double>::quiet_NaN();
  double dx = std::numeric_limits<double>::quiet_NaN();  // x(T) - x(0), metres
  double dy = std::numeric_limits<double>::quiet_NaN();  // y(T) - y(0), metres
  double H_drift = std::numeric_limits<double>::quiet_NaN();
  int iterations = 0;
  std::string note;
};

struct ClosedOrbitOptions {
  TransitOptions transit{false, {1e-13, 1e-15}, 1e-15};
  IntegrateOptions verify{1e-13, 1e-17};
  double tol_lambda = 1e-10;  // |dx| target as a fraction of the wavelength
  int max_iterations = 200;
};

/// Bisection on f tau(Y) - 2 pi over [Y_lo, Y_hi] (steady heights at X = pi),
/// followed by a one-period verification run.
inline ClosedOrbit find_closed_orbit(const SteadyCoeffs& co, double Y_lo, double Y_hi,
                                     const ClosedOrbitOptions& opt = {}) {
  detail::require_normalized(co, "find_closed_orbit");
  if (!(Y_lo >= 0.0) || !(Y_hi > Y_lo)) throw DomainError("find_closed_orbit: need 0 <= Y_lo < Y_hi");
  ClosedOrbit out;
  auto defect = [&](double Y) -> std::optional<double> {
    const TransitResult t = transit_time(Y, co, opt.transit);
    if (t.status != TransitStatus::transits) return std::nullopt;
    return co.f * t.tau() - 2.0 * kPi;
  };
  auto d_lo = defect(Y_lo);
  auto d_hi = defect(Y_hi);
  if (!d_lo || !d_hi) {
    out.note = "bracket end does not transit";
    return out;
  }
  if ((*d_lo > 0.0) == (*d_hi > 0.0)) {
    out.note = "no drift sign change in bracket";
    return out;
  }
  const double target = 2.0 * kPi * opt.tol_lambda;  // |f tau - 2 pi| = k |dx|, lambda = 2 pi / k
  double lo = Y_lo, hi = Y_hi, dlo = *d_lo;
  double Y = 0.5 * (lo + hi);
  double d = 0.0;
  for (out.iterations = 1; out.iterations <= opt.max_iterations; ++out.iterations) {
    Y = 0.5 * (lo + hi);
    const auto dm = defect(Y);
    if (!dm) {
      out.note = "transit lost inside bracket";
      return out;
    }
    d = *dm;
    if (std::abs(d) < target || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
    if ((d > 0.0) == (dlo > 0.0)) {
      lo = Y;
      dlo = d;
    } else {
      hi = Y;
    }
  }
  out.Y = Y;
  out.tau = (d + 2.0 * kPi) / co.f;

  const RawRun run = integrate_raw(kPi, Y, co, out.tau, 1.0, opt.verify);
  const State2 end = run.y.back();
  out.dx = (end[0] - kPi + co.f * out.tau) / co.k;
  out.dy = (end[1] - Y) / co.k;
  const double H0 = hamiltonian(kPi, Y, co);
  double hd = 0.0;
  for (const auto& s : run.y) hd = std::max(hd, std::abs(hamiltonian(s[0], s[1], co) - H0));
  out.H_drift = hd;
  out.found = std::abs(d) < target;
  if (!out.found) out.note = "bisection stalled above tolerance";
  return out;
}

}  // namespace vortwave
