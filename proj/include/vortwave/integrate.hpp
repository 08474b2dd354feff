#pragma once

// Time integration of the steady system. The default path is an adaptive
// Dormand-Prince 5(4) pair with dense output; an implicit-midpoint scheme
// (symplectic, fixed step) is available for long runs.

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "vortwave/errors.hpp"
#include "vortwave/field_eval.hpp"
#include "vortwave/roots.hpp"

namespace vortwave {

using State2 = std::array<double, 2>;

enum class Scheme { adaptive, implicit_midpoint };

inline std::string_view to_string(Scheme s) { return s == Scheme::adaptive ? "adaptive" : "implicit_midpoint"; }

// Defaults are tight enough for the Hamiltonian audit (relative drift below
// 1e-8 over 100 wave periods) on fast surface-layer orbits; 1e-10 is not.
struct IntegrateOptions {
  double rtol = 1e-13;
  double atol = 1e-15;
  Scheme scheme = Scheme::adaptive;
  double dt = 0.0;              // implicit midpoint step; 0 picks period/4000
  double initial_dt = 0.0;      // 0 picks period/1000
  double y_guard = 600.0;       // trajectory is truncated once Y exceeds this
  double min_dt = 1e-14;        // relative to the period
  std::size_t max_steps = 20'000'000;
};

namespace detail {

/// Right-hand side with the bed line held exactly invariant.
struct SteadySystem {
  SteadyCoeffs co;
  double sign = 1.0;  // -1 integrates backward in time
  bool on_bed = false;

  void operator()(const State2& s, State2& ds, double /*t*/) const {
    const Vec2 r = steady_rhs(s[0], s[1], co);
    ds[0] = sign * r.x;
    ds[1] = on_bed ? 0.0 : sign * r.y;
  }
};

inline double wave_period(const SteadyCoeffs& co) {
  const double f = std::abs(co.f);
  return f > 0.0 ? 2.0 * std::numbers::pi / f : 1.0;
}

/// One implicit-midpoint step, z = y + dt F((y + z)/2), by Newton iteration
/// with the analytic Jacobian.
inline State2 implicit_midpoint_step(const SteadySystem& sys, const State2& y, double dt) {
  State2 z = y;
  State2 k{};
  sys(y, k, 0.0);
  z[0] += dt * k[0];
  z[1] += dt * k[1];
  for (int it = 0; it < 50; ++it) {
    const double Xm = 0.5 * (y[0] + z[0]);
    const double Ym = 0.5 * (y[1] + z[1]);
    State2 F{};
    sys({Xm, Ym}, F, 0.0);
    const double g0 = z[0] - y[0] - dt * F[0];
    const double g1 = z[1] - y[1] - dt * F[1];
    const SteadyCoeffs& co = sys.co;
    const double sx = std::sin(Xm), cx = std::cos(Xm);
    const double shy = std::sinh(Ym), chy = std::cosh(Ym);
    double j00 = sys.sign * (-co.Ak * sx * chy);
    double j01 = sys.sign * (co.Ak * cx * shy - co.omega);
    double j10 = sys.on_bed ? 0.0 : sys.sign * (co.Ak * cx * shy);
    double j11 = sys.on_bed ? 0.0 : sys.sign * (co.Ak * sx * chy);
    const double m00 = 1.0 - 0.5 * dt * j00;
    const double m01 = -0.5 * dt * j01;
    const double m10 = -0.5 * dt * j10;
    const double m11 = 1.0 - 0.5 * dt * j11;
    const double det = m00 * m11 - m01 * m10;
    if (det == 0.0) break;
    const double d0 = (m11 * g0 - m01 * g1) / det;
    const double d1 = (m00 * g1 - m10 * g0) / det;
    z[0] -= d0;
    z[1] -= d1;
    if (std::abs(d0) <= 4e-16 * (1.0 + std::abs(z[0])) && std::abs(d1) <= 4e-16 * (1.0 + std::abs(z[1]))) break;
  }
  return z;
}

}  // namespace detail

/// Called after every accepted step with (t_prev, t_now, interpolant).
/// Returning false stops the integration. `interp(t)` evaluates the state
/// anywhere in [t_prev, t_now] (times are in the integration variable, i.e.
/// already multiplied by the direction sign).
using StepObserver = std::function<bool(double t_prev, const State2& y_prev, double t_now, const State2& y_now,
                                        const std::function<State2(double)>& interp)>;

struct RawRun {
  std::vector<double> t;
  std::vector<State2> y;
  bool truncated = false;
  bool stopped = false;
};

/// Integrator failure carrying the steps accepted before it.
class RawIntegrationError : public NumericalError {
 public:
  RawIntegrationError(const std::string& what, RawRun partial)
      : NumericalError("integrator", what), message_(what), partial_(std::move(partial)) {}
  const RawRun& partial() const noexcept { return partial_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  RawRun partial_;
};

/// Integrates from (X0, Y0) over |t| <= t_end in the direction `sign`,
/// recording every accepted step. Stops early when the observer says so or
/// when Y crosses the guard.
inline RawRun integrate_raw(double X0, double Y0, const SteadyCoeffs& co, double t_end, double sign,
                            const IntegrateOptions& opt, const StepObserver& observer = {}) {
  namespace odeint = boost::numeric::odeint;
  if (!(Y0 >= 0.0)) throw DomainError("integrate: Y0 must be >= 0");
  if (!(t_end > 0.0)) throw DomainError("integrate: t_end must be positive");
  detail::SteadySystem sys{co, sign, Y0 == 0.0};
  const double period = detail::wave_period(co);

  RawRun run;
  State2 y{X0, Y0};
  run.t.push_back(0.0);
  run.y.push_back(y);

  auto record = [&](double t, const State2& s) {
    run.t.push_back(sign * t);
    run.y.push_back(s);
  };

  if (opt.scheme == Scheme::implicit_midpoint) {
    const double dt = opt.dt > 0.0 ? opt.dt : period / 4000.0;
    double t = 0.0;
    std::size_t steps = 0;
    while (t < t_end) {
      if (++steps > opt.max_steps) throw RawIntegrationError("step budget exhausted", std::move(run));
      const double h = std::min(dt, t_end - t);
      const State2 prev = y;
      const double t_prev = t;
      y = detail::implicit_midpoint_step(sys, y, h);
      t = t_prev + h;
      if (y[1] < 0.0 && Y0 > 0.0) y[1] = std::max(y[1], 0.0);
      record(t, y);
      if (y[1] > opt.y_guard) {
        run.truncated = true;
        return run;
      }
      if (observer) {
        // Linear interpolation is the natural dense output of a midpoint step.
        auto interp = [&](double s) {
          const double w = (s - t_prev) / (t - t_prev);
          return State2{prev[0] + w * (y[0] - prev[0]), prev[1] + w * (y[1] - prev[1])};
        };
        if (!observer(t_prev, prev, t, y, interp)) {
          run.stopped = true;
          return run;
        }
      }
    }
    return run;
  }

  auto stepper = odeint::make_dense_output(opt.atol, opt.rtol, odeint::runge_kutta_dopri5<State2>());
  const double dt0 = opt.initial_dt > 0.0 ? opt.initial_dt : std::min(period / 1000.0, t_end);
  stepper.initialize(y, 0.0, dt0);
  std::size_t steps = 0;
  while (stepper.current_time() < t_end) {
    if (++steps > opt.max_steps) throw RawIntegrationError("step budget exhausted", std::move(run));
    const auto [t_prev, t_now] = stepper.do_step(std::cref(sys));
    if (!(t_now - t_prev > opt.min_dt * period)) {
      throw RawIntegrationError("step size collapsed at t = " + std::to_string(sign * t_prev), std::move(run));
    }
    State2 prev = stepper.previous_state();
    double t_stop = t_now;
    State2 cur = stepper.current_state();
    if (t_now > t_end) {
      t_stop = t_end;
      stepper.calc_state(t_end, cur);
    }
    if (!std::isfinite(cur[0]) || !std::isfinite(cur[1])) {
      throw RawIntegrationError("non-finite state at t = " + std::to_string(sign * t_stop), std::move(run));
    }
    record(t_stop, cur);
    if (cur[1] > opt.y_guard) {
      run.truncated = true;
      return run;
    }
    if (observer) {
      auto interp = [&](double s) {
        State2 out{};
        stepper.calc_state(s, out);
        return out;
      };
      if (!observer(t_prev, prev, t_stop, cur, interp)) {
        run.stopped = true;
        return run;
      }
    }
    if (t_stop >= t_end) break;
  }
  return run;
}

/// Time (in the integration variable) where component `idx` of the
/// interpolated state equals `level` inside [t0, t1], given a sign change.
inline double locate_crossing(const std::function<State2(double)>& interp, double t0, double t1, int idx,
                              double level, double v0, double v1) {
  auto g = [&](double t) { return interp(t)[idx] - level; };
  return refine_bracketed_root(g, t0, t1, v0 - level, v1 - level, "event");
}

}  // namespace vortwave
