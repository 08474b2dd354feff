#pragma once

// Parameters, dispersion relation and regime classification for linear
// gravity waves riding on a current of constant vorticity.
//
// Conventions: y points up from the flat bed, the mean surface sits at y = h,
// and the trivial current is U(y) = s*sqrt(g*h) - omega*y. With s = 0 (the
// bottom Stokes condition) the mean horizontal velocity on the bed vanishes.

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "vortwave/branching.hpp"
#include "vortwave/errors.hpp"

namespace vortwave {

/// Sign in front of the square root of the dispersion relation. It equals the
/// sign of c - s*sqrt(gh) + h*omega.
enum class Branch { plus, minus };

inline std::string_view to_string(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

inline Branch parse_branch(std::string_view text) {
  if (text == "plus" || text == "+") return Branch::plus;
  if (text == "minus" || text == "-") return Branch::minus;
  throw DomainError("unknown branch '" + std::string(text) + "' (expected plus or minus)");
}

/// The primitive, user-facing parameters. Everything else is derived.
struct WaveInputs {
  double g = 9.81;    // m/s^2
  double h = 1.0;     // mean depth, m
  double a = 0.0;     // amplitude, m
  double k = 1.0;     // wavenumber, rad/m
  double omega = 0.0; // vorticity, 1/s
  double s = 0.0;     // bed shear offset in units of sqrt(gh)
  double P0 = 0.0;    // atmospheric pressure per unit density, m^2/s^2
  Branch branch = Branch::plus;
};

/// Warning thresholds for the small-amplitude regime. Exceeding them flags the
/// parameter set but does not reject it.
struct Guards {
  double max_amplitude_ratio = 0.1;  // a/h
  double max_eps_omega = 0.3;        // (a/h) * |omega| * sqrt(h/g)
};

/// Closed-form wave speed on the requested branch.
///
///   c = s*sqrt(gh) - h*omega + (omega*tanh(kh) +- sqrt(4gk*tanh(kh) + omega^2*tanh^2(kh))) / (2k)
///
/// The two roots are formed without cancellation (the smaller one through the
/// product of roots, -g*tanh(kh)/k).
inline double solve_dispersion(double g, double h, double k, double omega, double s, Branch branch) {
  if (!(g > 0.0) || !(h > 0.0) || !(k > 0.0) || !std::isfinite(omega) || !std::isfinite(s)) {
    throw DomainError("solve_dispersion: require g > 0, h > 0, k > 0 and finite omega, s");
  }
  const double T = std::tanh(k * h);
  const double wt = omega * T;
  const double root = std::sqrt(4.0 * g * k * T + wt * wt);
  double w_plus = 0.0;
  double w_minus = 0.0;
  if (wt >= 0.0) {
    w_plus = (wt + root) / (2.0 * k);
    w_minus = -2.0 * g * T / (wt + root);
  } else {
    w_minus = (wt - root) / (2.0 * k);
    w_plus = 2.0 * g * T / (root - wt);
  }
  const double w = branch == Branch::plus ? w_plus : w_minus;
  return w + s * std::sqrt(g * h) - h * omega;
}

class WaveParams {
 public:
  /// Solves the dispersion relation for c on `in.branch`.
  static WaveParams solve(const WaveInputs& in, const Guards& guards = {}) {
    const double c = solve_dispersion(in.g, in.h, in.k, in.omega, in.s, in.branch);
    return WaveParams(in, c, guards);
  }

  /// Wraps an externally supplied speed. The dispersion relation is not
  /// enforced; use dispersion_residual to test it.
  static WaveParams with_speed(const WaveInputs& in, double c, const Guards& guards = {}) {
    return WaveParams(in, c, guards);
  }

  const WaveInputs& inputs() const { return in_; }
  double g() const { return in_.g; }
  double h() const { return in_.h; }
  double a() const { return in_.a; }
  double k() const { return in_.k; }
  double omega() const { return in_.omega; }
  double s() const { return in_.s; }
  double P0() const { return in_.P0; }
  Branch branch() const { return in_.branch; }
  double c() const { return c_; }

  double f() const { return in_.k * c_; }
  double lambda() const { return 2.0 * std::numbers::pi / in_.k; }
  double sqrt_gh() const { return std::sqrt(in_.g * in_.h); }

  /// Wave speed relative to the surface current, c - s*sqrt(gh) + h*omega.
  double relative_speed() const { return c_ - in_.s * sqrt_gh() + in_.h * in_.omega; }

  /// Steady-field coefficient A = a*(f - k*s*sqrt(gh) + k*h*omega)/sinh(kh);
  /// for s = 0 this is a*(f + k*h*omega)/sinh(kh).
  double A() const {
    const double kh = in_.k * in_.h;
    return in_.a * (f() - in_.k * in_.s * sqrt_gh() + kh * in_.omega) / std::sinh(kh);
  }

  bool amplitude_warning() const { return amplitude_warning_; }
  bool validity_warning() const { return validity_warning_; }

  std::vector<std::string> warnings() const {
    std::vector<std::string> out;
    if (amplitude_warning_) out.emplace_back("amplitude ratio a/h exceeds the small-amplitude guard");
    if (validity_warning_) out.emplace_back("eps*|omega_nd| exceeds the uniform-validity guard");
    return out;
  }

 private:
  WaveParams(const WaveInputs& in, double c, const Guards& guards) : in_(in), c_(c) {
    if (!(in.g > 0.0) || !(in.h > 0.0) || !(in.k > 0.0) || !(in.a >= 0.0)) {
      throw DomainError("wave parameters require g > 0, h > 0, k > 0 and a >= 0");
    }
    if (!std::isfinite(in.g) || !std::isfinite(in.h) || !std::isfinite(in.k) || !std::isfinite(in.a) ||
        !std::isfinite(in.omega) || !std::isfinite(in.s) || !std::isfinite(in.P0) || !std::isfinite(c)) {
      throw DomainError("wave parameters must be finite");
    }
    const double w = relative_speed();
    if (std::abs(w) <= 1e-8 * sqrt_gh()) {
      throw UnsupportedConfiguration(
          "c + h*omega (relative to the bed current) vanishes; the speed theorem excludes c = -h*omega");
    }
    if ((w > 0.0) != (in.branch == Branch::plus)) {
      throw DomainError("branch '" + std::string(to_string(in.branch)) +
                        "' disagrees with the sign of c - s*sqrt(gh) + h*omega");
    }
    const double eps = in.a / in.h;
    amplitude_warning_ = eps >= guards.max_amplitude_ratio;
    validity_warning_ = eps * std::abs(in.omega) * std::sqrt(in.h / in.g) >= guards.max_eps_omega;
  }

  WaveInputs in_;
  double c_ = 0.0;
  bool amplitude_warning_ = false;
  bool validity_warning_ = false;
};

/// |w*(k*w*coth(kh) - omega)/g - 1| with w = c - s*sqrt(gh) + h*omega. This is
/// the solvability condition written in physical variables; it vanishes
/// exactly on the dispersion relation.
inline double dispersion_residual(const WaveParams& p) {
  const double w = p.relative_speed();
  const double kh = p.k() * p.h();
  return std::abs(w * (p.k() * w / std::tanh(kh) - p.omega()) / p.g() - 1.0);
}

/// Trivial current U(y) = s*sqrt(gh) - omega*y for 0 <= y <= h.
inline double shear_profile(double y, const WaveParams& p) {
  if (!(y >= 0.0) || !(y <= p.h())) {
    throw DomainError("shear_profile: y must lie in [0, h]");
  }
  return p.s() * p.sqrt_gh() - p.omega() * y;
}

enum class VorticitySign { negative, zero, positive };
enum class CrestPosition { at_zero, at_pi };

inline std::string_view to_string(VorticitySign v) {
  switch (v) {
    case VorticitySign::negative: return "negative";
    case VorticitySign::zero: return "zero";
    case VorticitySign::positive: return "positive";
  }
  return "?";
}

inline std::string_view to_string(CrestPosition c) { return c == CrestPosition::at_zero ? "X=0" : "X=pi"; }

struct Regime {
  VorticitySign vorticity_sign = VorticitySign::zero;
  CrestPosition crest = CrestPosition::at_zero;
  bool supercritical = false;        // c + h*omega < 0
  bool branching_positive = false;   // only meaningful for omega < 0
  double branching_value = std::numeric_limits<double>::quiet_NaN();
};

/// Case split of the steady portrait for right-going waves (c > 0, s = 0).
inline Regime classify_regime(const WaveParams& p) {
  if (!(p.c() > 0.0)) {
    throw UnsupportedConfiguration(
        "regime analysis needs a right-going wave (c > 0); mirror x -> -x for left-going waves");
  }
  if (p.s() != 0.0) {
    throw UnsupportedConfiguration("regime analysis assumes the bottom Stokes condition s = 0");
  }
  Regime r;
  r.vorticity_sign = p.omega() < 0.0   ? VorticitySign::negative
                     : p.omega() > 0.0 ? VorticitySign::positive
                                       : VorticitySign::zero;
  r.supercritical = p.c() + p.h() * p.omega() < 0.0;
  r.crest = r.supercritical ? CrestPosition::at_pi : CrestPosition::at_zero;
  const double alpha = std::abs(p.A()) * p.k();
  if (p.omega() < 0.0 && alpha > 0.0) {
    r.branching_value = branching_discriminant(alpha, p.omega(), p.f());
    r.branching_positive = r.branching_value > 0.0;
  }
  return r;
}

/// Dimensionless groups: epsilon = a/h, delta = h/lambda, speeds in units of
/// sqrt(gh), vorticity in units of sqrt(g/h).
struct NondimParams {
  double epsilon = 0.0;
  double delta = 0.0;
  double c_nd = 0.0;
  double s_nd = 0.0;
  double omega_nd = 0.0;
  double C = 0.0;  // (c_nd - s_nd + omega_nd) / sinh(2*pi*delta)
};

inline NondimParams nondimensionalize(const WaveParams& p) {
  NondimParams nd;
  nd.epsilon = p.a() / p.h();
  nd.delta = p.h() / p.lambda();
  nd.c_nd = p.c() / p.sqrt_gh();
  nd.s_nd = p.s();
  nd.omega_nd = p.omega() * std::sqrt(p.h() / p.g());
  nd.C = (nd.c_nd - nd.s_nd + nd.omega_nd) / std::sinh(2.0 * std::numbers::pi * nd.delta);
  return nd;
}

/// Inverse of nondimensionalize given the two scales it removes (g and h).
inline WaveParams dimensionalize(const NondimParams& nd, double g, double h, double P0 = 0.0) {
  WaveInputs in;
  in.g = g;
  in.h = h;
  in.a = nd.epsilon * h;
  in.k = 2.0 * std::numbers::pi * nd.delta / h;
  in.omega = nd.omega_nd * std::sqrt(g / h);
  in.s = nd.s_nd;
  in.P0 = P0;
  const double c = nd.c_nd * std::sqrt(g * h);
  in.branch = (nd.c_nd - nd.s_nd + nd.omega_nd) > 0.0 ? Branch::plus : Branch::minus;
  return WaveParams::with_speed(in, c);
}

}  // namespace vortwave
