#pragma once

// Closed-form linear solution, steady-frame vector field and Hamiltonian.

#include <cmath>
#include <numbers>

#include "vortwave/errors.hpp"
#include "vortwave/wave_core.hpp"

namespace vortwave {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// cosh/sinh of arguments beyond this overflow double precision.
inline constexpr double kHyperbolicLimit = 700.0;

namespace detail {
inline void check_hyperbolic_range(double arg, const char* who) {
  if (!(std::abs(arg) <= kHyperbolicLimit)) {
    throw DomainError(std::string(who) + ": |k*y| beyond the cosh/sinh overflow guard");
  }
}
}  // namespace detail

inline double wave_phase(double t, double x, const WaveParams& p) { return p.k() * x - p.f() * t; }

/// eta = h + a*cos(kx - ft)
inline double surface(double t, double x, const WaveParams& p) {
  return p.h() + p.a() * std::cos(wave_phase(t, x, p));
}

struct Velocity {
  double u = 0.0;
  double v = 0.0;
  bool inside = true;  // y <= eta(t, x)
};

inline Velocity velocity(double t, double x, double y, const WaveParams& p) {
  if (!(y >= 0.0)) throw DomainError("velocity: y must be >= 0");
  const double ky = p.k() * y;
  detail::check_hyperbolic_range(ky, "velocity");
  const double theta = wave_phase(t, x, p);
  const double A = p.A();
  Velocity out;
  out.u = p.s() * p.sqrt_gh() - p.omega() * y + A * std::cos(theta) * std::cosh(ky);
  out.v = A * std::sin(theta) * std::sinh(ky);
  out.inside = y <= surface(t, x, p);
  return out;
}

/// Pressure per unit density,
///   P = P0 + g(h - y) + (A/k) cos(theta) ((f + k*omega*y) cosh(ky) - omega sinh(ky))
/// (with s != 0 the factor f + k*omega*y becomes k*(c - U(y))).
inline double pressure(double t, double x, double y, const WaveParams& p) {
  if (!(y >= 0.0)) throw DomainError("pressure: y must be >= 0");
  const double ky = p.k() * y;
  detail::check_hyperbolic_range(ky, "pressure");
  const double theta = wave_phase(t, x, p);
  const double relative = p.f() - p.k() * p.s() * p.sqrt_gh() + p.k() * p.omega() * y;
  return p.P0() + p.g() * (p.h() - y) +
         (p.A() / p.k()) * std::cos(theta) * (relative * std::cosh(ky) - p.omega() * std::sinh(ky));
}

struct FieldSample {
  double u = 0.0;
  double v = 0.0;
  double P = 0.0;
  double eta = 0.0;
  double P0 = 0.0;
  bool inside = true;
};

inline FieldSample sample_field(double t, double x, double y, const WaveParams& p) {
  const Velocity vel = velocity(t, x, y, p);
  return {vel.u, vel.v, pressure(t, x, y, p), surface(t, x, p), p.P0(), vel.inside};
}

/// Perturbation fields in the dimensionless steady frame (x measured in
/// wavelengths from a crest, y in depths).
struct NondimSolution {
  double u = 0.0;
  double v = 0.0;
  double p = 0.0;
};

inline NondimSolution nondim_solution(double x, double y, const NondimParams& nd) {
  if (!(y >= 0.0) || !(y <= 1.0 + nd.epsilon)) {
    throw DomainError("nondim_solution: y must lie in [0, 1 + epsilon]");
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double kd = two_pi * nd.delta;
  const double cx = std::cos(two_pi * x);
  const double sx = std::sin(two_pi * x);
  NondimSolution out;
  out.u = kd * nd.C * cx * std::cosh(kd * y);
  out.v = two_pi * nd.C * sx * std::sinh(kd * y);
  out.p = nd.C * cx *
          (kd * (nd.c_nd - nd.s_nd + nd.omega_nd * y) * std::cosh(kd * y) - nd.omega_nd * std::sinh(kd * y));
  return out;
}

/// Coefficients of the autonomous system in X = kx - ft, Y = ky:
///   X' = Ak cos X cosh Y - omega Y - f,   Y' = Ak sin X sinh Y.
/// phase_shift is pi when the coefficients were normalized from Ak < 0; the
/// physical steady phase is then X + pi.
struct SteadyCoeffs {
  double Ak = 0.0;
  double omega = 0.0;
  double f = 0.0;
  double k = 1.0;
  double phase_shift = 0.0;

  static SteadyCoeffs from(const WaveParams& p) { return {p.A() * p.k(), p.omega(), p.f(), p.k(), 0.0}; }

  bool is_normalized() const { return Ak >= 0.0; }

  /// Maps Ak < 0 onto Ak > 0 through X -> X + pi.
  SteadyCoeffs normalized() const {
    if (Ak >= 0.0) return *this;
    SteadyCoeffs out = *this;
    out.Ak = -Ak;
    out.phase_shift = phase_shift == 0.0 ? std::numbers::pi : 0.0;
    return out;
  }
};

inline void check_steady_height(double Y, const char* who) { detail::check_hyperbolic_range(Y, who); }

inline Vec2 steady_rhs(double X, double Y, const SteadyCoeffs& co) {
  check_steady_height(Y, "steady_rhs");
  return {co.Ak * std::cos(X) * std::cosh(Y) - co.omega * Y - co.f, co.Ak * std::sin(X) * std::sinh(Y)};
}

/// H = Ak cos X sinh Y - omega Y^2 / 2 - f Y. Orbits of steady_rhs are its
/// level curves, with X' = dH/dY and Y' = -dH/dX.
inline double hamiltonian(double X, double Y, const SteadyCoeffs& co) {
  check_steady_height(Y, "hamiltonian");
  return co.Ak * std::cos(X) * std::sinh(Y) - 0.5 * co.omega * Y * Y - co.f * Y;
}

/// (dH/dX, dH/dY)
inline Vec2 hamiltonian_gradient(double X, double Y, const SteadyCoeffs& co) {
  check_steady_height(Y, "hamiltonian_gradient");
  return {-co.Ak * std::sin(X) * std::sinh(Y), co.Ak * std::cos(X) * std::cosh(Y) - co.omega * Y - co.f};
}

struct Hessian {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;
};

inline Hessian hamiltonian_hessian(double X, double Y, const SteadyCoeffs& co) {
  check_steady_height(Y, "hamiltonian_hessian");
  const double cs = co.Ak * std::cos(X) * std::sinh(Y);
  return {-cs, -co.Ak * std::sin(X) * std::cosh(Y), cs - co.omega};
}

/// Trajectory slope dY/dX = Y'/X' of the steady system.
inline double orbit_slope(double X, double Y, const SteadyCoeffs& co) {
  const Vec2 r = steady_rhs(X, Y, co);
  return r.y / r.x;
}

/// Defects of the linear field equations at one space-time point. Every entry
/// is an identity of the closed-form solution except dynamic_defect, which
/// equals g*a*cos(theta) times the signed dispersion residual.
struct IdentityResiduals {
  double div = 0.0;               // u_x + v_y
  double curl_defect = 0.0;       // v_x - u_y - omega
  double bed_v = 0.0;             // v(t, x, 0)
  double kinematic_defect = 0.0;  // v(t,x,h) - (eta_t + U(h) eta_x)
  double dynamic_defect = 0.0;    // P(t,x,h) - P0 - g (eta - h)
};

inline IdentityResiduals field_identity_residuals(double t, double x, double y, const WaveParams& p) {
  if (!(y >= 0.0)) throw DomainError("field_identity_residuals: y must be >= 0");
  const double k = p.k();
  const double ky = k * y;
  detail::check_hyperbolic_range(ky, "field_identity_residuals");
  detail::check_hyperbolic_range(k * p.h(), "field_identity_residuals");
  const double theta = wave_phase(t, x, p);
  const double A = p.A();
  const double c = std::cos(theta);
  const double s = std::sin(theta);

  const double u_x = -A * k * s * std::cosh(ky);
  const double v_y = A * k * s * std::cosh(ky);
  const double v_x = A * k * c * std::sinh(ky);
  const double u_y = -p.omega() + A * k * c * std::sinh(ky);

  const double eta_t = p.a() * p.f() * s;
  const double eta_x = -p.a() * k * s;
  const double U_h = p.s() * p.sqrt_gh() - p.omega() * p.h();

  IdentityResiduals r;
  r.div = u_x + v_y;
  r.curl_defect = (v_x - u_y) - p.omega();
  r.bed_v = velocity(t, x, 0.0, p).v;
  r.kinematic_defect = velocity(t, x, p.h(), p).v - (eta_t + U_h * eta_x);
  r.dynamic_defect = pressure(t, x, p.h(), p) - p.P0() - p.g() * (surface(t, x, p) - p.h());
  return r;
}

}  // namespace vortwave
