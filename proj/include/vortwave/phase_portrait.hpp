#pragma once

// Phase portrait of the steady system on one period strip X in [-pi, pi]:
// infinity-isocline, critical points with Morse classification, separatrices
// traced as level sets of the Hamiltonian, and the omega-scan that locates
// the birth of the vortex.
//
// All routines here take normalized coefficients (Ak >= 0); build_phase_portrait
// does the normalization and records the crest shift.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vortwave/branching.hpp"
#include "vortwave/errors.hpp"
#include "vortwave/field_eval.hpp"
#include "vortwave/roots.hpp"
#include "vortwave/wave_core.hpp"

namespace vortwave {

inline constexpr double kPi = std::numbers::pi;

enum class PointKind { saddle, center, degenerate };

inline std::string_view to_string(PointKind k) {
  switch (k) {
    case PointKind::saddle: return "saddle";
    case PointKind::center: return "center";
    case PointKind::degenerate: return "degenerate";
  }
  return "?";
}

struct CriticalPoint {
  double X = 0.0;
  double Y = 0.0;
  PointKind kind = PointKind::degenerate;
  std::array<double, 2> hessian_eigs{};  // ascending
  double H_value = 0.0;
};

struct PointClassification {
  PointKind kind = PointKind::degenerate;
  std::array<double, 2> hessian_eigs{};
};

namespace detail {

inline void require_normalized(const SteadyCoeffs& co, const char* who) {
  if (!co.is_normalized()) {
    throw ContractError(std::string(who) + ": coefficients must be normalized (Ak >= 0); call normalized() first");
  }
}

inline std::array<double, 2> symmetric_eigenvalues(const Hessian& m) {
  const double mean = 0.5 * (m.xx + m.yy);
  const double half = 0.5 * (m.xx - m.yy);
  const double rad = std::hypot(half, m.xy);
  const double big = mean >= 0.0 ? mean + rad : mean - rad;
  const double det = m.xx * m.yy - m.xy * m.xy;
  const double small = big != 0.0 ? det / big : 0.0;
  return {std::min(big, small), std::max(big, small)};
}

}  // namespace detail

/// Saddle/center verdict from the Hessian of H. At X in {0, pi} the Hessian is
/// diagonal and the verdict reduces to the sign of phi'(Y).
inline PointClassification classify_critical_point(double X, double Y, const SteadyCoeffs& co) {
  const Vec2 r = steady_rhs(X, Y, co);
  const double scale = std::abs(co.f) + std::abs(co.Ak) * std::cosh(Y) + std::abs(co.omega) * std::abs(Y);
  if (std::abs(r.x) > 1e-8 * scale || std::abs(r.y) > 1e-8 * scale) {
    throw ContractError("classify_critical_point: (X, Y) is not a critical point of the steady system");
  }
  const Hessian hess = hamiltonian_hessian(X, Y, co);
  PointClassification out;
  out.hessian_eigs = detail::symmetric_eigenvalues(hess);
  const double lo = out.hessian_eigs[0];
  const double hi = out.hessian_eigs[1];
  const double mag = std::max(std::abs(lo), std::abs(hi));
  if (mag == 0.0 || std::min(std::abs(lo), std::abs(hi)) <= 1e-12 * mag) {
    out.kind = PointKind::degenerate;
  } else {
    out.kind = (lo < 0.0) != (hi < 0.0) ? PointKind::saddle : PointKind::center;
  }
  return out;
}

/// Positive Y with X' = 0 at fixed X, ascending (zero, one or two values).
inline IsoclineRoots infinity_isocline(double X, const SteadyCoeffs& co) {
  detail::require_normalized(co, "infinity_isocline");
  return phi_roots(co.Ak * std::cos(X), co.omega, co.f);
}

/// Critical points in one strip, in the order P0 (X = 0) followed by the X = pi
/// points by increasing Y (P1 then P2 in the vortex regime).
inline std::vector<CriticalPoint> find_critical_points(const SteadyCoeffs& co) {
  detail::require_normalized(co, "find_critical_points");
  std::vector<CriticalPoint> out;
  if (co.Ak == 0.0) return out;  // pure shear: no isolated equilibria

  auto make = [&](double X, double Y, bool tangent) {
    CriticalPoint cp;
    cp.X = X;
    cp.Y = Y;
    const PointClassification cls = classify_critical_point(X, Y, co);
    cp.kind = tangent ? PointKind::degenerate : cls.kind;
    cp.hessian_eigs = cls.hessian_eigs;
    cp.H_value = hamiltonian(X, Y, co);
    return cp;
  };

  // X = 0: Ak cosh Y - omega Y - f = 0; keep the smallest root.
  const IsoclineRoots at_zero = phi_roots(co.Ak, co.omega, co.f);
  if (!at_zero.Y.empty()) out.push_back(make(0.0, at_zero.Y.front(), at_zero.tangent));

  // X = pi: Ak cosh Y + omega Y + f = 0.
  const IsoclineRoots at_pi = phi_roots(-co.Ak, co.omega, co.f);
  for (double Y : at_pi.Y) out.push_back(make(kPi, Y, at_pi.tangent));
  return out;
}

// ---------------------------------------------------------------------------
// Separatrix tracing

enum class SeparatrixDirection { unstable_plus, unstable_minus, stable_plus, stable_minus };

inline std::string_view to_string(SeparatrixDirection d) {
  switch (d) {
    case SeparatrixDirection::unstable_plus: return "unstable_plus";
    case SeparatrixDirection::unstable_minus: return "unstable_minus";
    case SeparatrixDirection::stable_plus: return "stable_plus";
    case SeparatrixDirection::stable_minus: return "stable_minus";
  }
  return "?";
}

inline constexpr std::array<SeparatrixDirection, 4> kAllDirections{
    SeparatrixDirection::unstable_plus, SeparatrixDirection::unstable_minus, SeparatrixDirection::stable_plus,
    SeparatrixDirection::stable_minus};

enum class TraceEnd { strip_boundary, bed, top, critical_point };

inline std::string_view to_string(TraceEnd e) {
  switch (e) {
    case TraceEnd::strip_boundary: return "strip_boundary";
    case TraceEnd::bed: return "bed";
    case TraceEnd::top: return "top";
    case TraceEnd::critical_point: return "critical_point";
  }
  return "?";
}

struct TraceOptions {
  double offset = 1e-6;       // initial displacement from the saddle
  double max_step = 0.02;     // arclength step cap
  double min_step = 1e-12;
  double Ymax = 20.0;
  double level_tol = 1e-12;   // corrector tolerance, relative to 1 + |H_level|
  double stop_distance = 1e-5;
  std::size_t max_points = 500000;
};

struct SeparatrixBranch {
  SeparatrixDirection direction = SeparatrixDirection::unstable_plus;
  double H_level = 0.0;
  std::vector<Vec2> points;  // starts at the saddle
  TraceEnd end = TraceEnd::strip_boundary;
  int end_point = -1;        // index into the critical point list for TraceEnd::critical_point
};

class TracingError : public NumericalError {
 public:
  TracingError(const std::string& what, SeparatrixBranch partial)
      : NumericalError("separatrix", what), partial_(std::move(partial)) {}
  const SeparatrixBranch& partial() const noexcept { return partial_; }

 private:
  SeparatrixBranch partial_;
};

/// Unit eigenvector of the linearized flow at a saddle, oriented with a
/// non-negative X component. unstable selects the expanding direction.
inline Vec2 saddle_eigendirection(const CriticalPoint& saddle, const SteadyCoeffs& co, bool unstable) {
  const Hessian m = hamiltonian_hessian(saddle.X, saddle.Y, co);
  const double det = m.xx * m.yy - m.xy * m.xy;
  if (!(det < 0.0)) throw ContractError("saddle_eigendirection: point is not a saddle");
  const double mu = (unstable ? 1.0 : -1.0) * std::sqrt(-det);
  // (J - mu I) v = 0 with J = [[Hxy, Hyy], [-Hxx, -Hxy]]; take the better row.
  const Vec2 v1{m.yy, mu - m.xy};
  const Vec2 v2{m.xy + mu, -m.xx};
  Vec2 v = norm(v1) >= norm(v2) ? v1 : v2;
  v = (1.0 / norm(v)) * v;
  if (v.x < 0.0 || (v.x == 0.0 && v.y < 0.0)) v = -1.0 * v;
  return v;
}

inline Vec2 initial_separatrix_direction(const CriticalPoint& saddle, const SteadyCoeffs& co,
                                         SeparatrixDirection dir) {
  const bool unstable = dir == SeparatrixDirection::unstable_plus || dir == SeparatrixDirection::unstable_minus;
  const bool plus = dir == SeparatrixDirection::unstable_plus || dir == SeparatrixDirection::stable_plus;
  const Vec2 v = saddle_eigendirection(saddle, co, unstable);
  return plus ? v : -1.0 * v;
}

namespace detail {

inline std::vector<Vec2> critical_points_with_images(const std::vector<CriticalPoint>& crit) {
  std::vector<Vec2> out;
  for (const auto& cp : crit) {
    for (int m = -1; m <= 1; ++m) out.push_back({cp.X + 2.0 * kPi * m, cp.Y});
  }
  return out;
}

}  // namespace detail

/// Follows the level set H = H(saddle) away from `saddle` along the chosen
/// manifold by predictor-corrector continuation, until it leaves the strip
/// [-pi, pi] x [0, Ymax] or comes within stop_distance of a critical point.
/// Unstable branches follow the flow, stable ones run against it.
inline SeparatrixBranch trace_separatrix(const CriticalPoint& saddle, const SteadyCoeffs& co,
                                         SeparatrixDirection dir, const TraceOptions& opt = {}) {
  detail::require_normalized(co, "trace_separatrix");
  if (saddle.kind != PointKind::saddle) throw ContractError("trace_separatrix: start point must be a saddle");

  const double Hs = hamiltonian(saddle.X, saddle.Y, co);
  const bool unstable = dir == SeparatrixDirection::unstable_plus || dir == SeparatrixDirection::unstable_minus;
  const double time_sign = unstable ? 1.0 : -1.0;
  const Vec2 d0 = initial_separatrix_direction(saddle, co, dir);

  Vec2 origin{saddle.X, saddle.Y};
  Vec2 start = origin + opt.offset * d0;
  if (start.x > kPi) {
    origin.x -= 2.0 * kPi;
  } else if (start.x < -kPi) {
    origin.x += 2.0 * kPi;
  }
  start = origin + opt.offset * d0;

  const auto crit = detail::critical_points_with_images(find_critical_points(co));
  const double Y_cap = std::min(opt.Ymax, kHyperbolicLimit - 1.0);

  SeparatrixBranch out;
  out.direction = dir;
  out.H_level = Hs;
  out.points.push_back(origin);

  auto level_tol_at = [&](Vec2 q) {
    const double terms = std::abs(co.Ak * std::sinh(q.y)) + 0.5 * std::abs(co.omega) * q.y * q.y + std::abs(co.f * q.y);
    return std::max(opt.level_tol * (1.0 + std::abs(Hs)), 16.0 * std::numeric_limits<double>::epsilon() * terms);
  };
  auto correct = [&](Vec2 q) -> std::optional<Vec2> {
    for (int it = 0; it < 60; ++it) {
      if (q.y > kHyperbolicLimit - 1.0) return std::nullopt;
      const double r = hamiltonian(q.x, q.y, co) - Hs;
      if (std::abs(r) <= level_tol_at(q)) return q;
      const Vec2 g = hamiltonian_gradient(q.x, q.y, co);
      const double g2 = dot(g, g);
      if (!(g2 > 0.0)) return std::nullopt;
      q = q - (r / g2) * g;
    }
    return std::nullopt;
  };
  auto tangent = [&](Vec2 q) {
    const Vec2 v = steady_rhs(q.x, q.y, co);
    const double n = norm(v);
    return n > 0.0 ? (time_sign / n) * v : Vec2{};
  };
  auto fail = [&](const std::string& why) { throw TracingError(why, out); };

  std::optional<Vec2> first = correct(start);
  if (!first) fail("corrector failed at the starting offset");
  Vec2 p = *first;
  out.points.push_back(p);

  bool left_origin = false;
  double ds = std::max(opt.offset, 10.0 * opt.min_step);
  while (true) {
    if (out.points.size() >= opt.max_points) fail("point budget exhausted");

    // Nearest critical point (the starting saddle only once we have left it).
    double nearest = std::numeric_limits<double>::infinity();
    int nearest_index = -1;
    for (std::size_t i = 0; i < crit.size(); ++i) {
      const double dist = norm(p - crit[i]);
      const bool is_origin = norm(crit[i] - origin) < 1e-12;
      if (is_origin && !left_origin) continue;
      if (dist < nearest) {
        nearest = dist;
        nearest_index = static_cast<int>(i / 3);
      }
    }
    if (norm(p - origin) > 100.0 * opt.stop_distance) left_origin = true;
    if (nearest < opt.stop_distance) {
      out.end = TraceEnd::critical_point;
      out.end_point = nearest_index;
      return out;
    }

    const double step_cap = std::min(opt.max_step, 0.25 * nearest);
    ds = std::min(ds, step_cap);
    if (ds < opt.min_step) fail("step size underflow");

    const Vec2 t0 = tangent(p);
    if (norm(t0) == 0.0) fail("vanishing vector field off a critical point");
    const Vec2 half = p + (0.5 * ds) * t0;
    const Vec2 t_half = tangent(half);
    const Vec2 guess = p + ds * (norm(t_half) > 0.0 ? t_half : t0);
    std::optional<Vec2> q = correct(guess);
    if (!q || norm(*q - p) > 2.0 * ds || dot(tangent(*q), t0) < 0.95) {
      ds *= 0.5;
      continue;
    }

    // Leaving the strip: clip to the boundary and pin the end point on the level set.
    const Vec2 a = p;
    const Vec2 b = *q;
    if (b.x > kPi || b.x < -kPi) {
      const double Xb = b.x > kPi ? kPi : -kPi;
      const double s = (Xb - a.x) / (b.x - a.x);
      Vec2 e = a + s * (b - a);
      e.x = Xb;
      for (int it = 0; it < 30; ++it) {
        const double r = hamiltonian(e.x, e.y, co) - Hs;
        const double dHdY = hamiltonian_gradient(e.x, e.y, co).y;
        if (std::abs(r) <= level_tol_at(e) || dHdY == 0.0) break;
        e.y -= r / dHdY;
      }
      out.points.push_back(e);
      out.end = TraceEnd::strip_boundary;
      return out;
    }
    if (b.y < 0.0) {
      const double s = a.y / (a.y - b.y);
      Vec2 e = a + s * (b - a);
      e.y = 0.0;
      out.points.push_back(e);
      out.end = TraceEnd::bed;
      return out;
    }
    if (b.y > Y_cap) {
      const double s = (Y_cap - a.y) / (b.y - a.y);
      Vec2 e = a + s * (b - a);
      e.y = Y_cap;
      for (int it = 0; it < 30; ++it) {
        const double r = hamiltonian(e.x, e.y, co) - Hs;
        const double dHdX = hamiltonian_gradient(e.x, e.y, co).x;
        if (std::abs(r) <= level_tol_at(e) || dHdX == 0.0) break;
        e.x -= r / dHdX;
      }
      out.points.push_back(e);
      out.end = TraceEnd::top;
      return out;
    }

    p = b;
    out.points.push_back(p);
    ds = std::min(1.5 * ds, opt.max_step);
  }
}

// ---------------------------------------------------------------------------
// Portrait assembly

enum class Monotonicity { increasing, decreasing, mixed };

inline std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::increasing: return "increasing";
    case Monotonicity::decreasing: return "decreasing";
    case Monotonicity::mixed: return "mixed";
  }
  return "?";
}

/// One contiguous piece of the infinity-isocline. Labels: "gamma" (single
/// branch, omega >= 0), "Y1" (lower) and "Y2" (upper) for omega < 0.
/// Monotonicity is judged on the X >= 0 part when there is one.
struct IsoclineBranch {
  std::string label;
  std::vector<Vec2> samples;
  Monotonicity monotonicity = Monotonicity::mixed;
};

/// The two separatrix branches leaving a saddle on the same side (below or
/// above it); together they form one curve through the saddle.
struct Separatrix {
  std::size_t saddle_index = 0;
  std::string label;  // "lower" or "upper"
  double H_level = 0.0;
  std::array<SeparatrixBranch, 2> branches;
};

struct PhasePortrait {
  Regime regime;
  SteadyCoeffs coeffs;  // normalized
  CrestPosition crest_shift = CrestPosition::at_zero;
  std::vector<CriticalPoint> critical_points;
  std::vector<IsoclineBranch> isoclines;
  std::vector<Separatrix> separatrices;
  double X_min = -kPi;
  double X_max = kPi;
  double Ymax = 0.0;
};

struct PortraitOptions {
  double Ymax = 0.0;          // <= 0 selects an automatic height
  std::size_t resolution = 401;
  TraceOptions trace;
};

namespace detail {

inline Monotonicity judge_monotonicity(const std::vector<Vec2>& samples) {
  std::vector<Vec2> part;
  for (const auto& s : samples) {
    if (s.x >= 0.0) part.push_back(s);
  }
  if (part.size() < 2) part = samples;
  bool inc = true;
  bool dec = true;
  for (std::size_t i = 1; i < part.size(); ++i) {
    if (part[i].y < part[i - 1].y) inc = false;
    if (part[i].y > part[i - 1].y) dec = false;
  }
  if (inc && !dec) return Monotonicity::increasing;
  if (dec && !inc) return Monotonicity::decreasing;
  return Monotonicity::mixed;
}

inline std::vector<IsoclineBranch> sample_isoclines(const SteadyCoeffs& co, double Ymax, std::size_t resolution) {
  std::vector<IsoclineBranch> done;
  const bool two_labels = co.omega < 0.0;
  const std::array<std::string, 2> names = two_labels ? std::array<std::string, 2>{"Y1", "Y2"}
                                                      : std::array<std::string, 2>{"gamma", "gamma_upper"};
  std::array<std::optional<IsoclineBranch>, 2> open;
  auto close = [&](int slot) {
    if (open[slot] && !open[slot]->samples.empty()) {
      open[slot]->monotonicity = judge_monotonicity(open[slot]->samples);
      done.push_back(std::move(*open[slot]));
    }
    open[slot].reset();
  };
  const std::size_t n = std::max<std::size_t>(resolution, 3);
  for (std::size_t i = 0; i < n; ++i) {
    const double X = -kPi + 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n - 1);
    std::vector<double> Ys;
    if (co.Ak == 0.0) {
      if (co.omega < 0.0) Ys.push_back(-co.f / co.omega);
    } else {
      Ys = infinity_isocline(X, co).Y;
    }
    std::array<std::optional<double>, 2> slot_value;
    if (Ys.size() == 1) {
      slot_value[0] = Ys[0];
    } else if (Ys.size() >= 2) {
      slot_value[0] = Ys.front();
      slot_value[1] = Ys.back();
    }
    for (int slot = 0; slot < 2; ++slot) {
      if (slot_value[slot] && *slot_value[slot] <= Ymax) {
        if (!open[slot]) open[slot] = IsoclineBranch{names[slot], {}, Monotonicity::mixed};
        open[slot]->samples.push_back({X, *slot_value[slot]});
      } else {
        close(slot);
      }
    }
  }
  close(0);
  close(1);
  return done;
}

}  // namespace detail

/// Full portrait for a right-going wave with s = 0. Coefficients with Ak < 0
/// are shifted by pi (the crest then sits at X = pi).
inline PhasePortrait build_phase_portrait(const WaveParams& p, const PortraitOptions& opt = {}) {
  PhasePortrait out;
  out.regime = classify_regime(p);
  out.crest_shift = out.regime.crest;
  out.coeffs = SteadyCoeffs::from(p).normalized();
  const SteadyCoeffs& co = out.coeffs;
  if (co.Ak >= co.f) {
    throw UnsupportedConfiguration("amplitude too large: |A|k >= f puts stagnation points on the bed");
  }
  out.critical_points = find_critical_points(co);

  double Ymax = opt.Ymax;
  if (!(Ymax > 0.0)) {
    Ymax = 1.5 * p.k() * (p.h() + p.a());
    for (const auto& cp : out.critical_points) Ymax = std::max(Ymax, 1.25 * cp.Y);
    Ymax = std::ceil(Ymax);
  }
  out.Ymax = Ymax;
  out.isoclines = detail::sample_isoclines(co, Ymax, opt.resolution);

  TraceOptions trace = opt.trace;
  trace.Ymax = Ymax;
  for (std::size_t i = 0; i < out.critical_points.size(); ++i) {
    const CriticalPoint& cp = out.critical_points[i];
    if (cp.kind != PointKind::saddle || cp.Y > Ymax) continue;
    Separatrix lower{i, "lower", cp.H_value, {}};
    Separatrix upper{i, "upper", cp.H_value, {}};
    int n_lower = 0;
    int n_upper = 0;
    for (SeparatrixDirection dir : kAllDirections) {
      const Vec2 d0 = initial_separatrix_direction(cp, co, dir);
      SeparatrixBranch branch = trace_separatrix(cp, co, dir, trace);
      if (d0.y < 0.0 && n_lower < 2) {
        lower.branches[n_lower++] = std::move(branch);
      } else if (n_upper < 2) {
        upper.branches[n_upper++] = std::move(branch);
      }
    }
    out.separatrices.push_back(std::move(lower));
    out.separatrices.push_back(std::move(upper));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bifurcation scan in omega

struct BifurcationRow {
  double omega = 0.0;
  double c = 0.0;
  bool skipped = false;  // left-going wave on this branch, no portrait
  std::size_t count = 0;
  std::vector<PointKind> kinds;
  double discriminant = std::numeric_limits<double>::quiet_NaN();  // at alpha = |A|k, omega < 0 only
};

struct BifurcationScan {
  std::vector<BifurcationRow> rows;
  bool transition_found = false;
  double omega_lo = 0.0;  // bracket end on the one-point side
  double omega_hi = 0.0;  // bracket end on the three-point side
  double omega_star = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {

inline double discriminant_at(const WaveInputs& tmpl, double omega) {
  WaveInputs in = tmpl;
  in.omega = omega;
  const WaveParams p = WaveParams::solve(in);
  return branching_discriminant(std::abs(p.A()) * p.k(), omega, p.f());
}

}  // namespace detail

/// Counts critical points per strip for omega on an even grid from omega_from
/// to omega_to (c re-solved on tmpl.branch each time) and locates the first
/// 1 -> 3 transition by bisection on the branching discriminant.
inline BifurcationScan bifurcation_scan(const WaveInputs& tmpl, double omega_from, double omega_to, std::size_t steps) {
  if (steps < 2) throw DomainError("bifurcation_scan: need at least two samples");
  BifurcationScan out;
  for (std::size_t i = 0; i < steps; ++i) {
    BifurcationRow row;
    row.omega = omega_from + (omega_to - omega_from) * static_cast<double>(i) / static_cast<double>(steps - 1);
    WaveInputs in = tmpl;
    in.omega = row.omega;
    const WaveParams p = WaveParams::solve(in);
    row.c = p.c();
    if (!(p.c() > 0.0)) {
      row.skipped = true;
      out.rows.push_back(row);
      continue;
    }
    const SteadyCoeffs co = SteadyCoeffs::from(p).normalized();
    for (const auto& cp : find_critical_points(co)) row.kinds.push_back(cp.kind);
    row.count = row.kinds.size();
    if (row.omega < 0.0 && co.Ak > 0.0) row.discriminant = branching_discriminant(co.Ak, row.omega, co.f);
    out.rows.push_back(row);
  }

  for (std::size_t i = 0; i + 1 < out.rows.size(); ++i) {
    const auto& a = out.rows[i];
    const auto& b = out.rows[i + 1];
    if (a.skipped || b.skipped || a.count > 1 || b.count < 2) continue;
    if (!(std::min(a.omega, b.omega) < 0.0)) continue;
    double lo = a.omega;  // discriminant < 0 side
    double hi = b.omega;
    const double g_hi = detail::discriminant_at(tmpl, hi);
    if (!(detail::discriminant_at(tmpl, lo) <= 0.0 && g_hi >= 0.0)) continue;
    for (int it = 0; it < 200 && std::abs(hi - lo) > 1e-13 * std::max(1.0, std::abs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      if (detail::discriminant_at(tmpl, mid) > 0.0) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out.transition_found = true;
    out.omega_lo = lo;
    out.omega_hi = hi;
    out.omega_star = 0.5 * (lo + hi);
    break;
  }
  return out;
}

}  // namespace vortwave
