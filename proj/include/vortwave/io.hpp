#pragma once

// Parameter files, CSV/JSON/SVG emission. All floating-point text uses 17
// significant digits so that repeated runs are byte-identical.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vortwave/errors.hpp"
#include "vortwave/field_eval.hpp"
#include "vortwave/particle_paths.hpp"
#include "vortwave/phase_portrait.hpp"
#include "vortwave/wave_core.hpp"

namespace vortwave {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// JSON number, or null for non-finite values.
inline nlohmann::json jnum(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

// ---------------------------------------------------------------------------
// Parameters

namespace detail {

inline std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

inline double parse_number(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("parameter '" + key + "': '" + text + "' is not a number");
  }
  if (used != text.size()) throw DomainError("parameter '" + key + "': trailing text in '" + text + "'");
  return v;
}

// Derived quantities are recomputed; if a file carries them they are ignored.
inline bool is_derived_key(const std::string& key) { return key == "c" || key == "f" || key == "A" || key == "lambda"; }

inline void assign_input(WaveInputs& in, const std::string& key, const std::string& value) {
  if (key == "g") in.g = parse_number(key, value);
  else if (key == "h") in.h = parse_number(key, value);
  else if (key == "a") in.a = parse_number(key, value);
  else if (key == "k") in.k = parse_number(key, value);
  else if (key == "omega") in.omega = parse_number(key, value);
  else if (key == "s") in.s = parse_number(key, value);
  else if (key == "P0") in.P0 = parse_number(key, value);
  else if (key == "branch") in.branch = parse_branch(value);
  else if (!is_derived_key(key)) throw DomainError("unknown parameter key '" + key + "'");
}

}  // namespace detail

/// `key = value` lines with `#` comments. Keys: g h a k omega s branch P0.
inline WaveInputs parse_params_kv(std::istream& is) {
  WaveInputs in;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw DomainError("line " + std::to_string(lineno) + ": expected key = value");
    detail::assign_input(in, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
  }
  return in;
}

inline WaveInputs parse_params_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("parameter JSON must be an object");
  WaveInputs in;
  for (const auto& [key, value] : j.items()) {
    if (value.is_string()) {
      detail::assign_input(in, key, value.get<std::string>());
    } else if (value.is_number()) {
      detail::assign_input(in, key, fmt(value.get<double>()));
    } else {
      throw DomainError("parameter '" + key + "' must be a number or string");
    }
  }
  return in;
}

/// Reads a parameter file; JSON when the first non-blank character is '{'.
inline WaveInputs load_params(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open parameter file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw DomainError(std::string("parameter JSON: ") + e.what());
    }
    return parse_params_json(j);
  }
  std::istringstream is(text);
  return parse_params_kv(is);
}

inline std::string params_to_kv(const WaveInputs& in) {
  std::ostringstream os;
  os << "g = " << fmt(in.g) << "\nh = " << fmt(in.h) << "\na = " << fmt(in.a) << "\nk = " << fmt(in.k)
     << "\nomega = " << fmt(in.omega) << "\ns = " << fmt(in.s) << "\nbranch = " << to_string(in.branch)
     << "\nP0 = " << fmt(in.P0) << "\n";
  return os.str();
}

inline nlohmann::json inputs_to_json(const WaveInputs& in) {
  return {{"g", in.g}, {"h", in.h}, {"a", in.a}, {"k", in.k}, {"omega", in.omega},
          {"s", in.s}, {"branch", std::string(to_string(in.branch))}, {"P0", in.P0}};
}

inline nlohmann::json regime_to_json(const Regime& r) {
  return {{"vorticity_sign", std::string(to_string(r.vorticity_sign))},
          {"crest", std::string(to_string(r.crest))},
          {"supercritical", r.supercritical},
          {"branching_positive", r.branching_positive},
          {"branching_value", jnum(r.branching_value)}};
}

/// Parameters with recomputed c, f, A and warnings.
inline nlohmann::json params_to_json(const WaveParams& p) {
  nlohmann::json j = inputs_to_json(p.inputs());
  j["c"] = p.c();
  j["f"] = p.f();
  j["A"] = p.A();
  j["lambda"] = p.lambda();
  j["residual"] = dispersion_residual(p);
  j["warnings"] = p.warnings();
  return j;
}

// ---------------------------------------------------------------------------
// Field grid

/// `x,y,t,u,v,P,eta_flag` over nx * ny points covering one wavelength and the
/// column [0, h + a]; eta_flag is 1 inside the fluid, 0 above the surface.
inline void write_field_grid_csv(std::ostream& os, const WaveParams& p, double t, std::size_t nx, std::size_t ny) {
  os << "x,y,t,u,v,P,eta_flag\n";
  const double top = p.h() + p.a();
  for (std::size_t j = 0; j < ny; ++j) {
    const double y = ny > 1 ? top * static_cast<double>(j) / static_cast<double>(ny - 1) : 0.0;
    for (std::size_t i = 0; i < nx; ++i) {
      const double x = nx > 1 ? p.lambda() * static_cast<double>(i) / static_cast<double>(nx - 1) : 0.0;
      const FieldSample s = sample_field(t, x, y, p);
      os << fmt(x) << ',' << fmt(y) << ',' << fmt(t) << ',' << fmt(s.u) << ',' << fmt(s.v) << ',' << fmt(s.P)
         << ',' << (s.inside ? 1 : 0) << '\n';
    }
  }
}

// ---------------------------------------------------------------------------
// Portrait

inline std::string separatrix_label(const Separatrix& s, std::size_t which) {
  return "sep_P" + std::to_string(s.saddle_index) + "_" + s.label + "_" + std::string(to_string(s.branches[which].direction));
}

/// `branch_label,X,Y`: isocline pieces (labelled by branch and piece index)
/// followed by separatrix branches.
inline void write_polylines_csv(std::ostream& os, const PhasePortrait& pp) {
  os << "branch_label,X,Y\n";
  for (std::size_t i = 0; i < pp.isoclines.size(); ++i) {
    const auto& b = pp.isoclines[i];
    const std::string label = "isocline_" + b.label + "_" + std::to_string(i);
    for (const auto& s : b.samples) os << label << ',' << fmt(s.x) << ',' << fmt(s.y) << '\n';
  }
  for (const auto& sep : pp.separatrices) {
    for (std::size_t w = 0; w < 2; ++w) {
      const std::string label = separatrix_label(sep, w);
      for (const auto& q : sep.branches[w].points) os << label << ',' << fmt(q.x) << ',' << fmt(q.y) << '\n';
    }
  }
}

inline nlohmann::json portrait_to_json(const PhasePortrait& pp, const WaveParams& p) {
  nlohmann::json j;
  j["params"] = params_to_json(p);
  j["regime"] = regime_to_json(pp.regime);
  j["coeffs"] = {{"Ak", pp.coeffs.Ak}, {"omega", pp.coeffs.omega}, {"f", pp.coeffs.f}, {"k", pp.coeffs.k},
                 {"phase_shift", pp.coeffs.phase_shift}};
  j["domain"] = {{"X_min", pp.X_min}, {"X_max", pp.X_max}, {"Y_min", 0.0}, {"Y_max", pp.Ymax}};
  nlohmann::json cps = nlohmann::json::array();
  std::size_t saddles = 0;
  for (const auto& cp : pp.critical_points) {
    if (cp.kind == PointKind::saddle) ++saddles;
    cps.push_back({{"X", cp.X},
                   {"Y", cp.Y},
                   {"kind", std::string(to_string(cp.kind))},
                   {"hessian_eigs", {cp.hessian_eigs[0], cp.hessian_eigs[1]}},
                   {"H", cp.H_value}});
  }
  j["critical_points"] = cps;
  nlohmann::json iso = nlohmann::json::array();
  for (const auto& b : pp.isoclines) {
    iso.push_back({{"label", b.label},
                   {"samples", b.samples.size()},
                   {"monotonicity", std::string(to_string(b.monotonicity))},
                   {"X_from", b.samples.front().x},
                   {"X_to", b.samples.back().x}});
  }
  j["isoclines"] = iso;
  nlohmann::json seps = nlohmann::json::array();
  for (const auto& s : pp.separatrices) {
    nlohmann::json br = nlohmann::json::array();
    for (const auto& b : s.branches) {
      br.push_back({{"direction", std::string(to_string(b.direction))},
                    {"points", b.points.size()},
                    {"end", std::string(to_string(b.end))},
                    {"end_point", b.end_point},
                    {"end_X", b.points.back().x},
                    {"end_Y", b.points.back().y}});
    }
    seps.push_back({{"saddle", s.saddle_index}, {"label", s.label}, {"H_level", s.H_level}, {"branches", br}});
  }
  j["separatrices"] = seps;
  j["summary"] = {{"critical_points", pp.critical_points.size()},
                  {"saddles", saddles},
                  {"separatrices", pp.separatrices.size()}};
  return j;
}

/// SVG style table (fixed for reproducible figures):
///   isocline    stroke #1f77b4, width 0.02, dash 0.08 0.05
///   separatrix  stroke #d62728, width 0.025, solid
///   saddle      marker: square, fill #000000, side 0.1
///   center      marker: circle, fill #2ca02c, radius 0.06
///   degenerate  marker: circle, fill #ff7f0e, radius 0.06
///   frame       stroke #7f7f7f, width 0.01
/// The viewBox is [-pi, pi] x [0, Ymax] with Y pointing up.
inline void write_portrait_svg(std::ostream& os, const PhasePortrait& pp) {
  const double w = pp.X_max - pp.X_min;
  const double H = pp.Ymax;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(pp.X_min) << ' ' << fmt(-H) << ' ' << fmt(w)
     << ' ' << fmt(H) << "\" preserveAspectRatio=\"none\" width=\"800\" height=\"600\">\n";
  os << "<g transform=\"scale(1,-1)\">\n";
  os << "<rect x=\"" << fmt(pp.X_min) << "\" y=\"0\" width=\"" << fmt(w) << "\" height=\"" << fmt(H)
     << "\" fill=\"none\" stroke=\"#7f7f7f\" stroke-width=\"0.01\"/>\n";
  auto polyline = [&](const std::vector<Vec2>& pts, const char* style) {
    os << "<polyline fill=\"none\" " << style << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << fmt(pts[i].x) << ',' << fmt(pts[i].y);
    os << "\"/>\n";
  };
  for (const auto& b : pp.isoclines) {
    polyline(b.samples, "stroke=\"#1f77b4\" stroke-width=\"0.02\" stroke-dasharray=\"0.08 0.05\"");
  }
  for (const auto& s : pp.separatrices) {
    for (const auto& b : s.branches) polyline(b.points, "stroke=\"#d62728\" stroke-width=\"0.025\"");
  }
  for (const auto& cp : pp.critical_points) {
    if (cp.Y > H) continue;
    for (double X : {cp.X, cp.X - 2.0 * kPi}) {
      if (X < pp.X_min - 1e-12 || X > pp.X_max + 1e-12) continue;
      if (cp.kind == PointKind::saddle) {
        os << "<rect x=\"" << fmt(X - 0.05) << "\" y=\"" << fmt(cp.Y - 0.05)
           << "\" width=\"0.1\" height=\"0.1\" fill=\"#000000\"/>\n";
      } else {
        os << "<circle cx=\"" << fmt(X) << "\" cy=\"" << fmt(cp.Y) << "\" r=\"0.06\" fill=\""
           << (cp.kind == PointKind::center ? "#2ca02c" : "#ff7f0e") << "\"/>\n";
      }
    }
  }
  os << "</g>\n</svg>\n";
}

// ---------------------------------------------------------------------------
// Trajectories, drift, bifurcation

inline void write_trajectory_csv(std::ostream& os, const Trajectory& tr) {
  os << "t,X,Y,x,y,H\n";
  for (std::size_t i = 0; i < tr.times.size(); ++i) {
    os << fmt(tr.times[i]) << ',' << fmt(tr.steady[i].x) << ',' << fmt(tr.steady[i].y) << ','
       << fmt(tr.physical[i].x) << ',' << fmt(tr.physical[i].y) << ',' << fmt(tr.H[i]) << '\n';
  }
}

inline void write_drift_csv(std::ostream& os, const std::vector<DriftReport>& rows, double k) {
  os << "Y0,y0_m,tau,drift_m,direction,layer\n";
  for (const auto& r : rows) {
    os << fmt(r.Y0) << ',' << fmt(r.Y0 / k) << ',' << fmt(r.tau) << ',' << fmt(r.drift) << ','
       << to_string(r.direction) << ',' << to_string(r.layer) << '\n';
  }
}

inline void write_bifurcation_csv(std::ostream& os, const BifurcationScan& scan) {
  os << "omega,c,count,kinds,discriminant\n";
  for (const auto& r : scan.rows) {
    std::string kinds;
    for (std::size_t i = 0; i < r.kinds.size(); ++i) kinds += (i ? ";" : "") + std::string(to_string(r.kinds[i]));
    if (r.skipped) kinds = "skipped";
    os << fmt(r.omega) << ',' << fmt(r.c) << ',' << r.count << ',' << kinds << ',' << fmt(r.discriminant) << '\n';
  }
}

/// One `X0 Y0` pair per line; `#` starts a comment.
inline std::vector<Vec2> parse_seeds(std::istream& is) {
  std::vector<Vec2> out;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (detail::trim(line).empty()) continue;
    std::istringstream ls(line);
    double X = 0.0, Y = 0.0;
    std::string rest;
    if (!(ls >> X >> Y) || (ls >> rest)) {
      throw DomainError("seeds line " + std::to_string(lineno) + ": expected 'X0 Y0'");
    }
    out.push_back({X, Y});
  }
  return out;
}

}  // namespace vortwave
