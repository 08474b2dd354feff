#pragma once

// Command-line front end. run_cli is the whole program; main() only forwards
// argv and the standard streams, so tests can drive every command in-process.
//
// Exit codes: 0 ok, 2 bad input, 3 I/O, 4 numerical failure (or a validate
// tolerance exceeded).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vortwave/errors.hpp"
#include "vortwave/field_eval.hpp"
#include "vortwave/io.hpp"
#include "vortwave/particle_paths.hpp"
#include "vortwave/phase_portrait.hpp"
#include "vortwave/presets.hpp"
#include "vortwave/wave_core.hpp"

namespace vortwave {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitNumerical = 4;

namespace cli {

struct Globals {
  std::string out_dir = "out";
  std::string formats = "csv,json";
  bool quiet = false;
  std::string preset;
  std::string params_file;
  std::optional<double> g, h, a, k, omega, s, P0;
  std::optional<std::string> branch;
};

struct Context {
  Globals globals;
  std::ostream& out;
  std::ostream& err;
  std::optional<Preset> preset;
  WaveInputs inputs;
  std::string scenario = "custom";
  std::set<std::string> formats;

  bool wants(const std::string& f) const { return formats.count(f) > 0; }
};

inline std::set<std::string> parse_formats(const std::string& text) {
  std::set<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = detail::trim(item);
    if (item.empty()) continue;
    if (item != "csv" && item != "json" && item != "svg") {
      throw DomainError("unknown output format '" + item + "' (csv, json, svg)");
    }
    out.insert(item);
  }
  return out;
}

inline void resolve(Context& ctx) {
  const Globals& gl = ctx.globals;
  ctx.formats = parse_formats(gl.formats);
  if (!gl.preset.empty()) {
    ctx.preset = find_preset(gl.preset);
    ctx.inputs = ctx.preset->inputs;
    ctx.scenario = ctx.preset->name;
  }
  if (!gl.params_file.empty()) {
    ctx.inputs = load_params(gl.params_file);
    if (!ctx.preset) ctx.scenario = std::filesystem::path(gl.params_file).stem().string();
  }
  if (gl.g) ctx.inputs.g = *gl.g;
  if (gl.h) ctx.inputs.h = *gl.h;
  if (gl.a) ctx.inputs.a = *gl.a;
  if (gl.k) ctx.inputs.k = *gl.k;
  if (gl.omega) ctx.inputs.omega = *gl.omega;
  if (gl.s) ctx.inputs.s = *gl.s;
  if (gl.P0) ctx.inputs.P0 = *gl.P0;
  if (gl.branch) ctx.inputs.branch = parse_branch(*gl.branch);
}

inline std::filesystem::path scenario_dir(const Context& ctx) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::path(ctx.globals.out_dir) / ctx.scenario;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory '" + dir.string() + "'");
  return dir;
}

inline void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  body(f);
  f.flush();
  if (!f) throw IoError("write to '" + path.string() + "' failed");
}

inline void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  write_file(path, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

inline void say(const Context& ctx, const std::string& text) {
  if (!ctx.globals.quiet) ctx.out << text << '\n';
}

// ---------------------------------------------------------------------------
// Commands

inline int cmd_dispersion(Context& ctx) {
  const WaveParams p = WaveParams::solve(ctx.inputs);
  nlohmann::json j;
  j["c"] = p.c();
  j["f"] = p.f();
  j["A"] = p.A();
  j["residual"] = dispersion_residual(p);
  j["branch"] = std::string(to_string(p.branch()));
  if (p.c() > 0.0 && p.s() == 0.0) {
    j["regime"] = regime_to_json(classify_regime(p));
  } else {
    j["regime"] = nullptr;
    j["regime_note"] = "regime analysis needs c > 0 and s = 0";
  }
  j["warnings"] = p.warnings();
  ctx.out << j.dump(2) << '\n';
  return kExitOk;
}

struct PortraitFlags {
  double ymax = 0.0;
  std::size_t resolution = 401;
};

inline int cmd_portrait(Context& ctx, const PortraitFlags& fl) {
  const WaveParams p = WaveParams::solve(ctx.inputs);
  PortraitOptions opt;
  opt.Ymax = fl.ymax > 0.0 ? fl.ymax : (ctx.preset ? ctx.preset->Ymax : 0.0);
  opt.resolution = fl.resolution;
  const PhasePortrait pp = build_phase_portrait(p, opt);
  const nlohmann::json j = portrait_to_json(pp, p);
  const auto dir = scenario_dir(ctx);
  if (ctx.wants("json")) write_json(dir / "portrait.json", j);
  if (ctx.wants("csv")) {
    write_file(dir / "portrait_polylines.csv", [&](std::ostream& os) { write_polylines_csv(os, pp); });
    write_file(dir / "field_grid.csv", [&](std::ostream& os) { write_field_grid_csv(os, p, 0.0, 33, 17); });
  }
  if (ctx.wants("svg")) write_file(dir / "portrait.svg", [&](std::ostream& os) { write_portrait_svg(os, pp); });
  nlohmann::json summary = j["summary"];
  nlohmann::json kinds = nlohmann::json::array();
  for (const auto& cp : pp.critical_points) kinds.push_back(std::string(to_string(cp.kind)));
  summary["kinds"] = kinds;
  summary["scenario"] = ctx.scenario;
  say(ctx, summary.dump());
  return kExitOk;
}

struct PathsFlags {
  std::string seeds_file;
  double periods = 0.0;
  std::string scheme = "adaptive";
  double rtol = 0.0;
  double atol = 0.0;
  double dt = 0.0;
};

inline int cmd_paths(Context& ctx, const PathsFlags& fl) {
  const WaveParams p = WaveParams::solve(ctx.inputs);
  const SteadyCoeffs co = SteadyCoeffs::from(p).normalized();
  std::vector<Vec2> seeds;
  if (!fl.seeds_file.empty()) {
    std::ifstream f(fl.seeds_file);
    if (!f) throw IoError("cannot open seeds file '" + fl.seeds_file + "'");
    seeds = parse_seeds(f);
  } else if (ctx.preset && !ctx.preset->seeds.empty()) {
    for (const auto& [X, Y] : ctx.preset->seeds) seeds.push_back({X, Y});
  } else {
    seeds = {{kPi, 0.0}, {kPi, 0.5 * p.k() * p.h()}};
  }
  if (seeds.empty()) throw DomainError("paths: no seeds");
  IntegrateOptions opt;
  if (fl.scheme == "implicit_midpoint") {
    opt.scheme = Scheme::implicit_midpoint;
  } else if (fl.scheme != "adaptive") {
    throw DomainError("unknown scheme '" + fl.scheme + "' (adaptive, implicit_midpoint)");
  }
  if (fl.rtol > 0.0) opt.rtol = fl.rtol;
  if (fl.atol > 0.0) opt.atol = fl.atol;
  if (fl.dt > 0.0) opt.dt = fl.dt;
  const double periods = fl.periods > 0.0 ? fl.periods : (ctx.preset ? ctx.preset->periods : 5.0);
  const double t_end = periods * 2.0 * kPi / co.f;
  const auto dir = scenario_dir(ctx);
  nlohmann::json runs = nlohmann::json::array();
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const Trajectory tr = integrate_steady(seeds[i].x, seeds[i].y, co, t_end, opt);
    if (ctx.wants("csv")) {
      write_file(dir / ("paths_trajectory_" + std::to_string(i) + ".csv"),
                 [&](std::ostream& os) { write_trajectory_csv(os, tr); });
    }
    const double H0 = tr.H.front();
    runs.push_back({{"X0", seeds[i].x},
                    {"Y0", seeds[i].y},
                    {"layer", std::string(to_string(tr.layer))},
                    {"samples", tr.times.size()},
                    {"t_end", tr.times.back()},
                    {"truncated", tr.truncated},
                    {"H0", H0},
                    {"H_drift_rel", tr.max_hamiltonian_drift() / std::max(std::abs(H0), 1.0)},
                    {"x_end", tr.physical.back().x},
                    {"y_end", tr.physical.back().y}});
  }
  nlohmann::json j{{"params", params_to_json(p)},
                   {"scheme", std::string(to_string(opt.scheme))},
                   {"periods", periods},
                   {"trajectories", runs}};
  if (ctx.wants("json")) write_json(dir / "paths.json", j);
  say(ctx, nlohmann::json{{"scenario", ctx.scenario}, {"trajectories", runs.size()}}.dump());
  return kExitOk;
}

struct DriftFlags {
  std::size_t levels = 0;
  double Y_lo = -1.0;
  double Y_hi = -1.0;
  bool geometric = false;
  double closed_lo = -1.0;
  double closed_hi = -1.0;
};

/// Steady heights at X = pi for the drift profile.
inline std::vector<double> drift_levels(const Context& ctx, const DriftFlags& fl, const SteadyCoeffs& co) {
  const Preset* pr = ctx.preset ? &*ctx.preset : nullptr;
  std::size_t n = fl.levels ? fl.levels : (pr && pr->drift_levels ? pr->drift_levels : 41);
  double lo = fl.Y_lo >= 0.0 ? fl.Y_lo : (pr ? pr->drift_Y_lo : 0.0);
  double hi = fl.Y_hi >= 0.0 ? fl.Y_hi : (pr ? pr->drift_Y_hi : 0.0);
  const bool geometric = fl.geometric || (pr && pr->drift_geometric);
  if (!fl.geometric && fl.Y_hi < 0.0 && pr && pr->drift_stratified) {
    std::vector<double> edges{lo};
    for (double b : layer_boundaries(co)) {
      if (b > lo) edges.push_back(b);
    }
    if (edges.size() >= 2) {
      const std::size_t m = edges.size() - 1;
      std::vector<double> Ys;
      for (std::size_t seg = 0; seg < m; ++seg) {
        const std::size_t cnt = n / m + (seg < n % m ? 1 : 0);
        for (std::size_t i = 0; i < cnt; ++i) {
          Ys.push_back(edges[seg] + (edges[seg + 1] - edges[seg]) * (static_cast<double>(i) + 0.5) /
                                        static_cast<double>(cnt));
        }
      }
      return Ys;
    }
  }
  bool open_interval = false;
  if (!(hi > 0.0)) {
    // Span the open interval below the highest critical point, or the fluid column.
    const auto crit = find_critical_points(co);
    hi = 0.0;
    for (const auto& cp : crit) {
      if (cp.X != 0.0) hi = std::max(hi, cp.Y);
    }
    if (hi == 0.0) hi = co.k * WaveParams::solve(ctx.inputs).h();
    open_interval = true;
  }
  if (!(hi > lo)) throw DomainError("drift: need Y_hi > Y_lo");
  if (n < 2) throw DomainError("drift: need at least two levels");
  std::vector<double> Ys;
  for (std::size_t i = 0; i < n; ++i) {
    if (geometric) {
      if (!(lo > 0.0)) throw DomainError("drift: geometric spacing needs Y_lo > 0");
      Ys.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1)));
    } else if (open_interval) {
      Ys.push_back(lo + (hi - lo) * (static_cast<double>(i) + 0.5) / static_cast<double>(n));
    } else {
      Ys.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
  }
  return Ys;
}

inline int cmd_drift(Context& ctx, const DriftFlags& fl) {
  const WaveParams p = WaveParams::solve(ctx.inputs);
  if (!(p.c() > 0.0)) throw UnsupportedConfiguration("drift: needs a right-going wave (c > 0)");
  const SteadyCoeffs co = SteadyCoeffs::from(p).normalized();
  const std::vector<double> Ys = drift_levels(ctx, fl, co);
  std::vector<DriftReport> rows;
  rows.reserve(Ys.size());
  for (double Y : Ys) rows.push_back(drift_per_period(Y, co));

  std::size_t fwd = 0, bwd = 0, closed = 0, always = 0;
  for (const auto& r : rows) {
    switch (r.direction) {
      case DriftDirection::forward: ++fwd; break;
      case DriftDirection::backward: ++bwd; break;
      case DriftDirection::closed: ++closed; break;
      case DriftDirection::always_forward: ++always; break;
    }
  }
  nlohmann::json j{{"params", params_to_json(p)},
                   {"levels", rows.size()},
                   {"counts", {{"forward", fwd}, {"backward", bwd}, {"closed", closed}, {"always_forward", always}}}};

  double clo = fl.closed_lo >= 0.0 ? fl.closed_lo : (ctx.preset ? ctx.preset->closed_Y_lo : 0.0);
  double chi = fl.closed_hi >= 0.0 ? fl.closed_hi : (ctx.preset ? ctx.preset->closed_Y_hi : 0.0);
  if (chi > clo) {
    const ClosedOrbit orb = find_closed_orbit(co, clo, chi);
    j["closed_orbit"] = {{"found", orb.found},       {"Y", jnum(orb.Y)},
                         {"y_m", jnum(orb.Y / co.k)}, {"tau", jnum(orb.tau)},
                         {"dx_m", jnum(orb.dx)},      {"dy_m", jnum(orb.dy)},
                         {"H_drift", jnum(orb.H_drift)}, {"iterations", orb.iterations},
                         {"note", orb.note}};
  }
  const auto dir = scenario_dir(ctx);
  if (ctx.wants("csv")) write_file(dir / "drift_profile.csv", [&](std::ostream& os) { write_drift_csv(os, rows, co.k); });
  if (ctx.wants("json")) write_json(dir / "drift.json", j);
  nlohmann::json summary{{"scenario", ctx.scenario}, {"counts", j["counts"]}};
  if (j.contains("closed_orbit")) summary["closed_orbit_found"] = j["closed_orbit"]["found"];
  say(ctx, summary.dump());
  return kExitOk;
}

struct BifurcationFlags {
  std::optional<double> from, to;
  std::size_t steps = 0;
};

inline int cmd_bifurcation(Context& ctx, const BifurcationFlags& fl) {
  const Preset* pr = ctx.preset ? &*ctx.preset : nullptr;
  const double from = fl.from ? *fl.from : (pr && pr->omega_steps ? pr->omega_from : 0.0);
  const double to = fl.to ? *fl.to : (pr && pr->omega_steps ? pr->omega_to : ctx.inputs.omega);
  const std::size_t steps = fl.steps ? fl.steps : (pr && pr->omega_steps ? pr->omega_steps : 121);
  const BifurcationScan scan = bifurcation_scan(ctx.inputs, from, to, steps);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : scan.rows) {
    nlohmann::json kinds = nlohmann::json::array();
    for (auto kd : r.kinds) kinds.push_back(std::string(to_string(kd)));
    rows.push_back({{"omega", r.omega}, {"c", r.c}, {"skipped", r.skipped}, {"count", r.count}, {"kinds", kinds},
                    {"discriminant", jnum(r.discriminant)}});
  }
  nlohmann::json j{{"template", inputs_to_json(ctx.inputs)},
                   {"omega_from", from},
                   {"omega_to", to},
                   {"steps", steps},
                   {"rows", rows},
                   {"transition",
                    {{"found", scan.transition_found},
                     {"omega_lo", jnum(scan.transition_found ? scan.omega_lo : NAN)},
                     {"omega_hi", jnum(scan.transition_found ? scan.omega_hi : NAN)},
                     {"omega_star", jnum(scan.omega_star)}}}};
  const auto dir = scenario_dir(ctx);
  if (ctx.wants("csv")) write_file(dir / "bifurcation.csv", [&](std::ostream& os) { write_bifurcation_csv(os, scan); });
  if (ctx.wants("json")) write_json(dir / "bifurcation.json", j);
  say(ctx, nlohmann::json{{"scenario", ctx.scenario}, {"transition", j["transition"]}}.dump());
  return kExitOk;
}

struct ValidateFlags {
  std::size_t samples = 10000;
  std::uint64_t seed = 20240601;
};

struct ValidationLine {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass() const { return value < tolerance; }
};

/// Max field-identity residuals over random space-time points.
inline std::vector<ValidationLine> validate_fields(const WaveParams& p, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  double div = 0, curl = 0, bed = 0, kin = 0, dyn = 0;
  const double T = 2.0 * kPi / std::abs(p.f());
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = T * U(rng);
    const double x = p.lambda() * U(rng);
    const double y = p.h() * U(rng);
    const IdentityResiduals r = field_identity_residuals(t, x, y, p);
    div = std::max(div, std::abs(r.div));
    curl = std::max(curl, std::abs(r.curl_defect));
    bed = std::max(bed, std::abs(r.bed_v));
    kin = std::max(kin, std::abs(r.kinematic_defect));
    dyn = std::max(dyn, std::abs(r.dynamic_defect));
  }
  const double dyn_tol = p.a() > 0.0 ? 1e-9 * p.g() * p.a() : 1e-12 * p.g() * p.h();
  return {{"divergence", div, 1e-10},
          {"curl_defect", curl, 1e-10},
          {"bed_velocity", bed, 1e-10},
          {"kinematic_defect", kin, 1e-10},
          {"dynamic_defect", dyn, dyn_tol},
          {"dispersion_residual", dispersion_residual(p), 1e-10}};
}

inline int cmd_validate(Context& ctx, const ValidateFlags& fl) {
  const WaveParams p = WaveParams::solve(ctx.inputs);
  const auto lines = validate_fields(p, fl.samples, fl.seed);
  bool ok = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& l : lines) {
    ok = ok && l.pass();
    if (!ctx.globals.quiet) {
      ctx.out << l.name << " max=" << fmt(l.value) << " tol=" << fmt(l.tolerance) << ' '
              << (l.pass() ? "PASS" : "FAIL") << '\n';
    }
    arr.push_back({{"name", l.name}, {"max", l.value}, {"tolerance", l.tolerance}, {"pass", l.pass()}});
  }
  if (ctx.wants("json")) {
    const auto dir = scenario_dir(ctx);
    write_json(dir / "validate.json",
               {{"params", params_to_json(p)}, {"samples", fl.samples}, {"seed", fl.seed}, {"checks", arr}, {"pass", ok}});
  }
  if (!ok) ctx.err << "validate: tolerance exceeded\n";
  return ok ? kExitOk : kExitNumerical;
}

}  // namespace cli

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  cli::Globals gl;
  CLI::App app{"Linear water waves on a constant-vorticity current: dispersion, phase portraits, particle drift",
               "vortwave"};
  app.set_help_flag("--help", "print help and exit");  // -h would shadow --h
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", gl.out_dir, "output root directory");
  app.add_option("--format", gl.formats, "comma list of csv,json,svg");
  app.add_flag("--quiet", gl.quiet, "suppress the stdout summary");
  app.add_option("--preset", gl.preset, "fig1 | fig2 | fig3 | fig4-left | fig4-right");
  app.add_option("--params", gl.params_file, "scenario file (key = value or JSON)");
  app.add_option("--g", gl.g, "gravity, m/s^2");
  app.add_option("--h", gl.h, "mean depth, m");
  app.add_option("--a", gl.a, "amplitude, m");
  app.add_option("--k", gl.k, "wavenumber, rad/m");
  app.add_option("--omega", gl.omega, "vorticity, 1/s");
  app.add_option("--s", gl.s, "bed shear offset in units of sqrt(gh)");
  app.add_option("--P0", gl.P0, "surface pressure per unit density");
  app.add_option("--branch", gl.branch, "plus | minus");

  auto* disp = app.add_subcommand("dispersion", "wave speed, A, regime and residual as JSON");
  cli::PortraitFlags pf;
  auto* portrait = app.add_subcommand("portrait", "critical points, isoclines and separatrices");
  portrait->add_option("--ymax", pf.ymax, "portrait height in Y (0 = automatic)");
  portrait->add_option("--resolution", pf.resolution, "isocline samples across the strip");
  cli::PathsFlags tf;
  auto* paths = app.add_subcommand("paths", "integrate particle trajectories");
  paths->add_option("--seeds", tf.seeds_file, "file of 'X0 Y0' lines");
  paths->add_option("--periods", tf.periods, "run length in wave periods");
  paths->add_option("--scheme", tf.scheme, "adaptive | implicit_midpoint");
  paths->add_option("--rtol", tf.rtol, "relative tolerance (adaptive)");
  paths->add_option("--atol", tf.atol, "absolute tolerance (adaptive)");
  paths->add_option("--dt", tf.dt, "fixed step (implicit_midpoint)");
  cli::DriftFlags df;
  auto* drift = app.add_subcommand("drift", "drift per transit across levels at X = pi");
  drift->add_option("--levels", df.levels, "number of levels");
  drift->add_option("--Y-lo", df.Y_lo, "lowest steady level");
  drift->add_option("--Y-hi", df.Y_hi, "highest steady level");
  drift->add_flag("--geometric", df.geometric, "geometric level spacing");
  drift->add_option("--closed-lo", df.closed_lo, "closed-orbit bracket, lower Y");
  drift->add_option("--closed-hi", df.closed_hi, "closed-orbit bracket, upper Y");
  cli::BifurcationFlags bf;
  auto* bif = app.add_subcommand("bifurcation", "critical-point count across an omega sweep");
  bif->add_option("--omega-from", bf.from, "sweep start");
  bif->add_option("--omega-to", bf.to, "sweep end");
  bif->add_option("--steps", bf.steps, "grid points");
  cli::ValidateFlags vf;
  auto* val = app.add_subcommand("validate", "field-identity residuals at random points");
  val->add_option("--samples", vf.samples, "random space-time points");
  val->add_option("--seed", vf.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  cli::Context ctx{gl, out, err, std::nullopt, {}, "custom", {}};
  try {
    cli::resolve(ctx);
    if (disp->parsed()) {
      if (gl.preset.empty() && gl.params_file.empty() && (!gl.g || !gl.h || !gl.k || !gl.omega || !gl.branch)) {
        err << "dispersion: --g --h --k --omega --branch are required (or --preset / --params)\n"
            << disp->help();
        return kExitBadInput;
      }
      return cli::cmd_dispersion(ctx);
    }
    if (portrait->parsed()) return cli::cmd_portrait(ctx, pf);
    if (paths->parsed()) return cli::cmd_paths(ctx, tf);
    if (drift->parsed()) return cli::cmd_drift(ctx, df);
    if (bif->parsed()) return cli::cmd_bifurcation(ctx, bf);
    if (val->parsed()) return cli::cmd_validate(ctx, vf);
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const NumericalError& e) {
    err << "numerical failure (" << e.component() << "): " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ContractError& e) {
    err << "internal contract violated: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {  // DomainError, UnsupportedConfiguration
    err << "invalid input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitBadInput;
}

}  // namespace vortwave
