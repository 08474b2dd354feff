// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vortwave/cli.hpp"
#include "vortwave/vortwave.hpp"

using namespace vortwave;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

SteadyCoeffs preset_coeffs(const std::string& name) {
  return SteadyCoeffs::from(WaveParams::solve(find_preset(name).inputs)).normalized();
}

// 1
Outcome dispersion_reduction() {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> ug(1.0, 25.0), uh(0.01, 100.0), uk(0.001, 50.0);
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double g = ug(rng), h = uh(rng), k = uk(rng);
    const double c = solve_dispersion(g, h, k, 0.0, 0.0, Branch::plus);
    const double ref = std::sqrt(g * std::tanh(k * h) / k);
    worst = std::max(worst, std::abs(c - ref) / ref);
  }
  const double dt = seconds_since(t0);
  return {worst < 1e-12 && dt < 1.0, "max rel err " + num(worst) + ", " + num(dt) + " s"};
}

// 2
Outcome solvability_residual() {
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> ug(1.0, 25.0), uh(0.05, 20.0), uk(0.01, 20.0), uw(-30.0, 30.0),
      us(-0.5, 0.5), ua(0.0, 0.01);
  double worst = 0.0;
  int n = 0;
  for (int i = 0; i < 1000; ++i) {
    WaveInputs in;
    in.g = ug(rng);
    in.h = uh(rng);
    in.k = uk(rng);
    in.omega = uw(rng);
    in.s = i % 2 ? us(rng) : 0.0;
    in.a = ua(rng) * in.h;
    for (Branch b : {Branch::plus, Branch::minus}) {
      in.branch = b;
      worst = std::max(worst, dispersion_residual(WaveParams::solve(in)));
      ++n;
    }
  }
  return {worst < 1e-10, std::to_string(n) + " solutions, max residual " + num(worst)};
}

// 3
Outcome speed_bound() {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> ug(1.0, 25.0), uh(0.05, 20.0), uk(0.01, 20.0), uw(-30.0, 30.0);
  std::bernoulli_distribution coin(0.5);
  int drawn = 0, violations = 0;
  double worst = 0.0;
  while (drawn < 1000) {
    const double g = ug(rng), h = uh(rng), k = uk(rng), w = uw(rng);
    const double c = solve_dispersion(g, h, k, w, 0.0, coin(rng) ? Branch::plus : Branch::minus);
    if (w == 0.0 || c == 0.0 || (c > 0.0) != (w > 0.0)) continue;
    ++drawn;
    const double ratio = std::abs(c) / std::sqrt(g * h);
    worst = std::max(worst, ratio);
    if (!(ratio < 1.0)) ++violations;
  }
  return {violations == 0, std::to_string(drawn) + " draws, " + std::to_string(violations) +
                               " violations, max |c|/sqrt(gh) " + num(worst)};
}

// 4
Outcome field_identities() {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::vector<WaveParams> sets;
  for (const auto& p : preset_catalog()) sets.push_back(WaveParams::solve(p.inputs));
  {
    WaveInputs in;
    in.h = 2.0;
    in.a = 0.03;
    in.k = 0.7;
    in.omega = 1.3;
    in.s = 0.2;
    sets.push_back(WaveParams::solve(in));
  }
  double div = 0, curl = 0, bed = 0, kin = 0, dyn_ratio = 0, pert_ratio = 1e300, fd = 0;
  const int N = 10000;
  for (int i = 0; i < N; ++i) {
    const WaveParams& p = sets[i % sets.size()];
    const double t = 2.0 * oracle::pi / std::abs(p.f()) * U(rng);
    const double x = p.lambda() * U(rng);
    const double y = p.h() * U(rng);
    const auto r = field_identity_residuals(t, x, y, p);
    div = std::max(div, std::abs(r.div));
    curl = std::max(curl, std::abs(r.curl_defect));
    bed = std::max(bed, std::abs(r.bed_v));
    kin = std::max(kin, std::abs(r.kinematic_defect));
    dyn_ratio = std::max(dyn_ratio, std::abs(r.dynamic_defect) / (p.g() * p.a()));
    if (i % 10 == 0) {
      // Finite-difference oracle for divergence and curl.
      auto d4 = [](const std::function<double(double)>& fn, double s, double h) {
        return (-fn(s + 2 * h) + 8 * fn(s + h) - 8 * fn(s - h) + fn(s - 2 * h)) / (12 * h);
      };
      const double hs = 1e-3 / p.k();
      const double yy = std::clamp(y, 3 * hs, p.h());
      const double ux = d4([&](double s) { return velocity(t, s, yy, p).u; }, x, hs);
      const double uy = d4([&](double s) { return velocity(t, x, s, p).u; }, yy, hs);
      const double vx = d4([&](double s) { return velocity(t, s, yy, p).v; }, x, hs);
      const double vy = d4([&](double s) { return velocity(t, x, s, p).v; }, yy, hs);
      fd = std::max({fd, std::abs(ux + vy), std::abs(vx - uy - p.omega())});
    }
    // Crest/trough phases carry the dynamic defect; sample one per point.
    const WaveParams q = WaveParams::with_speed(p.inputs(), 1.05 * p.c());
    const double tc = (p.k() * x) / q.f();  // phase 0 at this x
    pert_ratio = std::min(pert_ratio, std::abs(field_identity_residuals(tc, x, y, q).dynamic_defect) / (p.g() * p.a()));
  }
  const bool ok = div < 1e-10 && curl < 1e-10 && bed < 1e-10 && kin < 1e-10 && fd < 1e-10 && dyn_ratio < 1e-9 &&
                  pert_ratio > 1e-3;
  return {ok, "div " + num(div) + ", curl " + num(curl) + ", bed " + num(bed) + ", kin " + num(kin) + ", fd " +
                  num(fd) + ", dyn/ga " + num(dyn_ratio) + ", perturbed dyn/ga >= " + num(pert_ratio)};
}

// 5
Outcome hamiltonian_structure() {
  std::mt19937_64 rng(505);
  std::uniform_real_distribution<double> uX(-2 * oracle::pi, 2 * oracle::pi), uY(0.0, 10.0), uA(0.0, 1.0),
      uw(-10.0, 10.0), uf(0.05, 5.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const SteadyCoeffs co{uA(rng), uw(rng), uf(rng), 1.0, 0.0};
    const double X = uX(rng), Y = uY(rng);
    const Vec2 r = steady_rhs(X, Y, co);
    const Vec2 g = hamiltonian_gradient(X, Y, co);
    const double scale = std::max({1.0, std::abs(g.x), std::abs(g.y)});
    worst = std::max({worst, std::abs(r.x - g.y) / scale, std::abs(r.y + g.x) / scale});
  }
  double drift = 0.0, slowest = 0.0;
  int runs = 0;
  for (const char* name : {"fig1", "fig2", "fig4-left"}) {
    const Preset pr = find_preset(name);
    const SteadyCoeffs co = preset_coeffs(name);
    const double T = 100.0 * 2.0 * oracle::pi / co.f;
    for (const auto& [X0, Y0] : pr.seeds) {
      const auto t0 = Clock::now();
      const auto tr = integrate_steady(X0, Y0, co, T);
      slowest = std::max(slowest, seconds_since(t0));
      if (tr.truncated) continue;
      drift = std::max(drift, tr.max_hamiltonian_drift() / std::max(std::abs(tr.H.front()), 1.0));
      ++runs;
    }
  }
  return {worst < 1e-12 && drift < 1e-8 && slowest < 10.0 && runs >= 8,
          "rhs-gradient " + num(worst) + ", " + std::to_string(runs) + " trajectories, max rel H drift " + num(drift) +
              ", slowest " + num(slowest) + " s"};
}

// 6
Outcome portrait_counts() {
  std::string detail;
  bool ok = true;
  {
    const SteadyCoeffs co = preset_coeffs("fig1");
    const auto cps = find_critical_points(co);
    const auto scan0 = oracle::phi_roots_scan(co.Ak, co.omega, co.f);
    const auto scanpi = oracle::phi_roots_scan(-co.Ak, co.omega, co.f);
    const double Yref = std::acosh(co.f / co.Ak);
    ok = ok && cps.size() == 1 && cps[0].kind == PointKind::saddle && cps[0].X == 0.0 &&
         std::abs(cps[0].Y - Yref) < 1e-10 && scan0.size() == 1 && scanpi.empty() &&
         std::abs(scan0[0] - cps[0].Y) < 1e-10;
    detail += "fig1 " + std::to_string(cps.size()) + " point(s)";
    if (!cps.empty()) detail += ", |Y-acosh(f/Ak)| " + num(std::abs(cps[0].Y - Yref));
  }
  {
    const SteadyCoeffs co = preset_coeffs("fig2");
    const auto cps = find_critical_points(co);
    const auto scan0 = oracle::phi_roots_scan(co.Ak, co.omega, co.f);
    const auto scanpi = oracle::phi_roots_scan(-co.Ak, co.omega, co.f);
    bool kinds = cps.size() == 3 && cps[0].kind == PointKind::saddle && cps[1].kind == PointKind::center &&
                 cps[2].kind == PointKind::saddle && cps[1].Y < cps[2].Y;
    double err = 0.0;
    if (cps.size() == 3 && !scan0.empty() && scanpi.size() == 2) {
      err = std::max({std::abs(cps[0].Y - scan0[0]), std::abs(cps[1].Y - scanpi[0]),
                      std::abs(cps[2].Y - scanpi[1]) / scanpi[1]});
    } else {
      kinds = false;
    }
    // Kinds against finite-difference Hessians.
    const oracle::Coeffs oc{co.Ak, co.omega, co.f};
    for (const auto& cp : cps) {
      const auto e = oracle::symmetric_eigs(oracle::fd_hessian(cp.X, cp.Y, oc, 1e-4));
      const PointKind k = e[0] * e[1] < 0.0 ? PointKind::saddle : PointKind::center;
      kinds = kinds && k == cp.kind;
    }
    ok = ok && kinds && err < 1e-10;
    detail += "; fig2 " + std::to_string(cps.size()) + " points";
    for (const auto& cp : cps) detail += " " + std::string(to_string(cp.kind));
    detail += ", scan mismatch " + num(err);
  }
  return {ok, detail};
}

// 7
Outcome separatrix_fidelity() {
  double worst = 0.0;
  std::size_t points = 0;
  bool topo = true;
  for (const char* name : {"fig1", "fig2"}) {
    const auto pp = build_phase_portrait(WaveParams::solve(find_preset(name).inputs));
    for (const auto& s : pp.separatrices) {
      for (const auto& b : s.branches) {
        for (const Vec2& q : b.points) {
          worst = std::max(worst, std::abs(hamiltonian(q.x, q.y, pp.coeffs) - s.H_level) / (1.0 + std::abs(s.H_level)));
          ++points;
        }
      }
    }
    if (std::string(name) == "fig2") {
      const auto& cps = pp.critical_points;
      topo = topo && cps.size() == 3 && pp.separatrices.size() >= 2;
      if (!topo) break;
      for (const auto& s : pp.separatrices) {
        if (s.saddle_index != 0) continue;
        for (const auto& b : s.branches) {
          const bool edge = b.end == TraceEnd::strip_boundary && std::abs(std::abs(b.points.back().x) - oracle::pi) < 1e-8;
          const double y = b.points.back().y;
          if (s.label == "lower") topo = topo && edge && y < cps[1].Y;
          if (s.label == "upper") topo = topo && edge && y > cps[1].Y && y < cps[2].Y;
        }
      }
    }
  }
  return {worst < 1e-8 && topo, std::to_string(points) + " points, max scaled |H-Hs| " + num(worst) +
                                    ", fig2 topology " + (topo ? "ok" : "mismatch")};
}

// 8
Outcome bed_transit() {
  std::mt19937_64 rng(808);
  // kh <= 5: in deeper water Ak/f falls below 1e-8 and the excess of tau over
  // 2 pi/f, of order (Ak/f)^2, is beneath double resolution.
  std::uniform_real_distribution<double> uh(0.2, 2.2), uk(0.2, 2.2), uw(-3.0, 3.0), ua(0.001, 0.05);
  double closed_vs_oracle = 0.0, quad_vs_closed = 0.0, event_vs_quad = 0.0;
  int draws = 0, not_longer = 0;
  while (draws < 200) {
    WaveInputs in;
    in.h = uh(rng);
    in.k = uk(rng);
    in.omega = uw(rng);
    in.a = ua(rng) * in.h;
    in.branch = Branch::plus;
    const WaveParams p = WaveParams::solve(in);
    if (!(p.c() > 0.0)) continue;
    const SteadyCoeffs co = SteadyCoeffs::from(p).normalized();
    if (!(co.Ak > 0.0 && co.Ak < co.f)) continue;
    ++draws;
    const double closed = 2.0 * oracle::pi / std::sqrt(co.f * co.f - co.Ak * co.Ak);
    closed_vs_oracle = std::max(closed_vs_oracle, std::abs(oracle::bed_tau_quadrature(co.f, co.Ak) - closed) / closed);
    const auto t = transit_time(0.0, co);
    if (t.status != TransitStatus::transits) return {false, "bed orbit reported as non-transiting"};
    quad_vs_closed = std::max(quad_vs_closed, std::abs(t.tau_quadrature - closed) / closed);
    event_vs_quad = std::max(event_vs_quad, std::abs(t.tau_event - t.tau_quadrature) / t.tau_quadrature);
    if (!(t.tau_quadrature > 2.0 * oracle::pi / co.f)) ++not_longer;
  }
  return {closed_vs_oracle < 1e-10 && quad_vs_closed < 1e-10 && event_vs_quad < 1e-8 && not_longer == 0,
          std::to_string(draws) + " draws, closed form vs Simpson " + num(closed_vs_oracle) + ", tau vs closed " +
              num(quad_vs_closed) + ", event vs quadrature " + num(event_vs_quad) + ", tau <= 2pi/f: " +
              std::to_string(not_longer)};
}

// 9
Outcome negative_vorticity_drift() {
  const SteadyCoeffs co = preset_coeffs("fig2");
  const auto b = layer_boundaries(co);
  if (b.size() != 4) return {false, "expected four layer boundaries, got " + std::to_string(b.size())};
  std::vector<double> edges{0.0};
  edges.insert(edges.end(), b.begin(), b.end());
  std::vector<double> levels;
  for (std::size_t seg = 0; seg < 4; ++seg) {
    for (int i = 0; i < 50; ++i) levels.push_back(edges[seg] + (edges[seg + 1] - edges[seg]) * (i + 0.5) / 50.0);
  }
  int forward = 0, always = 0, bad = 0, internal = 0, vortex = 0, surface = 0;
  for (double Y : levels) {
    const auto r = drift_per_period(Y, co);
    if (r.direction == DriftDirection::forward) ++forward;
    else if (r.direction == DriftDirection::always_forward) ++always;
    else ++bad;
    internal += r.layer == Layer::internal_wave;
    vortex += r.layer == Layer::vortex;
    surface += r.layer == Layer::surface_wave;
  }
  const auto cps = find_critical_points(co);
  const auto c = drift_per_period(cps[1].Y, co);
  const double speed_err = std::abs(c.mean_speed - co.f / co.k);
  const bool ok = levels.size() == 200 && bad == 0 && internal > 0 && vortex > 0 && surface > 0 &&
                  c.direction == DriftDirection::always_forward && speed_err < 1e-10;
  return {ok, std::to_string(levels.size()) + " levels (internal " + std::to_string(internal) + ", vortex " +
                  std::to_string(vortex) + ", surface " + std::to_string(surface) + "): forward " +
                  std::to_string(forward) + ", always_forward " + std::to_string(always) + ", other " +
                  std::to_string(bad) + "; center speed error " + num(speed_err)};
}

// 10
Outcome closed_orbit() {
  const auto t0 = Clock::now();
  const Preset pr = find_preset("fig4-left");
  const WaveParams p = WaveParams::solve(pr.inputs);
  const SteadyCoeffs co = SteadyCoeffs::from(p).normalized();
  const double fluid_top = p.k() * (p.h() - p.a());
  std::vector<double> Ys;
  for (std::size_t i = 0; i < pr.drift_levels; ++i) {
    Ys.push_back(pr.drift_Y_lo * std::pow(pr.drift_Y_hi / pr.drift_Y_lo, double(i) / double(pr.drift_levels - 1)));
  }
  bool sign_change = false;
  double change_at = NAN;
  DriftDirection prev = DriftDirection::closed;
  for (std::size_t i = 0; i < Ys.size(); ++i) {
    if (!(Ys[i] < fluid_top)) break;
    const auto r = drift_per_period(Ys[i], co);
    if (i && prev == DriftDirection::forward && r.direction == DriftDirection::backward) {
      sign_change = true;
      change_at = Ys[i];
    }
    prev = r.direction;
  }
  const auto c = find_closed_orbit(co, pr.closed_Y_lo, pr.closed_Y_hi);
  const double dt = seconds_since(t0);
  const bool ok = sign_change && c.found && std::abs(c.dx) < 1e-10 * p.lambda() && std::abs(c.dy) < 1e-10 * p.h() &&
                  c.Y < fluid_top && dt < 60.0;
  return {ok, std::string("sign change ") + (sign_change ? "near Y=" + num(change_at) : "absent") + ", orbit at Y=" +
                  num(c.Y) + ", |dx|/lambda " + num(std::abs(c.dx) / p.lambda()) + ", |dy|/h " +
                  num(std::abs(c.dy) / p.h()) + ", " + num(dt) + " s"};
}

// 11
Outcome bifurcation() {
  const Preset pr = find_preset("fig3");
  const auto scan = bifurcation_scan(pr.inputs, 0.0, find_preset("fig2").inputs.omega, pr.omega_steps);
  bool monotone = true;
  std::size_t jumps = 0;
  for (std::size_t i = 0; i < scan.rows.size(); ++i) {
    const auto n = scan.rows[i].count;
    if (scan.rows[i].skipped || (n != 1 && n != 3)) monotone = false;
    if (i && n < scan.rows[i - 1].count) monotone = false;
    if (i && n != scan.rows[i - 1].count) ++jumps;
  }
  monotone = monotone && jumps == 1 && scan.rows.front().count == 1 && scan.rows.back().count == 3;
  const auto& in = pr.inputs;
  auto m = [&](double w) {
    const double c = oracle::wave_speed(in.g, in.h, in.k, w, 1);
    const double Ak = std::abs(oracle::Ak(in.g, in.h, in.k, in.a, w, 1));
    return oracle::max_phi_at_pi(Ak, w, in.k * c);
  };
  const double oracle_star = oracle::bisect(m, scan.omega_lo - 0.5, scan.omega_hi + 0.5);
  const double width = std::abs(scan.omega_hi - scan.omega_lo);
  const double diff = std::abs(scan.omega_star - oracle_star);
  const bool ok = scan.transition_found && monotone && width < 1e-6 && diff < 1e-6;
  return {ok, std::to_string(scan.rows.size()) + " rows, " + (monotone ? "monotone 1->3" : "not a clean 1->3 jump") +
                  ", omega* " + std::to_string(scan.omega_star) + ", bracket " + num(width) + ", oracle diff " +
                  num(diff)};
}

// 12
int run(const std::vector<std::string>& args, std::string& err_text) {
  std::vector<const char*> argv{"vortwave"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  err_text = err.str();
  return code;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "vortwave_acceptance_determinism";
  fs::remove_all(root);
  const std::vector<std::string> commands{"portrait", "paths", "drift", "bifurcation", "validate"};
  for (const char* pass : {"a", "b"}) {
    for (const auto& pr : preset_catalog()) {
      for (const auto& cmd : commands) {
        std::string err;
        const int code = run({cmd, "--preset", pr.name, "--out", (root / pass).string(), "--format", "csv,json,svg",
                              "--quiet"},
                             err);
        if (code != 0) {
          return {false, cmd + " --preset " + pr.name + " exited " + std::to_string(code) + ": " + err};
        }
      }
    }
  }
  std::size_t files = 0, differ = 0;
  std::string first;
  for (const auto& e : fs::recursive_directory_iterator(root / "a")) {
    if (!e.is_regular_file()) continue;
    ++files;
    const fs::path rel = fs::relative(e.path(), root / "a");
    if (!fs::exists(root / "b" / rel) || slurp(e.path()) != slurp(root / "b" / rel)) {
      ++differ;
      if (first.empty()) first = rel.string();
    }
  }
  fs::remove_all(root);
  return {files > 0 && differ == 0, std::to_string(files) + " files compared, " + std::to_string(differ) + " differ" +
                                        (first.empty() ? "" : " (first: " + first + ")")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*fn)();
  };
  const std::vector<Criterion> criteria{
      {"dispersion reduction", dispersion_reduction},
      {"solvability residual", solvability_residual},
      {"speed bound", speed_bound},
      {"field identities", field_identities},
      {"hamiltonian structure", hamiltonian_structure},
      {"portrait counts and kinds", portrait_counts},
      {"separatrix fidelity", separatrix_fidelity},
      {"bed transit time", bed_transit},
      {"negative-vorticity forward drift", negative_vorticity_drift},
      {"closed orbits under strong positive vorticity", closed_orbit},
      {"bifurcation scan", bifurcation},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[i].fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %2zu %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
