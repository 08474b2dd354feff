#pragma once

// Scenario catalog. The numbers are implementation choices; each preset lists
// the inequalities it was built to satisfy, and tests check those inequalities.

#include <string>
#include <string_view>
#include <vector>

#include "vortwave/errors.hpp"
#include "vortwave/wave_core.hpp"

namespace vortwave {

struct Preset {
  std::string name;
  std::string description;
  WaveInputs inputs;
  std::vector<std::string> constraints;

  double Ymax = 0.0;  // portrait height, 0 = automatic

  // bifurcation sweep
  double omega_from = 0.0;
  double omega_to = 0.0;
  std::size_t omega_steps = 0;

  // drift sampling at X = pi in steady heights Y; drift_Y_hi = 0 spans the open
  // interval below the highest critical point
  double drift_Y_lo = 0.0;
  double drift_Y_hi = 0.0;
  std::size_t drift_levels = 0;
  bool drift_geometric = false;
  bool drift_stratified = false;  // equal counts per layer between layer boundaries

  // closed-orbit bracket in steady heights (0, 0 = none)
  double closed_Y_lo = 0.0;
  double closed_Y_hi = 0.0;

  // default particle seeds (X, Y) and run length in wave periods
  std::vector<std::pair<double, double>> seeds;
  double periods = 5.0;
};

inline std::vector<Preset> preset_catalog() {
  std::vector<Preset> out;

  {
    Preset p;
    p.name = "fig1";
    p.description = "irrotational wave: one saddle above the crest, bounded separatrix to X = pi";
    p.inputs = {9.81, 1.0, 0.01, 1.0, 0.0, 0.0, 0.0, Branch::plus};
    p.constraints = {"omega = 0", "a/h < 0.1", "Ak < f (no stagnation on the bed)"};
    p.drift_Y_lo = 0.0;
    p.drift_Y_hi = 1.0;
    p.drift_levels = 41;
    p.seeds = {{3.141592653589793, 0.0}, {3.141592653589793, 0.5}, {3.141592653589793, 1.0}, {0.0, 0.25}};
    out.push_back(p);
  }
  {
    Preset p;
    p.name = "fig2";
    p.description = "supercritical negative vorticity: internal wave, cat's-eye vortex and surface wave";
    p.inputs = {9.81, 1.0, 0.01, 1.0, -6.0, 0.0, 0.0, Branch::minus};
    p.constraints = {"omega < 0", "c > 0", "c + h omega < 0 (crest at X = pi)",
                     "branching discriminant at alpha = |A|k is positive", "a/h < 0.1",
                     "eps |omega| sqrt(h/g) < 0.3"};
    p.drift_levels = 200;
    p.drift_stratified = true;
    p.seeds = {{3.141592653589793, 0.5}, {3.141592653589793, 3.0}, {3.141592653589793, 6.0}, {0.0, 2.0}};
    p.periods = 3.0;
    out.push_back(p);
  }
  {
    Preset p;
    p.name = "fig3";
    p.description = "omega sweep from 0 to -6 on the plus branch at the fig2 geometry and amplitude";
    p.inputs = {9.81, 1.0, 0.01, 1.0, -6.0, 0.0, 0.0, Branch::plus};
    p.constraints = {"c > 0 on the plus branch for every omega in the sweep",
                     "one critical point at omega = 0, three at omega = -6"};
    p.omega_from = 0.0;
    p.omega_to = -6.0;
    p.omega_steps = 121;
    out.push_back(p);
  }
  {
    Preset p;
    p.name = "fig4-left";
    p.description = "large positive vorticity, small amplitude: forward drift at the bed, backward above, closed orbit between";
    p.inputs = {9.81, 0.5, 0.0005, 0.2, 60.0, 0.0, 0.0, Branch::plus};
    p.constraints = {"omega * h >> sqrt(g h) (omega = 60 1/s, h = 0.5 m)", "a/h = 1e-3 << 1",
                     "Ak cosh(Y + d) < d and omega Y - d > pi on the sampled band",
                     "drift sign change below the surface, Y < k(h - a)"};
    p.drift_Y_lo = 1e-7;
    p.drift_Y_hi = 0.0999;
    p.drift_levels = 41;
    p.drift_geometric = true;
    p.closed_Y_lo = 1e-6;
    p.closed_Y_hi = 1e-4;
    p.seeds = {{3.141592653589793, 0.0}, {3.141592653589793, 1e-5}, {3.141592653589793, 1e-3}};
    p.periods = 2.0;
    out.push_back(p);
  }
  {
    Preset p = out[1];
    p.name = "fig4-right";
    p.description = "supercritical negative vorticity drift: every layer moves forward";
    out.push_back(p);
  }
  return out;
}

inline Preset find_preset(std::string_view name) {
  for (auto& p : preset_catalog()) {
    if (p.name == name) return p;
  }
  throw DomainError("unknown preset '" + std::string(name) + "' (fig1, fig2, fig3, fig4-left, fig4-right)");
}

}  // namespace vortwave
