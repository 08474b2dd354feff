#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "vortwave/vortwave.hpp"

using namespace vortwave;

namespace {

SteadyCoeffs preset_coeffs(const std::string& name) {
  return SteadyCoeffs::from(WaveParams::solve(find_preset(name).inputs)).normalized();
}

double scaled_level_error(const SeparatrixBranch& b, const SteadyCoeffs& co) {
  double worst = 0.0;
  for (const Vec2& q : b.points) {
    worst = std::max(worst, std::abs(hamiltonian(q.x, q.y, co) - b.H_level) / (1.0 + std::abs(b.H_level)));
  }
  return worst;
}

// Height where a branch meets X = +-pi, if it ends on the strip boundary.
std::optional<double> boundary_height(const SeparatrixBranch& b) {
  if (b.end != TraceEnd::strip_boundary) return std::nullopt;
  return b.points.back().y;
}

}  // namespace

TEST(Isocline, IrrotationalSingleRootAtCrest) {
  const SteadyCoeffs co{0.2, 0.0, 1.0, 1.0, 0.0};
  const auto r = infinity_isocline(0.0, co);
  ASSERT_EQ(r.Y.size(), 1u);
  EXPECT_NEAR(r.Y[0], std::acosh(5.0), 1e-12);
  EXPECT_TRUE(infinity_isocline(3.0 * oracle::pi / 4.0, co).Y.empty());
}

TEST(Isocline, NegativeVorticityTwoRootsMatchScan) {
  const SteadyCoeffs co = preset_coeffs("fig2");
  const auto r = infinity_isocline(oracle::pi, co);
  const auto scan = oracle::phi_roots_scan(-co.Ak, co.omega, co.f);
  ASSERT_EQ(r.Y.size(), 2u);
  ASSERT_EQ(scan.size(), 2u);
  EXPECT_LT(r.Y[0], r.Y[1]);
  for (int i = 0; i < 2; ++i) EXPECT_NEAR(r.Y[i], scan[i], 1e-10 * (1.0 + scan[i]));
}

TEST(Isocline, RootResidualAndMirrorSymmetry) {
  for (const char* name : {"fig1", "fig2", "fig4-left"}) {
    const auto pp = build_phase_portrait(WaveParams::solve(find_preset(name).inputs));
    const auto& co = pp.coeffs;
    for (const auto& br : pp.isoclines) {
      for (const Vec2& q : br.samples) {
        const double phi = co.Ak * std::cos(q.x) * std::cosh(q.y) - co.omega * q.y - co.f;
        EXPECT_LT(std::abs(phi), 1e-10 * (1.0 + co.f + std::abs(co.omega * q.y))) << name;
        const auto mirror = infinity_isocline(-q.x, co);
        const bool found = std::any_of(mirror.Y.begin(), mirror.Y.end(),
                                       [&](double y) { return std::abs(y - q.y) < 1e-12 * (1.0 + q.y); });
        EXPECT_TRUE(found) << name << " X=" << q.x;
      }
    }
  }
}

TEST(Isocline, RejectsUnnormalizedCoefficients) {
  const SteadyCoeffs co{-0.2, 0.0, 1.0, 1.0, 0.0};
  EXPECT_THROW(infinity_isocline(0.0, co), ContractError);
  EXPECT_THROW(find_critical_points(co), ContractError);
}

TEST(CriticalPoints, IrrotationalSingleSaddle) {
  const SteadyCoeffs co = preset_coeffs("fig1");
  const auto cps = find_critical_points(co);
  ASSERT_EQ(cps.size(), 1u);
  EXPECT_EQ(cps[0].X, 0.0);
  EXPECT_NEAR(cps[0].Y, std::acosh(co.f / co.Ak), 1e-10);
  EXPECT_EQ(cps[0].kind, PointKind::saddle);
  EXPECT_LT(cps[0].hessian_eigs[0], 0.0);
  EXPECT_GT(cps[0].hessian_eigs[1], 0.0);
  const auto scan = oracle::phi_roots_scan(co.Ak, co.omega, co.f);
  ASSERT_EQ(scan.size(), 1u);
  EXPECT_NEAR(cps[0].Y, scan[0], 1e-10 * scan[0]);
  EXPECT_TRUE(oracle::phi_roots_scan(-co.Ak, co.omega, co.f).empty());
}

TEST(CriticalPoints, NegativeVorticityThreePointsSaddleCenterSaddle) {
  const SteadyCoeffs co = preset_coeffs("fig2");
  const auto cps = find_critical_points(co);
  ASSERT_EQ(cps.size(), 3u);
  EXPECT_EQ(cps[0].kind, PointKind::saddle);
  EXPECT_EQ(cps[1].kind, PointKind::center);
  EXPECT_EQ(cps[2].kind, PointKind::saddle);
  EXPECT_EQ(cps[0].X, 0.0);
  EXPECT_DOUBLE_EQ(cps[1].X, oracle::pi);
  EXPECT_LT(cps[1].Y, cps[2].Y);
  // The center's Hessian is positive definite and diagonal.
  EXPECT_GT(cps[1].hessian_eigs[0], 0.0);
  const Hessian hc = hamiltonian_hessian(cps[1].X, cps[1].Y, co);
  EXPECT_NEAR(hc.xy, 0.0, 1e-12);

  const auto s0 = oracle::phi_roots_scan(co.Ak, co.omega, co.f);
  const auto spi = oracle::phi_roots_scan(-co.Ak, co.omega, co.f);
  ASSERT_FALSE(s0.empty());
  ASSERT_EQ(spi.size(), 2u);
  EXPECT_NEAR(cps[0].Y, s0[0], 1e-10);
  EXPECT_NEAR(cps[1].Y, spi[0], 1e-10);
  EXPECT_NEAR(cps[2].Y, spi[1], 1e-10 * spi[1]);

  // Kinds agree with finite-difference Hessians.
  const oracle::Coeffs oc{co.Ak, co.omega, co.f};
  for (const auto& cp : cps) {
    const auto e = oracle::symmetric_eigs(oracle::fd_hessian(cp.X, cp.Y, oc, 1e-4));
    const PointKind k = e[0] * e[1] < 0.0 ? PointKind::saddle : PointKind::center;
    EXPECT_EQ(k, cp.kind);
  }
}

TEST(CriticalPoints, ClassifyRejectsRegularPoint) {
  const SteadyCoeffs co = preset_coeffs("fig1");
  EXPECT_THROW(classify_critical_point(0.0, 1.0, co), ContractError);
}

TEST(CriticalPoints, BrushedTangencyIsDegenerate) {
  // omega chosen so that the X = pi profile just touches zero.
  const double Ak = 0.1, f = 1.0;
  auto disc = [&](double w) { return branching_discriminant(Ak, w, f); };
  const double w = oracle::bisect(disc, -50.0, -0.01);
  const SteadyCoeffs co{Ak, w, f, 1.0, 0.0};
  const auto at_pi = infinity_isocline(oracle::pi, co);
  if (at_pi.tangent) {
    const auto cps = find_critical_points(co);
    ASSERT_GE(cps.size(), 2u);
    EXPECT_EQ(cps[1].kind, PointKind::degenerate);
  } else {
    // Float rounding can land just off the tangency; a nearly coincident pair is fine.
    ASSERT_LE(at_pi.Y.size(), 2u);
    if (at_pi.Y.size() == 2) EXPECT_LT(at_pi.Y[1] - at_pi.Y[0], 1e-3);
  }
}

TEST(CriticalPoints, CountInvariantAcrossVorticity) {
  for (double w : {0.0, 0.5, 3.0, 5.0}) {
    WaveInputs in = find_preset("fig1").inputs;
    in.omega = w;
    const auto p = WaveParams::solve(in);
    ASSERT_GT(p.c(), 0.0);
    const auto co = SteadyCoeffs::from(p).normalized();
    EXPECT_EQ(find_critical_points(co).size(), 1u) << w;
  }
  for (double w : {-3.0, -6.0, -9.0}) {
    WaveInputs in = find_preset("fig3").inputs;
    in.omega = w;
    const auto p = WaveParams::solve(in);
    const auto co = SteadyCoeffs::from(p).normalized();
    ASSERT_GT(branching_discriminant(co.Ak, w, co.f), 0.0);
    EXPECT_EQ(find_critical_points(co).size(), 3u) << w;
  }
}

TEST(Separatrix, IrrotationalBoundedBranchReachesStripEdgeBelowSaddle) {
  const auto pp = build_phase_portrait(WaveParams::solve(find_preset("fig1").inputs));
  ASSERT_EQ(pp.separatrices.size(), 2u);
  const auto& lower = pp.separatrices[0];
  const auto& upper = pp.separatrices[1];
  EXPECT_EQ(lower.label, "lower");
  const double Ys = pp.critical_points[0].Y;
  for (const auto& b : lower.branches) {
    EXPECT_LT(scaled_level_error(b, pp.coeffs), 1e-8);
    const auto y = boundary_height(b);
    ASSERT_TRUE(y.has_value());
    EXPECT_LT(*y, Ys);
    EXPECT_NEAR(std::abs(b.points.back().x), oracle::pi, 1e-9);
  }
  for (const auto& b : upper.branches) {
    EXPECT_LT(scaled_level_error(b, pp.coeffs), 1e-8);
    EXPECT_EQ(b.end, TraceEnd::top);
  }
}

TEST(Separatrix, NegativeVorticityTopology) {
  const auto pp = build_phase_portrait(WaveParams::solve(find_preset("fig2").inputs));
  const auto& cps = pp.critical_points;
  ASSERT_EQ(cps.size(), 3u);
  ASSERT_EQ(pp.separatrices.size(), 4u);
  for (const auto& s : pp.separatrices) {
    for (const auto& b : s.branches) {
      EXPECT_FALSE(b.points.empty());
      EXPECT_LT(scaled_level_error(b, pp.coeffs), 1e-8);
    }
  }
  // P0 lower: reaches X = pi below P1.  P0 upper: reaches X = pi between P1 and P2.
  const auto& low0 = pp.separatrices[0];
  const auto& up0 = pp.separatrices[1];
  ASSERT_EQ(low0.saddle_index, 0u);
  ASSERT_EQ(up0.saddle_index, 0u);
  for (const auto& b : low0.branches) {
    const auto y = boundary_height(b);
    ASSERT_TRUE(y.has_value());
    EXPECT_LT(*y, cps[1].Y);
  }
  for (const auto& b : up0.branches) {
    const auto y = boundary_height(b);
    ASSERT_TRUE(y.has_value());
    EXPECT_GT(*y, cps[1].Y);
    EXPECT_LT(*y, cps[2].Y);
  }
}

TEST(Separatrix, EigendirectionsAreTangentToLevelSet) {
  const SteadyCoeffs co = preset_coeffs("fig2");
  const auto cps = find_critical_points(co);
  for (const auto& cp : cps) {
    if (cp.kind != PointKind::saddle) continue;
    for (bool unstable : {true, false}) {
      const Vec2 v = saddle_eigendirection(cp, co, unstable);
      EXPECT_NEAR(norm(v), 1.0, 1e-14);
      // Second-order level change along v vanishes.
      const Hessian m = hamiltonian_hessian(cp.X, cp.Y, co);
      EXPECT_NEAR(m.xx * v.x * v.x + 2 * m.xy * v.x * v.y + m.yy * v.y * v.y, 0.0,
                  1e-10 * (std::abs(m.xx) + std::abs(m.yy) + std::abs(m.xy)));
    }
  }
  EXPECT_THROW(saddle_eigendirection(cps[1], co, true), ContractError);
  EXPECT_THROW(trace_separatrix(cps[1], co, SeparatrixDirection::unstable_plus), ContractError);
}

TEST(Portrait, ShearFlowWithoutWaveHasNoCriticalPoints) {
  WaveInputs in = find_preset("fig1").inputs;
  in.a = 0.0;
  in.omega = 1.0;
  const auto pp = build_phase_portrait(WaveParams::solve(in));
  EXPECT_TRUE(pp.critical_points.empty());
  EXPECT_TRUE(pp.separatrices.empty());
}

TEST(Portrait, RecordsCrestShiftAndRejectsLeftGoingWave) {
  const auto pp = build_phase_portrait(WaveParams::solve(find_preset("fig2").inputs));
  EXPECT_EQ(pp.crest_shift, CrestPosition::at_pi);
  EXPECT_DOUBLE_EQ(pp.coeffs.phase_shift, oracle::pi);
  WaveInputs in = find_preset("fig1").inputs;
  in.branch = Branch::minus;
  EXPECT_THROW(build_phase_portrait(WaveParams::solve(in)), UnsupportedConfiguration);
}

TEST(Portrait, IsoclineLabelsAndMonotonicity) {
  const auto p1 = build_phase_portrait(WaveParams::solve(find_preset("fig1").inputs));
  ASSERT_FALSE(p1.isoclines.empty());
  EXPECT_EQ(p1.isoclines[0].label, "gamma");
  const auto p2 = build_phase_portrait(WaveParams::solve(find_preset("fig2").inputs));
  // Y2 only exists near the strip edges, so it shows up as two pieces.
  int n1 = 0, n2 = 0;
  for (const auto& b : p2.isoclines) {
    if (b.label == "Y1") {
      ++n1;
      EXPECT_EQ(b.monotonicity, Monotonicity::increasing);
    } else {
      ASSERT_EQ(b.label, "Y2");
      ++n2;
      if (b.samples.back().x > 0.0) EXPECT_EQ(b.monotonicity, Monotonicity::decreasing);
    }
  }
  EXPECT_EQ(n1, 1);
  EXPECT_EQ(n2, 2);
}

TEST(Bifurcation, NonNegativeVorticityKeepsOnePoint) {
  const auto scan = bifurcation_scan(find_preset("fig1").inputs, 0.0, 5.0, 11);
  for (const auto& r : scan.rows) EXPECT_EQ(r.count, 1u) << r.omega;
  EXPECT_FALSE(scan.transition_found);
}

TEST(Bifurcation, TransitionMatchesProfileMaximumOracle) {
  const Preset pr = find_preset("fig3");
  const auto scan = bifurcation_scan(pr.inputs, 0.0, -6.0, 61);
  ASSERT_TRUE(scan.transition_found);
  EXPECT_LT(std::abs(scan.omega_hi - scan.omega_lo), 1e-6);
  EXPECT_EQ(scan.rows.front().count, 1u);
  EXPECT_EQ(scan.rows.back().count, 3u);

  const auto& in = pr.inputs;
  auto m = [&](double w) {
    const double c = oracle::wave_speed(in.g, in.h, in.k, w, 1);
    const double Ak = std::abs(oracle::Ak(in.g, in.h, in.k, in.a, w, 1));
    return oracle::max_phi_at_pi(Ak, w, in.k * c);
  };
  const double w_star = oracle::bisect(m, -6.0, -1e-9);
  EXPECT_NEAR(scan.omega_star, w_star, 1e-6);
}
