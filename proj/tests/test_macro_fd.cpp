// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lbfd/analytic.hpp"
#include "lbfd/macro_fd.hpp"
#include "support/rational.hpp"

using namespace lbfd;
using testsupport::Rat;

namespace {

RelaxationSet make_set(double s2, double s4, double s5, double w0,
                       MatrixKind kind = MatrixKind::orthogonal) {
  RelaxationSet s;
  s.s2 = s2;
  s.s4 = s4;
  s.s5 = s5;
  s.w0 = w0;
  s.matrix_kind = kind;
  return s;
}

// exact-rational six-level coefficient sum; must be exactly 1
Rat slfd_weight_sum_exact(Rat s2, Rat s4, Rat s5, Rat w0) {
  const Rat a1 = (w0 - Rat(1)) * s4 + Rat(1);
  const Rat a2 = Rat(1) - s5 / Rat(4) - s2 / Rat(2) - s4 * w0 / Rat(4);
  const Rat b1 = (s4 * w0 + s5 - Rat(2)) * (Rat(1) - s2);
  const Rat b2 =
      ((s5 + Rat(2) * s2 - Rat(4)) * (Rat(1) - s4) + w0 * s4 * (s5 + Rat(2) * s2 - Rat(3))) /
      Rat(4);
  const Rat b3 = (Rat(2) - s2 - s4 * w0) * (s2 + s5 - Rat(2)) / Rat(4);
  const Rat g1 = s4 * w0 * (s2 - Rat(1)) * (s5 - Rat(1)) +
                 (Rat(1) - s4) * (s5 - Rat(2)) * (s2 - Rat(1));
  const Rat g2 = (s2 - Rat(1)) *
                 (s4 * w0 * (Rat(3) - s2 - Rat(2) * s5) +
                  (Rat(2) * s2 + Rat(3) * s5 - s2 * s5 - Rat(4))) /
                 Rat(4);
  const Rat g3 = (w0 * s4 * (s2 - Rat(1)) * (s2 + s5 - Rat(2)) +
                  (Rat(1) - s4) * (s2 - Rat(2)) * (s2 + s5 - Rat(2))) /
                 Rat(4);
  const Rat z1 = (w0 * s4 - Rat(1)) * (Rat(1) - s5) * (s2 - Rat(1)) * (s2 - Rat(1));
  const Rat z2 = (s4 * w0 * (s2 - Rat(1)) * (s2 - Rat(1)) * (s5 - Rat(1)) +
                  (Rat(1) - s4) * (Rat(1) - s2) *
                      (Rat(2) * s2 + Rat(3) * s5 - s2 * s5 - Rat(4))) /
                 Rat(4);
  const Rat eta = (Rat(1) - s2) * (Rat(1) - s2) * (Rat(1) - s4) * (Rat(1) - s5);
  return a1 + Rat(4) * a2 + b1 + Rat(4) * b2 + Rat(4) * b3 + g1 + Rat(4) * g2 + Rat(4) * g3 +
         z1 + Rat(4) * z2 + eta;
}

}  // namespace

TEST_CASE("unit-rate point collapses the stencil") {
  const RelaxationSet s = make_set(1.0, 1.0, 1.0, 0.35);
  const StencilCoefficients c = build_coefficients(s, SchemeKind::slfd);
  CHECK(c.bd == 0.0);   // beta3
  CHECK(c.g0 == 0.0);   // gamma1
  CHECK(c.e0 == 0.0);   // eta
  CHECK(c.src == 1.0);  // delta
  CHECK(c.b0 == 0.0);
  CHECK(c.z0 == 0.0);
  CHECK(c.c0 == doctest::Approx(0.35).epsilon(1e-15));
}

TEST_CASE("five-level scheme equals the six-level scheme at s5 = 1") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ur(0.1, 1.9), uw(0.05, 0.95);
  for (int k = 0; k < 60; ++k) {
    const RelaxationSet s = make_set(ur(rng), ur(rng), 1.0, uw(rng));
    const StencilCoefficients a = build_coefficients(s, SchemeKind::flfd);
    const StencilCoefficients b = build_coefficients(s, SchemeKind::slfd);
    CHECK(std::abs(a.c0 - b.c0) < 1e-15);
    CHECK(std::abs(a.cx - b.cx) < 1e-15);
    CHECK(std::abs(a.b0 - b.b0) < 1e-15);
    CHECK(std::abs(a.bx - b.bx) < 1e-15);
    CHECK(std::abs(a.bd - b.bd) < 1e-15);
    CHECK(std::abs(a.g0 - b.g0) < 1e-15);
    CHECK(std::abs(a.gx - b.gx) < 1e-15);
    CHECK(std::abs(a.gd - b.gd) < 1e-15);
    CHECK(std::abs(a.zx - b.zx) < 1e-15);
    CHECK(std::abs(a.src - b.src) < 1e-15);
    CHECK(b.z0 == 0.0);  // s5 = 1 kills the level n-3 center
    CHECK(b.e0 == 0.0);  // and level n-4 entirely
    CHECK(a.z0 == 0.0);
    CHECK(a.e0 == 0.0);
  }
  // scheme preconditions
  CHECK_THROWS_AS(build_coefficients(make_set(1.2, 0.6, 1.3, 0.4), SchemeKind::flfd),
                  SchemeMismatch);
  CHECK_THROWS_AS(build_coefficients(make_set(1.2, 0.6, 1.3, 0.4), SchemeKind::slfd_mn),
                  SchemeMismatch);
  CHECK_THROWS_AS(
      build_coefficients(make_set(1.2, 0.6, 1.3, 0.4, MatrixKind::natural), SchemeKind::slfd),
      SchemeMismatch);
}

TEST_CASE("weight sums: exact rational oracle, float path, linear-source correction") {
  // exact rational identity at random rational parameters
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(1, 31);
  for (int k = 0; k < 40; ++k) {
    const Rat sum = slfd_weight_sum_exact(Rat(num(rng), 16), Rat(num(rng), 16),
                                          Rat(num(rng), 16), Rat(num(rng), 32));
    CHECK(sum == Rat(1));
  }
  // float path
  std::uniform_real_distribution<double> ur(0.1, 1.9), uw(0.05, 0.95);
  for (int k = 0; k < 100; ++k) {
    const RelaxationSet s = make_set(ur(rng), ur(rng), ur(rng), uw(rng));
    CHECK(std::abs(build_coefficients(s, SchemeKind::slfd).weight_sum() - 1.0) < 1e-13);
    RelaxationSet n = s;
    n.matrix_kind = MatrixKind::natural;
    CHECK(std::abs(build_coefficients(n, SchemeKind::slfd_mn).weight_sum() - 1.0) < 1e-13);
  }
  // linear-source scheme: weight sum = 1 + zeta dt delta_bar
  for (int k = 0; k < 40; ++k) {
    const RelaxationSet s = make_set(ur(rng), ur(rng), ur(rng), uw(rng));
    const double zeta = -1.7, dt = 0.05;
    const StencilCoefficients c = build_coefficients(s, SchemeKind::slfd_al, zeta, dt);
    CHECK(std::abs(c.weight_sum() - (1.0 + zeta * dt * c.src)) < 1e-13);
  }
}

TEST_CASE("linear-source scheme reduces to the plain one at zeta = 0") {
  const RelaxationSet s = make_set(1.2, 0.57, 1.1, 0.23);
  const StencilCoefficients p = build_coefficients(s, SchemeKind::slfd);
  const StencilCoefficients a = build_coefficients(s, SchemeKind::slfd_al, 0.0, 0.05);
  CHECK(a.c0 == p.c0);
  CHECK(a.cx == p.cx);
  CHECK(a.b0 == p.b0);
  CHECK(a.bx == p.bx);
  CHECK(a.bd == p.bd);
  CHECK(a.g0 == p.g0);
  CHECK(a.gx == p.gx);
  CHECK(a.gd == p.gd);
  CHECK(a.z0 == p.z0);
  CHECK(a.zx == p.zx);
  CHECK(a.e0 == p.e0);
  CHECK(a.src == p.src);
}

TEST_CASE("natural variant: x/y cross weights equal iff s4 == s5") {
  RelaxationSet s = make_set(1.2, 0.7, 0.7, 0.3, MatrixKind::natural);
  StencilCoefficients c = build_coefficients(s, SchemeKind::slfd_mn);
  CHECK(std::abs(c.cx - c.cy) < 1e-15);
  CHECK(std::abs(c.bx - c.by) < 1e-15);
  CHECK(std::abs(c.gx - c.gy) < 1e-15);
  CHECK(std::abs(c.zx - c.zy) < 1e-15);
  s.s5 = 0.9;
  c = build_coefficients(s, SchemeKind::slfd_mn);
  CHECK(std::abs(c.cx - c.cy) > 1e-6);
  CHECK(std::abs(c.bx - c.by) > 1e-6);
}

TEST_CASE("impulse response reproduces the stencil weights") {
  const RelaxationSet s = make_set(1.2, 4.0 / 7.0, 1.3, 0.1);
  const StencilCoefficients c = build_coefficients(s, SchemeKind::slfd);
  DiffusionProblem prob;
  prob.kappa = 0.01;
  prob.source_const = 0.0;
  prob.lx = prob.ly = 1.0;
  const Discretization disc = Discretization::make(prob, 0.1, 0.01);
  const int n = disc.nx, i0 = 4, j0 = 5;

  for (int level = 0; level < 5; ++level) {
    ScalarHistory hist(5, n, n, 0, 0, 0.1);
    for (int k = 4; k >= 0; --k) {
      ScalarField f(n, n, 0, 0, 0.1);
      if (k == level) f.at(i0, j0) = 1.0;
      hist.push(std::move(f));
    }
    const ScalarField out = fd_step(hist, c, prob, disc, 0.01);
    double expect_center = 0, expect_xc = 0, expect_yc = 0, expect_d = 0;
    switch (level) {
      case 0: expect_center = c.c0; expect_xc = c.cx; expect_yc = c.cy; break;
      case 1: expect_center = c.b0; expect_xc = c.bx; expect_yc = c.by; expect_d = c.bd; break;
      case 2: expect_center = c.g0; expect_xc = c.gx; expect_yc = c.gy; expect_d = c.gd; break;
      case 3: expect_center = c.z0; expect_xc = c.zx; expect_yc = c.zy; break;
      case 4: expect_center = c.e0; break;
    }
    CHECK(out.at(i0, j0) == expect_center);
    CHECK(out.at(i0 - 1, j0) == expect_xc);
    CHECK(out.at(i0 + 1, j0) == expect_xc);
    CHECK(out.at(i0, j0 - 1) == expect_yc);
    CHECK(out.at(i0, j0 + 1) == expect_yc);
    CHECK(out.at(i0 - 1, j0 - 1) == expect_d);
    CHECK(out.at(i0 + 1, j0 + 1) == expect_d);
    CHECK(out.at(i0 + 2, j0) == 0.0);
    CHECK(out.at(i0 - 2, j0 - 2) == 0.0);
  }
}

TEST_CASE("constants are reproduced; sources add dt delta R") {
  const RelaxationSet s = make_set(0.9, 1.4, 0.8, 0.45);
  const StencilCoefficients c = build_coefficients(s, SchemeKind::slfd);
  DiffusionProblem prob;
  prob.kappa = 0.01;
  prob.source_const = 3.0;
  prob.lx = prob.ly = 1.0;
  const Discretization disc = Discretization::make(prob, 0.1, 0.01);
  ScalarHistory hist(5, disc.nx, disc.ny, 0, 0, 0.1);
  for (int k = 0; k < 5; ++k) {
    ScalarField f(disc.nx, disc.ny, 0, 0, 0.1);
    for (double& v : f.v) v = 7.25;
    hist.push(std::move(f));
  }
  const ScalarField out = fd_step(hist, c, prob, disc, 0.05);
  const double expect = 7.25 + disc.dt * c.src * prob.source_const;
  for (double v : out.v) CHECK(std::abs(v - expect) < 1e-13);
}

TEST_CASE("history ring and underflow") {
  ScalarHistory hist(4, 3, 3, 0, 0, 1.0);
  CHECK(!hist.full());
  CHECK_THROWS_AS((void)hist.level(0), HistoryUnderflow);
  for (int k = 0; k < 6; ++k) {
    ScalarField f(3, 3, 0, 0, 1.0);
    f.at(0, 0) = k;
    hist.push(std::move(f));
  }
  CHECK(hist.full());
  CHECK(hist.level(0).at(0, 0) == 5.0);  // newest
  CHECK(hist.level(3).at(0, 0) == 2.0);  // oldest retained
  CHECK_THROWS_AS((void)hist.level(4), HistoryUnderflow);

  const RelaxationSet s = make_set(1.2, 0.6, 1.0, 0.4);
  const StencilCoefficients c = build_coefficients(s, SchemeKind::slfd);
  DiffusionProblem prob;
  prob.kappa = 0.01;
  prob.lx = prob.ly = 3.0;
  const Discretization disc = Discretization::make(prob, 1.0, 1.0);
  ScalarHistory shallow(5, 3, 3, 0, 0, 1.0);
  shallow.push(ScalarField(3, 3, 0, 0, 1.0));
  CHECK_THROWS_AS(fd_step(shallow, c, prob, disc, 1.0), HistoryUnderflow);
}

TEST_CASE("bootstrap strategies") {
  const double eps = 0.1, dx = 0.05, dt = 10 * dx * dx;
  const double kappa = eps * dx * dx / dt;
  AnalyticSolution ex = AnalyticSolution::example1(kappa);
  const Discretization disc = Discretization::make(ex.problem, dx, dt);
  const RelaxationSet set = derive_fourth_order(eps, 1.0);

  // analytic: levels are the exact solution at k dt
  ScalarHistory hist(4, disc.nx, disc.ny, ex.problem.x0, ex.problem.y0, dx);
  bootstrap(hist, BootstrapStrategy::analytic, ex.problem, disc, set, ex.value, nullptr);
  CHECK(hist.full());
  for (int k = 0; k < 4; ++k) {
    const ScalarField& f = hist.level(3 - k);  // level 3 is t = 0
    double worst = 0;
    for (int j = 0; j < f.ny; ++j)
      for (int i = 0; i < f.nx; ++i)
        worst = std::max(worst, std::abs(f.at(i, j) - ex(f.x(i), f.y(j), k * dt)));
    CHECK(worst == 0.0);
  }

  // constant data: all levels identical
  DiffusionProblem cp;
  cp.kappa = kappa;
  cp.lx = cp.ly = 2.0;
  ScalarHistory hc(4, disc.nx, disc.ny, 0, 0, dx);
  bootstrap(hc, BootstrapStrategy::analytic, cp, disc, set,
            [](double, double, double) { return 1.5; }, nullptr);
  CHECK(max_abs_diff(hc.level(0), hc.level(3)) == 0.0);

  // kinetic bootstrap differs from analytic by the scheme's own order, so the
  // difference at the last level shrinks ~16x per dx halving
  double prev = 0;
  for (int r = 0; r < 3; ++r) {
    const double dxr = dx / (1 << r), dtr = 10 * dxr * dxr;
    AnalyticSolution exr = AnalyticSolution::example1(eps * dxr * dxr / dtr);
    const Discretization dr = Discretization::make(exr.problem, dxr, dtr);
    ScalarHistory ha(4, dr.nx, dr.ny, exr.problem.x0, exr.problem.y0, dxr);
    bootstrap(ha, BootstrapStrategy::analytic, exr.problem, dr, set, exr.value, nullptr);
    ScalarHistory hl(4, dr.nx, dr.ny, exr.problem.x0, exr.problem.y0, dxr);
    const InitialData init = exr.initial_data(dr);
    bootstrap(hl, BootstrapStrategy::lb_bootstrap, exr.problem, dr, set, exr.value, &init);
    const double diff = max_abs_diff(ha.level(0), hl.level(0));
    if (r > 0) {
      const double ratio = prev / diff;
      CHECK(ratio > 8.0);
      CHECK(ratio < 32.0);
    }
    prev = diff;
  }

  // missing inputs
  ScalarHistory hx(4, disc.nx, disc.ny, 0, 0, dx);
  CHECK_THROWS_AS(bootstrap(hx, BootstrapStrategy::analytic, ex.problem, disc, set, {}, nullptr),
                  NoAnalyticSolution);
  CHECK_THROWS_AS(
      bootstrap(hx, BootstrapStrategy::lb_bootstrap, ex.problem, disc, set, ex.value, nullptr),
      NoAnalyticSolution);
}

TEST_CASE("coefficient csv dump") {
  const RelaxationSet s = make_set(1.2, 0.6, 1.0, 0.4);
  const StencilCoefficients c = build_coefficients(s, SchemeKind::flfd);
  write_coefficients_csv("/tmp/lbfd_test_coeffs.csv", c, "test");
  std::FILE* fp = std::fopen("/tmp/lbfd_test_coeffs.csv", "r");
  REQUIRE(fp);
  char line[128];
  int rows = 0;
  while (std::fgets(line, sizeof line, fp)) ++rows;
  std::fclose(fp);
  CHECK(rows == 18);  // header comment + column header + 16 values
}
