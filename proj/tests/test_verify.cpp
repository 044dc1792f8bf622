// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lbfd/spectral.hpp"
#include "lbfd/verify.hpp"

using namespace lbfd;

namespace {

const double kPi = std::acos(-1.0);

// high-precision finite-difference residual of the governing equation,
// independent of the stored derivative evaluators
long double fd_residual(const AnalyticSolution& s, double x, double y, double t) {
  const long double h = 5e-4L;
  auto v = [&](long double xx, long double yy, long double tt) {
    return (long double)s((double)xx, (double)yy, (double)tt);
  };
  auto d1 = [&](auto f) {  // fourth-order first derivative
    return (f(-2) - 8 * f(-1) + 8 * f(1) - f(2)) / (12 * h);
  };
  auto d2 = [&](auto f) {  // fourth-order second derivative
    return (-f(-2) + 16 * f(-1) - 30 * f(0) + 16 * f(1) - f(2)) / (12 * h * h);
  };
  const long double dt = d1([&](int k) { return v(x, y, t + k * h); });
  const long double dxx = d2([&](int k) { return v(x + k * h, y, t); });
  const long double dyy = d2([&](int k) { return v(x, y + k * h, t); });
  return dt - (long double)s.problem.kappa * (dxx + dyy) -
         (long double)s.problem.source_linear * v(x, y, t) -
         (long double)s.problem.source_const;
}

}  // namespace

TEST_CASE("analytic solutions satisfy their equations and match their derivatives") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u01(0.05, 0.95), ut(0.05, 1.0);
  for (int id = 1; id <= 3; ++id) {
    const AnalyticSolution s = AnalyticSolution::by_id(id, 0.013);
    double worst = 0;
    for (int k = 0; k < 2000; ++k) {
      const double x = s.problem.x0 + u01(rng) * s.problem.lx;
      const double y = s.problem.y0 + u01(rng) * s.problem.ly;
      const double t = ut(rng);
      worst = std::max(worst, (double)std::fabs(fd_residual(s, x, y, t)));
      CHECK(s.pde_residual(x, y, t) < 1e-11);  // stored evaluators route
    }
    CHECK(worst < 1e-10);  // independent finite-difference route
  }
}

TEST_CASE("rmse basics") {
  const AnalyticSolution s = AnalyticSolution::example1(0.01);
  const Discretization disc = Discretization::make(s.problem, 0.1, 0.1);
  ScalarField f(disc.nx, disc.ny, s.problem.x0, s.problem.y0, 0.1);
  for (int j = 0; j < f.ny; ++j)
    for (int i = 0; i < f.nx; ++i) f.at(i, j) = s(f.x(i), f.y(j), 0.7);
  CHECK(rmse(f, s, 0.7) == 0.0);
  for (double& v : f.v) v += 0.25;
  CHECK(rmse(f, s, 0.7) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("kinetic and finite-difference trajectories coincide") {
  // five-level scheme
  const EquivalenceReport flfd = equivalence_check(1, 0.1, 1.0, 20, 60, SchemeKind::flfd);
  CHECK(flfd.max_dev < 1e-11);
  // six-level scheme
  const EquivalenceReport slfd = equivalence_check(1, 0.1, 1.2, 20, 40, SchemeKind::slfd);
  CHECK(slfd.max_dev < 1e-10);
  // linear-source pair on Example 3
  const EquivalenceReport al = equivalence_check(3, 0.1, 1.2, 20, 40, SchemeKind::slfd_al);
  CHECK(al.max_dev < 1e-12);
  // one-step cross-check: the first predicted level already agrees
  CHECK(flfd.per_step.front() < 1e-13);
}

TEST_CASE("equivalence on a constant field is round-off exact") {
  // constant data, no source: both schemes must hold the constant
  DiffusionProblem prob;
  prob.kappa = 0.01;
  prob.lx = prob.ly = 1.0;
  const Discretization disc = Discretization::make(prob, 0.05, 0.025);
  const RelaxationSet set = derive_fourth_order(disc.epsilon, 1.0);
  DistributionField lb(prob, disc, set);
  InitialData d;
  ScalarField proto(disc.nx, disc.ny, 0, 0, disc.dx);
  d.phi = d.ddx = d.ddy = d.lap = proto;
  for (double& v : d.phi.v) v = 2.0;
  lb.initialize(d);
  std::vector<ScalarField> traj{lb.macroscopic()};
  for (int k = 0; k < 20; ++k) {
    lb.step();
    traj.push_back(lb.macroscopic());
  }
  const StencilCoefficients coef = build_coefficients(set, SchemeKind::flfd);
  ScalarHistory hist(4, disc.nx, disc.ny, 0, 0, disc.dx);
  for (int k = 0; k < 4; ++k) hist.push(traj[size_t(k)]);
  double dev = 0;
  for (int k = 4; k <= 20; ++k) {
    ScalarField fd = fd_step(hist, coef, prob, disc, k * disc.dt);
    dev = std::max(dev, max_abs_diff(fd, traj[size_t(k)]));
    hist.push(std::move(fd));
  }
  CHECK(dev < 1e-14);
}

TEST_CASE("equivalence deviation stays bounded over long runs") {
  const EquivalenceReport rep = equivalence_check(1, 0.1, 1.0, 16, 1000, SchemeKind::flfd);
  CHECK(rep.max_dev < 1e-10);
  // round-off accumulation at most linear: late deviations not wildly above
  // a linear envelope fitted to the first half
  const size_t n = rep.per_step.size();
  const double early = *std::max_element(rep.per_step.begin(), rep.per_step.begin() + n / 2);
  CHECK(rep.per_step.back() < 50 * (early + 1e-15));
}

TEST_CASE("convergence study: fourth order on Example 1, scaling law") {
  const ConvergenceReport rep =
      convergence_study(SchemeId::flfd, 1, 0.1, 0.1, 0.1, 3, 2.0);
  CHECK(rep.final_cr > 3.5);
  CHECK(rep.final_cr < 4.5);
  for (double cr : rep.pair_cr) {
    const double ratio = std::pow(2.0, cr);
    CHECK(ratio > 12.0);  // rmse drops by ~2^4 per dx halving
    CHECK(ratio < 20.0);
  }
  CHECK_THROWS_AS(convergence_study(SchemeId::flfd, 1, 0.1, 0.1, 0.1, 1, 1.0), RangeError);
}

TEST_CASE("breaking the fourth-order condition degrades to second order") {
  const ConvergenceReport rep =
      convergence_study(SchemeId::mrt_lb, 1, 0.1, 0.1, 0.1, 3, 2.0, 1.0, 0.1);
  CHECK(rep.final_cr > 1.5);
  CHECK(rep.final_cr < 2.7);
}

TEST_CASE("natural-matrix schemes converge at fourth order too") {
  const ConvergenceReport lb =
      convergence_study(SchemeId::mrt_lb_mn, 1, 0.08, 0.1, 0.1, 3, 2.0);
  CHECK(lb.final_cr > 3.5);
  CHECK(lb.final_cr < 4.5);
  const ConvergenceReport fd =
      convergence_study(SchemeId::slfd_mn, 1, 0.08, 0.1, 0.1, 3, 2.0);
  CHECK(fd.final_cr > 3.5);
  CHECK(fd.final_cr < 4.5);
}

TEST_CASE("plane waves through fd_step reproduce the amplification action") {
  RelaxationSet s;
  s.s2 = 1.2;
  s.s4 = 8.0 / 9.0;
  s.s5 = 1.0;
  s.w0 = 0.4;
  const StencilCoefficients coef = build_coefficients(s, SchemeKind::flfd);
  DiffusionProblem prob;
  prob.kappa = 0.01;
  prob.lx = prob.ly = 1.0;
  const int n = 16;
  const Discretization disc = Discretization::make(prob, 1.0 / n, 0.01);

  for (auto [k1, k2] : {std::pair{1, 0}, {2, 3}, {5, 7}, {8, 1}}) {
    const double th1 = 2 * kPi * k1 / n, th2 = 2 * kPi * k2 / n;
    const AmplificationPoly p = amplification_poly(s, std::cos(th1), std::cos(th2));
    const double sig[4] = {-p.a1, -p.a2, -p.a3, -p.a4};
    for (int level = 0; level < 4; ++level) {
      ScalarHistory hist(4, n, n, 0, 0, disc.dx);
      for (int k = 3; k >= 0; --k) {
        ScalarField f(n, n, 0, 0, disc.dx);
        if (k == level)
          for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) f.at(i, j) = std::cos(th1 * i + th2 * j);
        hist.push(std::move(f));
      }
      const ScalarField out = fd_step(hist, coef, prob, disc, 0.01);
      double worst = 0;
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
          worst = std::max(worst,
                           std::abs(out.at(i, j) - sig[level] * std::cos(th1 * i + th2 * j)));
      CHECK(worst < 1e-12);
    }
  }
}

TEST_CASE("table ids and paper-row bookkeeping") {
  const auto ids = all_table_ids();
  REQUIRE(ids.size() == 8);
  CHECK(ids[0] == "ex1_lb");
  CHECK(ids[7] == "ex3_al2_fd");
  CHECK_THROWS_AS(reproduce_table("nonsense"), ValidationError);
  CHECK(scheme_from_string("mrt_lb") == SchemeId::mrt_lb);
  CHECK_THROWS_AS(scheme_from_string("bogus"), ValidationError);
}
