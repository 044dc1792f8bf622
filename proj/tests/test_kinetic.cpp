// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>

#include "lbfd/analytic.hpp"
#include "lbfd/kinetic.hpp"
#include "lbfd/lattice.hpp"

using namespace lbfd;

namespace {

const double kPi = std::acos(-1.0);

DiffusionProblem periodic_problem(double kappa, double R = 0.0, double zeta = 0.0) {
  DiffusionProblem p;
  p.kappa = kappa;
  p.source_const = R;
  p.source_linear = zeta;
  p.lx = p.ly = 1.0;
  return p;
}

// smooth periodic seed with closed-form derivatives (period 1 in both axes)
InitialData smooth_seed(const Discretization& disc, const DiffusionProblem& prob) {
  InitialData d;
  ScalarField proto(disc.nx, disc.ny, prob.x0, prob.y0, disc.dx);
  d.phi = d.ddx = d.ddy = d.lap = proto;
  const double a = 2 * kPi, b = 4 * kPi;
  for (int j = 0; j < disc.ny; ++j)
    for (int i = 0; i < disc.nx; ++i) {
      const double x = proto.x(i), y = proto.y(j);
      d.phi.at(i, j) = 1.0 + 0.3 * std::sin(a * x) * std::cos(a * y) + 0.1 * std::cos(b * x);
      d.ddx.at(i, j) = 0.3 * a * std::cos(a * x) * std::cos(a * y) - 0.1 * b * std::sin(b * x);
      d.ddy.at(i, j) = -0.3 * a * std::sin(a * x) * std::sin(a * y);
      d.lap.at(i, j) =
          -0.6 * a * a * std::sin(a * x) * std::cos(a * y) - 0.1 * b * b * std::cos(b * x);
    }
  return d;
}

}  // namespace

TEST_CASE("equilibrium populations and their moments") {
  RelaxationSet s;
  s.w0 = 0.2;
  s.s2 = s.s4 = s.s5 = 1.0;
  auto f = equilibrium(0.0, s);
  for (double v : f) CHECK(v == 0.0);

  f = equilibrium(1.0, s);
  for (double v : f) CHECK(v == doctest::Approx(0.2).epsilon(1e-15));

  s.w0 = 0.6;
  f = equilibrium(2.0, s);
  CHECK(f[0] == doctest::Approx(1.2).epsilon(1e-15));
  for (int i = 1; i < 5; ++i) CHECK(f[i] == doctest::Approx(0.2).epsilon(1e-15));
  // moment sums: zeroth = phi, first = 0, second diagonal = (1-w0)/2 c^2 phi
  const double c = 3.0;
  double m0 = 0, mx = 0, my = 0, mxx = 0, myy = 0, mxy = 0;
  for (int i = 0; i < 5; ++i) {
    m0 += f[i];
    mx += f[i] * c * VelocitySet::ex[i];
    my += f[i] * c * VelocitySet::ey[i];
    mxx += f[i] * c * c * VelocitySet::ex[i] * VelocitySet::ex[i];
    myy += f[i] * c * c * VelocitySet::ey[i] * VelocitySet::ey[i];
    mxy += f[i] * c * c * VelocitySet::ex[i] * VelocitySet::ey[i];
  }
  CHECK(m0 == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(mx == 0.0);
  CHECK(my == 0.0);
  CHECK(mxx == doctest::Approx(0.5 * (1 - 0.6) * c * c * 2.0).epsilon(1e-14));
  CHECK(myy == doctest::Approx(mxx).epsilon(1e-14));
  CHECK(mxy == 0.0);
}

TEST_CASE("velocity set structure") {
  int sx = 0, sy = 0;
  for (int i = 0; i < 5; ++i) {
    sx += VelocitySet::ex[i];
    sy += VelocitySet::ey[i];
    const int o = VelocitySet::opposite[i];
    CHECK(VelocitySet::ex[o] == -VelocitySet::ex[i]);
    CHECK(VelocitySet::ey[o] == -VelocitySet::ey[i]);
  }
  CHECK(sx == 0);
  CHECK(sy == 0);
}

TEST_CASE("transform matrices: exact inverses and row orthogonality") {
  for (double c : {1.0, 2.0, 0.5}) {
    for (MatrixKind k : {MatrixKind::orthogonal, MatrixKind::natural}) {
      const Mat5 m = transform_matrix(k, c);
      const Mat5 mi = transform_inverse(k, c);
      CHECK(((m * mi) - Mat5::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    }
    const Mat5 m = transform_matrix(MatrixKind::orthogonal, c);
    for (int r1 = 0; r1 < 5; ++r1)
      for (int r2 = r1 + 1; r2 < 5; ++r2)
        CHECK(std::abs(m.row(r1).dot(m.row(r2))) < 1e-12 * c * c * c * c);
  }
}

TEST_CASE("natural-matrix equivalent relaxation matrix structure") {
  RelaxationSet s;
  s.s1 = 0.7;
  s.s2 = 1.3;
  s.s4 = 0.6;
  s.s5 = 1.1;
  s.w0 = 0.3;
  const double c = 2.0;
  const Mat5 sn = relaxation_natural_equivalent(s, c);
  CHECK(sn(0, 0) == doctest::Approx(s.s1).epsilon(1e-14));
  CHECK(sn(1, 1) == doctest::Approx(s.s2).epsilon(1e-14));
  CHECK(sn(2, 2) == doctest::Approx(s.s2).epsilon(1e-14));
  CHECK(sn(3, 3) == doctest::Approx(0.5 * (s.s4 + s.s5)).epsilon(1e-14));
  CHECK(sn(3, 4) == doctest::Approx(0.5 * (s.s4 - s.s5)).epsilon(1e-14));
  CHECK(sn(4, 3) == doctest::Approx(0.5 * (s.s4 - s.s5)).epsilon(1e-14));
  CHECK(sn(4, 4) == doctest::Approx(0.5 * (s.s4 + s.s5)).epsilon(1e-14));
  CHECK(sn(3, 0) == doctest::Approx(2.0 * c * c * (s.s1 - s.s4) / 5.0).epsilon(1e-13));
  CHECK(sn(4, 0) == doctest::Approx(sn(3, 0)).epsilon(1e-13));
  CHECK(std::abs(sn(0, 1)) + std::abs(sn(1, 0)) + std::abs(sn(2, 3)) < 1e-13);
}

TEST_CASE("uniform field with zero source is a fixed point") {
  const DiffusionProblem prob = periodic_problem(0.02);
  const Discretization disc = Discretization::make(prob, 0.05, 0.025);
  for (MatrixKind kind : {MatrixKind::orthogonal, MatrixKind::natural}) {
    RelaxationSet set = kind == MatrixKind::orthogonal ? derive_fourth_order(0.1, 1.3)
                                                       : derive_fourth_order_natural(0.08);
    DistributionField lb(prob, disc, set);
    InitialData d;
    ScalarField proto(disc.nx, disc.ny, 0, 0, disc.dx);
    d.phi = d.ddx = d.ddy = d.lap = proto;
    for (double& v : d.phi.v) v = 3.7;
    lb.initialize(d);
    for (int k = 0; k < 5; ++k) lb.step();
    const ScalarField phi = lb.macroscopic();
    for (double v : phi.v) CHECK(std::abs(v - 3.7) < 5e-14);
  }
}

TEST_CASE("zeroth moment conserved without source; source adds dt R per node") {
  const DiffusionProblem prob = periodic_problem(0.02);
  const Discretization disc = Discretization::make(prob, 1.0 / 32, 1.0 / 32);
  const RelaxationSet set = derive_fourth_order(0.02 / 32.0 * 32 * 32 / 32.0, 1.0);
  DistributionField lb(prob, disc, set);
  // single-node pulse on a uniform background
  InitialData d;
  ScalarField proto(disc.nx, disc.ny, 0, 0, disc.dx);
  d.phi = d.ddx = d.ddy = d.lap = proto;
  for (double& v : d.phi.v) v = 1.0;
  d.phi.at(7, 9) = 2.0;
  lb.initialize(d);
  const double m0 = lb.total_mass();
  lb.run(100);
  CHECK(std::abs(lb.total_mass() - m0) / std::abs(m0) < 1e-12);

  // constant source: total phi grows by nx*ny*dt*R each step
  const DiffusionProblem ps = periodic_problem(0.02, 2.5);
  DistributionField lbs(ps, disc, set);
  lbs.initialize(d);
  auto total_phi = [&](const DistributionField& f) {
    double acc = 0;
    for (double v : f.macroscopic().v) acc += v;
    return acc;
  };
  const double p0 = total_phi(lbs);
  lbs.run(50);
  const double expect = p0 + 50.0 * disc.dt * 2.5 * disc.nx * disc.ny;
  CHECK(std::abs(total_phi(lbs) - expect) / expect < 1e-12);
}

TEST_CASE("s1 has no influence on the macroscopic trajectory") {
  const DiffusionProblem prob = periodic_problem(0.05, 1.0);
  const Discretization disc = Discretization::make(prob, 0.05, 0.005);
  ScalarField ref;
  bool first = true;
  for (double s1 : {0.3, 1.0, 1.7}) {
    RelaxationSet set = derive_fourth_order(disc.epsilon, 1.2);
    set.s1 = s1;
    DistributionField lb(prob, disc, set);
    lb.initialize(smooth_seed(disc, prob));
    lb.run(100);
    const ScalarField phi = lb.macroscopic();
    if (first) {
      ref = phi;
      first = false;
    } else {
      CHECK(max_abs_diff(ref, phi) < 1e-12);
    }
  }
}

TEST_CASE("natural matrix with the equivalent S_N reproduces the orthogonal run") {
  const DiffusionProblem prob = periodic_problem(0.05, 0.7);
  const Discretization disc = Discretization::make(prob, 0.05, 0.005);
  RelaxationSet set = derive_fourth_order(disc.epsilon, 1.3);

  DistributionField a(prob, disc, set, CollisionVariant::from_matrix_kind);
  a.initialize(smooth_seed(disc, prob));
  DistributionField b(prob, disc, set, CollisionVariant::natural_sn);
  b.initialize(smooth_seed(disc, prob));
  for (int k = 0; k < 100; ++k) {
    a.step();
    b.step();
  }
  CHECK(max_abs_diff(a.macroscopic(), b.macroscopic()) < 1e-13);
}

TEST_CASE("x<->y symmetric data stays symmetric") {
  const DiffusionProblem prob = periodic_problem(0.03, 0.5);
  const Discretization disc = Discretization::make(prob, 0.05, 0.005);
  const RelaxationSet set = derive_fourth_order(disc.epsilon, 1.0);
  DistributionField lb(prob, disc, set);
  InitialData d;
  ScalarField proto(disc.nx, disc.ny, 0, 0, disc.dx);
  d.phi = d.ddx = d.ddy = d.lap = proto;
  const double a = 2 * kPi;
  for (int j = 0; j < disc.ny; ++j)
    for (int i = 0; i < disc.nx; ++i) {
      const double x = proto.x(i), y = proto.y(j);
      d.phi.at(i, j) = std::sin(a * x) * std::sin(a * y);
      d.ddx.at(i, j) = a * std::cos(a * x) * std::sin(a * y);
      d.ddy.at(i, j) = a * std::sin(a * x) * std::cos(a * y);
      d.lap.at(i, j) = -2 * a * a * std::sin(a * x) * std::sin(a * y);
    }
  lb.initialize(d);
  for (int k = 0; k < 50; ++k) {
    lb.step();
    if (k % 10 == 0) {
      const ScalarField phi = lb.macroscopic();
      double worst = 0;
      for (int j = 0; j < disc.ny; ++j)
        for (int i = 0; i < disc.nx; ++i)
          worst = std::max(worst, std::abs(phi.at(i, j) - phi.at(j, i)));
      CHECK(worst < 1e-12);
    }
  }
}

TEST_CASE("initialization: constants give plain equilibrium; round-trip recovers phi0") {
  const DiffusionProblem prob = periodic_problem(0.05, 0.0);
  const Discretization disc = Discretization::make(prob, 0.05, 0.005);
  const RelaxationSet set = derive_fourth_order(disc.epsilon, 1.0);
  DistributionField lb(prob, disc, set);
  InitialData d;
  ScalarField proto(disc.nx, disc.ny, 0, 0, disc.dx);
  d.phi = d.ddx = d.ddy = d.lap = proto;
  for (double& v : d.phi.v) v = 2.5;
  lb.initialize(d);
  const auto f = lb.populations(3, 4);
  const auto feq = equilibrium(2.5, set);
  for (int i = 0; i < 5; ++i) CHECK(f[i] == doctest::Approx(feq[i]).epsilon(1e-15));

  // smooth field round-trip, with sources active
  const DiffusionProblem prob2 = periodic_problem(0.05, 1.3, -0.4);
  DistributionField lb2(prob2, disc, set);
  const InitialData seed = smooth_seed(disc, prob2);
  lb2.initialize(seed);
  CHECK(max_abs_diff(lb2.macroscopic(), seed.phi) < 1e-12);
}

TEST_CASE("initialization requires nonzero relaxation rates") {
  const DiffusionProblem prob = periodic_problem(0.05);
  const Discretization disc = Discretization::make(prob, 0.1, 0.01);
  RelaxationSet set = derive_fourth_order(disc.epsilon, 1.0);
  set.s1 = 0.0;  // conserved-moment rate is unconstrained by validate()
  DistributionField lb(prob, disc, set);
  InitialData d;
  ScalarField proto(disc.nx, disc.ny, 0, 0, disc.dx);
  d.phi = d.ddx = d.ddy = d.lap = proto;
  CHECK_THROWS_AS(lb.initialize(d), SingularRelaxation);
}

TEST_CASE("macroscopic arithmetic") {
  {
    // sum f = 1, R = 2, dt = 0.5 -> phi = 1.5
    DiffusionProblem p = periodic_problem(0.1, 2.0);
    const Discretization disc = Discretization::make(p, 1.0, 0.5);
    RelaxationSet s;
    s.w0 = 0.5;
    s.s2 = s.s4 = s.s5 = 1.0;
    DistributionField lb(p, disc, s);
    lb.set_populations(0, 0, {0.2, 0.2, 0.2, 0.2, 0.2});
    CHECK(lb.phi_at(0, 0) == doctest::Approx(1.5).epsilon(1e-15));
  }
  {
    // sum f = 1, R = 0, zeta = 1, dt = 1 -> phi = 1/(1 - 0.5) = 2
    DiffusionProblem p = periodic_problem(0.1, 0.0, 1.0);
    const Discretization disc = Discretization::make(p, 1.0, 1.0);
    RelaxationSet s;
    s.w0 = 0.5;
    s.s2 = s.s4 = s.s5 = 1.0;
    DistributionField lb(p, disc, s);
    lb.set_populations(0, 0, {0.2, 0.2, 0.2, 0.2, 0.2});
    CHECK(lb.phi_at(0, 0) == doctest::Approx(2.0).epsilon(1e-15));
  }
  {
    // zeta dt = 2 is singular
    DiffusionProblem p = periodic_problem(0.1, 0.0, 2.0);
    const Discretization disc = Discretization::make(p, 1.0, 1.0);
    RelaxationSet s;
    s.w0 = 0.5;
    s.s2 = s.s4 = s.s5 = 1.0;
    CHECK_THROWS_AS(DistributionField(p, disc, s), DegenerateScaling);
  }
}

TEST_CASE("boundary closure: constants, corner derivatives, missing data") {
  // steady constant boundary: closure returns equilibrium populations
  DiffusionProblem p;
  p.kappa = 0.01;
  p.boundary = BoundaryKind::dirichlet;
  const Discretization disc = Discretization::make(p, 0.1, 0.1);
  const RelaxationSet set = derive_fourth_order(disc.epsilon, 1.0);
  BoundaryData bd;
  auto zero = [](double, double, double) { return 0.0; };
  bd.value = [](double, double, double) { return 4.2; };
  bd.ddt = bd.ddx = bd.ddy = bd.dtt = bd.dtx = bd.dty = bd.dxx = bd.dxy = bd.dyy = zero;
  const auto f = boundary_closure_populations(p, disc, set, bd, 0.0, 0.0, 0.3);
  const auto feq = equilibrium(4.2, set);
  for (int i = 0; i < 5; ++i) CHECK(f[i] == doctest::Approx(feq[i]).epsilon(1e-14));

  // Example 2 upper-left corner at t = 0: d/dx phi(0, 1, 0) = -exp(-1)
  const AnalyticSolution ex2 = AnalyticSolution::example2(0.01);
  CHECK(ex2.ddx(0.0, 1.0, 0.0) == doctest::Approx(-std::exp(-1.0)).epsilon(1e-14));
  // and d/dx f_eq = w_i * d/dx phi for the equilibrium ansatz
  const auto dfeq = equilibrium(ex2.ddx(0.0, 1.0, 0.0), set);
  CHECK(dfeq[1] == doctest::Approx(set.w_side() * -std::exp(-1.0)).epsilon(1e-14));

  // missing derivative data
  BoundaryData incomplete;
  incomplete.value = bd.value;
  DistributionField lb(p, disc, set);
  CHECK_THROWS_AS(lb.set_boundary_data(incomplete), BoundaryError);
  CHECK_THROWS_AS(lb.step(), BoundaryError);  // Dirichlet stepping without data
}

TEST_CASE("field snapshots: csv and binary round-trip") {
  ScalarField f(5, 4, -1.0, 0.5, 0.25);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1, 1);
  for (double& v : f.v) v = u(rng);
  const std::string base = "/tmp/lbfd_test_field";
  write_field_binary(base + ".bin", f, 17, 0.125);
  std::int64_t n = 0;
  double dt = 0;
  const ScalarField g = read_field_binary(base + ".bin", &n, &dt);
  CHECK(n == 17);
  CHECK(dt == 0.125);
  CHECK(g.nx == 5);
  CHECK(g.ny == 4);
  CHECK(g.dx == 0.25);
  CHECK(max_abs_diff(f, g) == 0.0);

  write_field_csv(base + ".csv", f, "header line");
  std::FILE* fp = std::fopen((base + ".csv").c_str(), "r");
  REQUIRE(fp);
  char line[256];
  REQUIRE(std::fgets(line, sizeof line, fp));
  CHECK(std::string(line).rfind("# header", 0) == 0);
  std::fclose(fp);
}
