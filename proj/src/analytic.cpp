// SPDX-License-Identifier: Apache-2.0
#include "lbfd/analytic.hpp"

#include <cmath>

namespace lbfd {

namespace {
const double kPi = std::acos(-1.0);
}

BoundaryData AnalyticSolution::boundary_data() const {
  BoundaryData b;
  b.value = value;
  b.ddt = ddt;
  b.ddx = ddx;
  b.ddy = ddy;
  b.dtt = dtt;
  b.dtx = dtx;
  b.dty = dty;
  b.dxx = dxx;
  b.dxy = dxy;
  b.dyy = dyy;
  return b;
}

InitialData AnalyticSolution::initial_data(const Discretization& disc) const {
  InitialData d;
  ScalarField proto(disc.nx, disc.ny, problem.x0, problem.y0, disc.dx);
  d.phi = proto;
  d.ddx = proto;
  d.ddy = proto;
  d.lap = proto;
  for (int j = 0; j < disc.ny; ++j)
    for (int i = 0; i < disc.nx; ++i) {
      const double x = proto.x(i), y = proto.y(j);
      d.phi.at(i, j) = value(x, y, 0.0);
      d.ddx.at(i, j) = ddx(x, y, 0.0);
      d.ddy.at(i, j) = ddy(x, y, 0.0);
      d.lap.at(i, j) = lap(x, y, 0.0);
    }
  return d;
}

double AnalyticSolution::pde_residual(double x, double y, double t) const {
  return std::abs(ddt(x, y, t) - problem.kappa * lap(x, y, t) -
                  problem.source_linear * value(x, y, t) - problem.source_const);
}

AnalyticSolution AnalyticSolution::example1(double kappa) {
  AnalyticSolution s;
  s.id = "example1";
  s.problem.kappa = kappa;
  s.problem.source_const = kPi * kPi;
  s.problem.lx = s.problem.ly = 2.0;
  s.problem.boundary = BoundaryKind::periodic;
  const double k2p = 2.0 * kappa * kPi * kPi;
  auto E = [k2p](double t) { return std::exp(-k2p * t); };
  s.value = [E](double x, double y, double t) {
    return std::sin(kPi * x) * std::sin(kPi * y) * E(t) + kPi * kPi * t;
  };
  s.ddt = [E, k2p](double x, double y, double t) {
    return -k2p * std::sin(kPi * x) * std::sin(kPi * y) * E(t) + kPi * kPi;
  };
  s.ddx = [E](double x, double y, double t) {
    return kPi * std::cos(kPi * x) * std::sin(kPi * y) * E(t);
  };
  s.ddy = [E](double x, double y, double t) {
    return kPi * std::sin(kPi * x) * std::cos(kPi * y) * E(t);
  };
  s.dtt = [E, k2p](double x, double y, double t) {
    return k2p * k2p * std::sin(kPi * x) * std::sin(kPi * y) * E(t);
  };
  s.dtx = [E, k2p](double x, double y, double t) {
    return -k2p * kPi * std::cos(kPi * x) * std::sin(kPi * y) * E(t);
  };
  s.dty = [E, k2p](double x, double y, double t) {
    return -k2p * kPi * std::sin(kPi * x) * std::cos(kPi * y) * E(t);
  };
  s.dxx = [E](double x, double y, double t) {
    return -kPi * kPi * std::sin(kPi * x) * std::sin(kPi * y) * E(t);
  };
  s.dyy = s.dxx;
  s.dxy = [E](double x, double y, double t) {
    return kPi * kPi * std::cos(kPi * x) * std::cos(kPi * y) * E(t);
  };
  s.lap = [E](double x, double y, double t) {
    return -2.0 * kPi * kPi * std::sin(kPi * x) * std::sin(kPi * y) * E(t);
  };
  return s;
}

AnalyticSolution AnalyticSolution::example2(double kappa) {
  AnalyticSolution s;
  s.id = "example2";
  s.problem.kappa = kappa;
  s.problem.lx = s.problem.ly = 1.0;
  s.problem.boundary = BoundaryKind::dirichlet;
  auto v = [kappa](double x, double y, double t) {
    return std::exp(-(x + y) + 2.0 * kappa * t);
  };
  s.value = v;
  s.ddt = [v, kappa](double x, double y, double t) { return 2 * kappa * v(x, y, t); };
  s.ddx = [v](double x, double y, double t) { return -v(x, y, t); };
  s.ddy = s.ddx;
  s.dtt = [v, kappa](double x, double y, double t) {
    return 4 * kappa * kappa * v(x, y, t);
  };
  s.dtx = [v, kappa](double x, double y, double t) { return -2 * kappa * v(x, y, t); };
  s.dty = s.dtx;
  s.dxx = v;
  s.dyy = v;
  s.dxy = v;
  s.lap = [v](double x, double y, double t) { return 2 * v(x, y, t); };
  return s;
}

AnalyticSolution AnalyticSolution::example3(double kappa) {
  AnalyticSolution s;
  s.id = "example3";
  s.problem.kappa = kappa;
  s.problem.source_linear = -kPi * kPi * (1.0 - kappa);
  s.problem.lx = s.problem.ly = 2.0;
  s.problem.x0 = s.problem.y0 = -1.0;
  s.problem.boundary = BoundaryKind::periodic;
  const double r = kPi * kPi * (1.0 + kappa);
  auto E = [r](double t) { return std::exp(-r * t); };
  s.value = [E](double x, double y, double t) {
    return std::sin(kPi * x) * std::sin(kPi * y) * E(t);
  };
  s.ddt = [E, r](double x, double y, double t) {
    return -r * std::sin(kPi * x) * std::sin(kPi * y) * E(t);
  };
  s.ddx = [E](double x, double y, double t) {
    return kPi * std::cos(kPi * x) * std::sin(kPi * y) * E(t);
  };
  s.ddy = [E](double x, double y, double t) {
    return kPi * std::sin(kPi * x) * std::cos(kPi * y) * E(t);
  };
  s.dtt = [E, r](double x, double y, double t) {
    return r * r * std::sin(kPi * x) * std::sin(kPi * y) * E(t);
  };
  s.dtx = [E, r](double x, double y, double t) {
    return -r * kPi * std::cos(kPi * x) * std::sin(kPi * y) * E(t);
  };
  s.dty = [E, r](double x, double y, double t) {
    return -r * kPi * std::sin(kPi * x) * std::cos(kPi * y) * E(t);
  };
  s.dxx = [E](double x, double y, double t) {
    return -kPi * kPi * std::sin(kPi * x) * std::sin(kPi * y) * E(t);
  };
  s.dyy = s.dxx;
  s.dxy = [E](double x, double y, double t) {
    return kPi * kPi * std::cos(kPi * x) * std::cos(kPi * y) * E(t);
  };
  s.lap = [E](double x, double y, double t) {
    return -2.0 * kPi * kPi * std::sin(kPi * x) * std::sin(kPi * y) * E(t);
  };
  return s;
}

AnalyticSolution AnalyticSolution::by_id(int example_id, double kappa) {
  switch (example_id) {
    case 1: return example1(kappa);
    case 2: return example2(kappa);
    case 3: return example3(kappa);
    default: throw NoAnalyticSolution("unknown example id");
  }
}

}  // namespace lbfd
