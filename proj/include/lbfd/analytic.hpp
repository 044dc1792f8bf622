// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>

#include "lbfd/kinetic.hpp"
#include "lbfd/params.hpp"

namespace lbfd {

/// Closed-form solution of one of the benchmark problems, with every
/// derivative the kinetic initialization and boundary closure need.
struct AnalyticSolution {
  using Fn = std::function<double(double, double, double)>;

  std::string id;
  DiffusionProblem problem;  // kappa, sources, domain, boundary kind
  Fn value, ddt, ddx, ddy;
  Fn dtt, dtx, dty, dxx, dxy, dyy;
  Fn lap;

  double operator()(double x, double y, double t) const { return value(x, y, t); }

  BoundaryData boundary_data() const;
  InitialData initial_data(const Discretization& disc) const;

  /// |d_t phi - kappa lap phi - zeta phi - R| from the stored evaluators.
  double pde_residual(double x, double y, double t) const;

  /// phi(x,y,t) = sin(pi x) sin(pi y) exp(-2 kappa pi^2 t) + pi^2 t
  /// on [0,2]^2, periodic, R = pi^2.
  static AnalyticSolution example1(double kappa);
  /// phi = exp(-(x+y) + 2 kappa t) on [0,1]^2, Dirichlet, R = 0.
  static AnalyticSolution example2(double kappa);
  /// phi = sin(pi x) sin(pi y) exp(-pi^2 (1+kappa) t) on [-1,1]^2, periodic,
  /// zeta = -pi^2 (1 - kappa).
  static AnalyticSolution example3(double kappa);

  static AnalyticSolution by_id(int example_id, double kappa);
};

}  // namespace lbfd
