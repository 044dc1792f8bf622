// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "lbfd/error.hpp"

namespace lbfd {

enum class MatrixKind { orthogonal, natural };
enum class BoundaryKind { periodic, dirichlet };

/// 2-D diffusion problem  d_t phi = kappa Lap phi + zeta phi + R
/// on [x0, x0+lx] x [y0, y0+ly].
struct DiffusionProblem {
  double kappa = 0.0;
  double source_const = 0.0;   // R
  double source_linear = 0.0;  // zeta (0 for the plain equation)
  double lx = 1.0, ly = 1.0;
  double x0 = 0.0, y0 = 0.0;
  BoundaryKind boundary = BoundaryKind::periodic;

  void validate() const;  // throws RangeError on kappa<=0, lx<=0, ly<=0
};

/// Uniform lattice: dx = dy, node counts, lattice velocity c = dx/dt and the
/// discretization parameter epsilon = kappa dt / dx^2.
struct Discretization {
  double dx = 0.0, dt = 0.0;
  int nx = 0, ny = 0;
  double c = 0.0;
  double epsilon = 0.0;

  /// Builds the grid for a problem. Periodic grids store lx/dx nodes per
  /// side (no duplicated edge); Dirichlet grids store lx/dx + 1 including
  /// both boundaries. dx must divide the extents.
  static Discretization make(const DiffusionProblem& prob, double dx, double dt);

  double x(int i, const DiffusionProblem& p) const { return p.x0 + i * dx; }
  double y(int j, const DiffusionProblem& p) const { return p.y0 + j * dx; }
};

/// Relaxation rates and rest weight. s1 acts on the conserved moment and is a
/// free spectator (default 1). For the linear-source variants s2_modified
/// carries the modified rate that enters the diffusion relation; s2 is the
/// rate actually used in the relaxation matrix.
struct RelaxationSet {
  double s1 = 1.0;
  double s2 = 0.0;
  double s4 = 0.0;
  double s5 = 0.0;
  double w0 = 0.0;
  MatrixKind matrix_kind = MatrixKind::orthogonal;
  std::optional<double> s2_modified;

  double w_side() const { return 0.25 * (1.0 - w0); }
  /// Diffusion-relevant rate: the modified one when present.
  double s2_effective() const { return s2_modified.value_or(s2); }
  double epsilon() const {
    return 0.5 * (1.0 - w0) * (1.0 / s2_effective() - 0.5);
  }

  void validate() const;  // throws RangeError
};

/// Fourth-order parameter family for the orthogonal transform matrix:
///   w0 = (s5 + (6 s5 - 12) eps)/s5,  s2 = (6 s5 - 12)/(s5 - 6),
///   s4 = (12 eps s5^2 - 24 eps s5 + 2 s5^2)/(2 s5 - 36 eps + 24 eps s5 + eps s5^2).
RelaxationSet derive_fourth_order(double epsilon, double s5);

/// Fourth-order family for the natural transform matrix:
///   w0 = 1 - 4 sqrt(3) eps, s2 = 6/(3+sqrt 3), s4 = s5 = 6/(2 sqrt 3 + 3).
RelaxationSet derive_fourth_order_natural(double epsilon);

/// Linear-source variant 1: w0 = 1 - 4 eps, s2 = 1, s4 = (6-24 eps)/(5-12 eps),
/// s5 = 6/5.
RelaxationSet derive_linear_source_v1(double epsilon);

/// Linear-source variant 2: w0, s2bar, s4 as the fourth-order family; the
/// actual s2 solves the modified-rate relation (see actual_s2).
RelaxationSet derive_linear_source_v2(double epsilon, double s5, double zeta, double dt);

/// Natural-matrix linear-source variant: s2bar = 6/(3+sqrt 3), rest as the
/// natural family.
RelaxationSet derive_linear_source_natural(double epsilon, double zeta, double dt);

/// Solves (1/s2 - 1/2) - (1/s2^2 - 1/s2) zeta dt = 1/s2bar - 1/2 for s2.
/// zeta*dt = 0 returns s2bar exactly. Throws NegativeRadicand.
double actual_s2(double s2bar, double zeta, double dt);

/// kappa = (1-w0)/2 * c^2 * (1/s2 - 1/2) * dt, with the effective rate.
double kappa_of(const RelaxationSet& set, const Discretization& disc);

const char* to_string(MatrixKind k);
const char* to_string(BoundaryKind k);

}  // namespace lbfd
