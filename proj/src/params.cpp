// SPDX-License-Identifier: Apache-2.0
#include "lbfd/params.hpp"

#include <cmath>
#include <sstream>

namespace lbfd {

namespace {

void check_open(double v, double lo, double hi, const char* name) {
  if (!(v > lo) || !(v < hi) || !std::isfinite(v)) {
    std::ostringstream os;
    os << name << " = " << v << " outside (" << lo << ", " << hi << ")";
    throw RangeError(os.str());
  }
}

}  // namespace

void DiffusionProblem::validate() const {
  if (!(kappa > 0.0)) throw RangeError("kappa must be > 0");
  if (!(lx > 0.0) || !(ly > 0.0)) throw RangeError("domain extents must be > 0");
}

Discretization Discretization::make(const DiffusionProblem& prob, double dx, double dt) {
  prob.validate();
  if (!(dx > 0.0) || !(dt > 0.0)) throw RangeError("dx and dt must be > 0");
  Discretization d;
  d.dx = dx;
  d.dt = dt;
  d.c = dx / dt;
  d.epsilon = prob.kappa * dt / (dx * dx);
  const double cx = prob.lx / dx, cy = prob.ly / dx;
  const long mx = std::lround(cx), my = std::lround(cy);
  if (std::abs(cx - double(mx)) > 1e-9 * mx || std::abs(cy - double(my)) > 1e-9 * my)
    throw RangeError("dx does not divide the domain extents");
  const bool per = prob.boundary == BoundaryKind::periodic;
  d.nx = int(per ? mx : mx + 1);
  d.ny = int(per ? my : my + 1);
  return d;
}

void RelaxationSet::validate() const {
  check_open(s2, 0.0, 2.0, "s2");
  check_open(s4, 0.0, 2.0, "s4");
  check_open(s5, 0.0, 2.0, "s5");
  check_open(w0, 0.0, 1.0, "w0");
  if (s2_modified) check_open(*s2_modified, 0.0, 2.0, "s2_modified");
}

RelaxationSet derive_fourth_order(double epsilon, double s5) {
  if (!(epsilon > 0.0)) throw RangeError("epsilon must be > 0");
  check_open(s5, 0.0, 2.0, "s5");
  RelaxationSet r;
  r.s5 = s5;
  r.w0 = (s5 + (6.0 * s5 - 12.0) * epsilon) / s5;
  r.s2 = (6.0 * s5 - 12.0) / (s5 - 6.0);
  r.s4 = (12.0 * epsilon * s5 * s5 - 24.0 * epsilon * s5 + 2.0 * s5 * s5) /
         (2.0 * s5 - 36.0 * epsilon + 24.0 * epsilon * s5 + epsilon * s5 * s5);
  r.validate();
  return r;
}

RelaxationSet derive_fourth_order_natural(double epsilon) {
  if (!(epsilon > 0.0)) throw RangeError("epsilon must be > 0");
  const double r3 = std::sqrt(3.0);
  RelaxationSet r;
  r.matrix_kind = MatrixKind::natural;
  r.w0 = 1.0 - 4.0 * r3 * epsilon;
  r.s2 = 6.0 / (3.0 + r3);
  r.s4 = 6.0 / (2.0 * r3 + 3.0);
  r.s5 = r.s4;
  r.validate();
  return r;
}

RelaxationSet derive_linear_source_v1(double epsilon) {
  if (!(epsilon > 0.0)) throw RangeError("epsilon must be > 0");
  RelaxationSet r;
  r.w0 = 1.0 - 4.0 * epsilon;
  r.s2 = 1.0;
  r.s4 = (6.0 - 24.0 * epsilon) / (5.0 - 12.0 * epsilon);
  r.s5 = 1.2;
  r.validate();
  return r;
}

double actual_s2(double s2bar, double zeta, double dt) {
  const double zdt = zeta * dt;
  if (zdt == 0.0) return s2bar;  // 0/0 limit of the root formula
  const double rad = (s2bar - 4.0 * zdt + zdt * zdt * s2bar + 2.0 * zdt * s2bar) / s2bar;
  if (rad < 0.0) {
    std::ostringstream os;
    os << "radicand " << rad << " < 0 for s2bar=" << s2bar << ", zeta*dt=" << zdt;
    throw NegativeRadicand(os.str());
  }
  return 2.0 * zdt / (zdt - std::sqrt(rad) + 1.0);
}

RelaxationSet derive_linear_source_v2(double epsilon, double s5, double zeta, double dt) {
  RelaxationSet r = derive_fourth_order(epsilon, s5);
  r.s2_modified = r.s2;
  r.s2 = actual_s2(*r.s2_modified, zeta, dt);
  r.validate();
  return r;
}

RelaxationSet derive_linear_source_natural(double epsilon, double zeta, double dt) {
  RelaxationSet r = derive_fourth_order_natural(epsilon);
  r.s2_modified = r.s2;
  r.s2 = actual_s2(*r.s2_modified, zeta, dt);
  r.validate();
  return r;
}

double kappa_of(const RelaxationSet& set, const Discretization& disc) {
  const double cs2 = 0.5 * (1.0 - set.w0) * disc.c * disc.c;
  return cs2 * (1.0 / set.s2_effective() - 0.5) * disc.dt;
}

const char* to_string(MatrixKind k) {
  return k == MatrixKind::orthogonal ? "orthogonal" : "natural";
}

const char* to_string(BoundaryKind k) {
  return k == BoundaryKind::periodic ? "periodic" : "dirichlet";
}

}  // namespace lbfd
