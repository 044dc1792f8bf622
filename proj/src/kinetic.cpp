// SPDX-License-Identifier: Apache-2.0
#include "lbfd/kinetic.hpp"

#include <cmath>
#include <cstring>

namespace lbfd {

std::array<double, 5> equilibrium(double phi, const RelaxationSet& set) {
  const double ws = set.w_side() * phi;
  return {set.w0 * phi, ws, ws, ws, ws};
}

DistributionField::DistributionField(const DiffusionProblem& prob, const Discretization& disc,
                                     const RelaxationSet& set, CollisionVariant variant)
    : prob_(prob), disc_(disc), set_(set), variant_(variant) {
  set_.validate();
  prob_.validate();
  if (prob_.source_linear * disc_.dt == 2.0)
    throw DegenerateScaling("zeta * dt == 2 makes the macroscopic scaling singular");

  const MatrixKind kind =
      variant == CollisionVariant::natural_sn ? MatrixKind::natural : set_.matrix_kind;
  const Mat5 m = transform_matrix(kind, disc_.c);
  const Mat5 mi = transform_inverse(kind, disc_.c);
  const Mat5 s = variant == CollisionVariant::natural_sn
                     ? relaxation_natural_equivalent(set_, disc_.c)
                     : relaxation_diagonal(set_);

  const Mat5 a = mi * s * m;
  const Mat5 b = mi * (Mat5::Identity() - 0.5 * s) * m;
  const Vec5 w = weight_vector(set_);
  const Vec5 aw = a * w;
  const Vec5 bw = b * w;
  for (int i = 0; i < 5; ++i) {
    aw_[i] = aw(i);
    bw_[i] = bw(i);
    w_[i] = w(i);
    fixv_[i] = mi(i, 0);
    for (int j = 0; j < 5; ++j) a_[i][j] = a(i, j);
  }
  // Lambda^-1 needs every rate nonzero; defer the check to first use so that
  // plain stepping works for any legal set.
  bool singular = set_.s1 == 0.0 || set_.s2 == 0.0 || set_.s4 == 0.0 || set_.s5 == 0.0;
  if (!singular) {
    Mat5 sinv = Mat5::Zero();
    sinv.diagonal() << 1.0 / set_.s1, 1.0 / set_.s2, 1.0 / set_.s2, 1.0 / set_.s4,
        1.0 / set_.s5;
    const Mat5 li = variant == CollisionVariant::natural_sn
                        ? Mat5(mi * Mat5(s.inverse()) * m)
                        : Mat5(mi * sinv * m);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) linv_[i][j] = li(i, j);
  } else {
    for (auto& row : linv_)
      for (double& x : row) x = std::nan("");
  }

  diag_fast_ = (kind == MatrixKind::orthogonal) && variant != CollisionVariant::natural_sn;
  e4_ = (1.0 - 5.0 * set_.w0) * disc_.c * disc_.c;

  const size_t nn = size_t(disc_.nx) * disc_.ny;
  for (int k = 0; k < 5; ++k) {
    f_[k].assign(nn, 0.0);
    post_[k].assign(nn, 0.0);
  }
}

std::array<double, 5> DistributionField::asymptotic_populations(
    double phi, double dphi_t, double dphi_x, double dphi_y, const double* second,
    bool pin_conserved) const {
  if (set_.s1 == 0.0 || set_.s2 == 0.0 || set_.s4 == 0.0 || set_.s5 == 0.0)
    throw SingularRelaxation("all relaxation rates must be nonzero");
  const double c = disc_.c, dt = disc_.dt;
  const double zeta = prob_.source_linear, rr = prob_.source_const;
  const double g = zeta * phi + rr;

  double dphi[5], rvec[5];
  for (int i = 0; i < 5; ++i) {
    dphi[i] = w_[i] * (dphi_t + c * (VelocitySet::ex[i] * dphi_x + VelocitySet::ey[i] * dphi_y));
    rvec[i] = w_[i] * g;
  }
  std::array<double, 5> f;
  for (int i = 0; i < 5; ++i) {
    double acc = w_[i] * phi - 0.5 * dt * rvec[i];
    for (int j = 0; j < 5; ++j) acc += dt * linv_[i][j] * (rvec[j] - dphi[j]);
    f[i] = acc;
  }
  if (second) {
    // dt^2 Linv D [(Linv - I/2) D f_eq]; second = (dtt,dtx,dty,dxx,dxy,dyy)
    const double dtt = second[0], dtx = second[1], dty = second[2];
    const double dxx = second[3], dxy = second[4], dyy = second[5];
    double q[5];
    for (int j = 0; j < 5; ++j) {
      const double cjx = c * VelocitySet::ex[j], cjy = c * VelocitySet::ey[j];
      double acc = 0.0;
      for (int k = 0; k < 5; ++k) {
        const double ckx = c * VelocitySet::ex[k], cky = c * VelocitySet::ey[k];
        const double dd = dtt + (cjx + ckx) * dtx + (cjy + cky) * dty + cjx * ckx * dxx +
                          (cjx * cky + cjy * ckx) * dxy + cjy * cky * dyy;
        const double bjk = linv_[j][k] - (j == k ? 0.5 : 0.0);
        acc += bjk * w_[k] * dd;
      }
      q[j] = acc;
    }
    for (int i = 0; i < 5; ++i) {
      double acc = 0.0;
      for (int j = 0; j < 5; ++j) acc += linv_[i][j] * q[j];
      f[i] += dt * dt * acc;
    }
  }
  if (pin_conserved) {
    const double target = (1.0 - 0.5 * zeta * dt) * phi - 0.5 * dt * rr;
    const double delta = target - (f[0] + f[1] + f[2] + f[3] + f[4]);
    for (int i = 0; i < 5; ++i) f[i] += delta * fixv_[i];
  }
  return f;
}

void DistributionField::initialize(const InitialData& data) {
  const int nx = disc_.nx, ny = disc_.ny;
  if (data.phi.nx != nx || data.phi.ny != ny) throw ShapeMismatch("initial data shape");
  const double kappa = prob_.kappa, zeta = prob_.source_linear, rr = prob_.source_const;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const double phi = data.phi.at(i, j);
      const double dphi_t = kappa * data.lap.at(i, j) + zeta * phi + rr;
      const auto f = asymptotic_populations(phi, dphi_t, data.ddx.at(i, j), data.ddy.at(i, j),
                                            nullptr, true);
      const size_t k = idx(i, j);
      for (int p = 0; p < 5; ++p) f_[p][k] = f[p];
    }
  n_ = 0;
}

void DistributionField::set_boundary_data(BoundaryData data) {
  if (!data.complete()) throw BoundaryError("boundary data incomplete");
  bdata_ = std::move(data);
  has_bdata_ = true;
}

void DistributionField::collide() {
  const int nx = disc_.nx, ny = disc_.ny;
  const double dt = disc_.dt, rr = prob_.source_const, zeta = prob_.source_linear;
  const double half_dt_r = 0.5 * dt * rr;
  const double invscale = 1.0 / (1.0 - 0.5 * zeta * dt);
  const double* f0 = f_[0].data();
  const double* f1 = f_[1].data();
  const double* f2 = f_[2].data();
  const double* f3 = f_[3].data();
  const double* f4 = f_[4].data();
  double* p0 = post_[0].data();
  double* p1 = post_[1].data();
  double* p2 = post_[2].data();
  double* p3 = post_[3].data();
  double* p4 = post_[4].data();
  const size_t nn = size_t(nx) * ny;

  if (diag_fast_) {
    const double c = disc_.c, c2 = c * c;
    const double s1 = set_.s1, s2 = set_.s2, s4 = set_.s4, s5 = set_.s5;
    const double k2 = 1.0 - s2, k5 = 1.0 - s5;
    const double q1 = dt * (1.0 - 0.5 * s1), q4 = dt * (1.0 - 0.5 * s4);
    const double e4 = e4_;
    for (size_t k = 0; k < nn; ++k) {
      const double m1 = f0[k] + f1[k] + f2[k] + f3[k] + f4[k];
      const double phi = (m1 + half_dt_r) * invscale;
      const double g = zeta * phi + rr;
      const double m2 = c * (f1[k] - f3[k]);
      const double m3 = c * (f2[k] - f4[k]);
      const double m4 = c2 * (-4.0 * f0[k] + f1[k] + f2[k] + f3[k] + f4[k]);
      const double m5 = c2 * (f1[k] - f2[k] + f3[k] - f4[k]);
      const double m1s = m1 - s1 * (m1 - phi) + q1 * g;
      const double m2s = k2 * m2;
      const double m3s = k2 * m3;
      const double m4s = m4 - s4 * (m4 - e4 * phi) + q4 * e4 * g;
      const double m5s = k5 * m5;
      const double t1 = 0.2 * m1s, t4 = m4s / (20.0 * c2), t5 = m5s / (4.0 * c2);
      const double u2 = m2s / (2.0 * c), u3 = m3s / (2.0 * c);
      p0[k] = t1 - m4s / (5.0 * c2);
      p1[k] = t1 + u2 + t4 + t5;
      p2[k] = t1 + u3 + t4 - t5;
      p3[k] = t1 - u2 + t4 + t5;
      p4[k] = t1 - u3 + t4 - t5;
    }
  } else {
    for (size_t k = 0; k < nn; ++k) {
      const double v0 = f0[k], v1 = f1[k], v2 = f2[k], v3 = f3[k], v4 = f4[k];
      const double phi = (v0 + v1 + v2 + v3 + v4 + half_dt_r) * invscale;
      const double g = dt * (zeta * phi + rr);
      p0[k] = v0 - (a_[0][0] * v0 + a_[0][1] * v1 + a_[0][2] * v2 + a_[0][3] * v3 + a_[0][4] * v4) + phi * aw_[0] + g * bw_[0];
      p1[k] = v1 - (a_[1][0] * v0 + a_[1][1] * v1 + a_[1][2] * v2 + a_[1][3] * v3 + a_[1][4] * v4) + phi * aw_[1] + g * bw_[1];
      p2[k] = v2 - (a_[2][0] * v0 + a_[2][1] * v1 + a_[2][2] * v2 + a_[2][3] * v3 + a_[2][4] * v4) + phi * aw_[2] + g * bw_[2];
      p3[k] = v3 - (a_[3][0] * v0 + a_[3][1] * v1 + a_[3][2] * v2 + a_[3][3] * v3 + a_[3][4] * v4) + phi * aw_[3] + g * bw_[3];
      p4[k] = v4 - (a_[4][0] * v0 + a_[4][1] * v1 + a_[4][2] * v2 + a_[4][3] * v3 + a_[4][4] * v4) + phi * aw_[4] + g * bw_[4];
    }
  }
}

void DistributionField::stream() {
  const int nx = disc_.nx, ny = disc_.ny;
  f_[0] = post_[0];
  // +x: f1(i) <- post1(i-1), wrap at i = 0
  for (int j = 0; j < ny; ++j) {
    const double* src = post_[1].data() + size_t(j) * nx;
    double* dst = f_[1].data() + size_t(j) * nx;
    std::memmove(dst + 1, src, sizeof(double) * size_t(nx - 1));
    dst[0] = src[nx - 1];
  }
  // -x
  for (int j = 0; j < ny; ++j) {
    const double* src = post_[3].data() + size_t(j) * nx;
    double* dst = f_[3].data() + size_t(j) * nx;
    std::memmove(dst, src + 1, sizeof(double) * size_t(nx - 1));
    dst[nx - 1] = src[0];
  }
  // +y: row j <- row j-1
  for (int j = 0; j < ny; ++j) {
    const int js = (j - 1 + ny) % ny;
    std::memcpy(f_[2].data() + size_t(j) * nx, post_[2].data() + size_t(js) * nx,
                sizeof(double) * size_t(nx));
  }
  // -y
  for (int j = 0; j < ny; ++j) {
    const int js = (j + 1) % ny;
    std::memcpy(f_[4].data() + size_t(j) * nx, post_[4].data() + size_t(js) * nx,
                sizeof(double) * size_t(nx));
  }
}

std::array<double, 5> DistributionField::closure_at(double x, double y, double t) const {
  if (!has_bdata_) throw BoundaryError("Dirichlet problem without boundary data");
  const double second[6] = {bdata_.dtt(x, y, t), bdata_.dtx(x, y, t), bdata_.dty(x, y, t),
                            bdata_.dxx(x, y, t), bdata_.dxy(x, y, t), bdata_.dyy(x, y, t)};
  return asymptotic_populations(bdata_.value(x, y, t), bdata_.ddt(x, y, t),
                                bdata_.ddx(x, y, t), bdata_.ddy(x, y, t), second, false);
}

void DistributionField::close_boundary(double t) {
  if (!has_bdata_) throw BoundaryError("Dirichlet problem without boundary data");
  const int nx = disc_.nx, ny = disc_.ny;
  // Edge nodes have one unknown population: pin it so the conserved moment
  // reproduces the Dirichlet value exactly. Corners have two unknowns and use
  // the asymptotic closure for both.
  const double zdt = prob_.source_linear * disc_.dt;
  const double half_dt_r = 0.5 * disc_.dt * prob_.source_const;
  auto pin = [&](int i, int j, int unknown) {
    const size_t k = idx(i, j);
    const double target =
        (1.0 - 0.5 * zdt) * bdata_.value(disc_.x(i, prob_), disc_.y(j, prob_), t) - half_dt_r;
    double known = 0.0;
    for (int p = 0; p < 5; ++p)
      if (p != unknown) known += f_[p][k];
    f_[unknown][k] = target - known;
  };
  for (int j = 1; j < ny - 1; ++j) {
    pin(0, j, 1);
    pin(nx - 1, j, 3);
  }
  for (int i = 1; i < nx - 1; ++i) {
    pin(i, 0, 2);
    pin(i, ny - 1, 4);
  }
  auto corner = [&](int i, int j, int u1, int u2) {
    const auto f = closure_at(disc_.x(i, prob_), disc_.y(j, prob_), t);
    const size_t k = idx(i, j);
    f_[u1][k] = f[u1];
    f_[u2][k] = f[u2];
  };
  corner(0, 0, 1, 2);
  corner(nx - 1, 0, 3, 2);
  corner(0, ny - 1, 1, 4);
  corner(nx - 1, ny - 1, 3, 4);
}

void DistributionField::step() {
  if (prob_.boundary == BoundaryKind::dirichlet && !has_bdata_)
    throw BoundaryError("Dirichlet problem without boundary data");
  collide();
  stream();
  ++n_;
  if (prob_.boundary == BoundaryKind::dirichlet) close_boundary(n_ * disc_.dt);
}

void DistributionField::run(int steps) {
  for (int s = 0; s < steps; ++s) step();
}

ScalarField DistributionField::macroscopic() const {
  ScalarField out(disc_.nx, disc_.ny, prob_.x0, prob_.y0, disc_.dx);
  const double half_dt_r = 0.5 * disc_.dt * prob_.source_const;
  const double scale = 1.0 - 0.5 * prob_.source_linear * disc_.dt;
  for (size_t k = 0; k < out.v.size(); ++k)
    out.v[k] = (f_[0][k] + f_[1][k] + f_[2][k] + f_[3][k] + f_[4][k] + half_dt_r) / scale;
  return out;
}

double DistributionField::phi_at(int i, int j) const {
  const size_t k = idx(i, j);
  const double half_dt_r = 0.5 * disc_.dt * prob_.source_const;
  const double scale = 1.0 - 0.5 * prob_.source_linear * disc_.dt;
  return (f_[0][k] + f_[1][k] + f_[2][k] + f_[3][k] + f_[4][k] + half_dt_r) / scale;
}

double DistributionField::total_mass() const {
  double m = 0.0;
  for (int k = 0; k < 5; ++k)
    for (double x : f_[k]) m += x;
  return m;
}

std::array<double, 5> DistributionField::populations(int i, int j) const {
  const size_t k = idx(i, j);
  return {f_[0][k], f_[1][k], f_[2][k], f_[3][k], f_[4][k]};
}

void DistributionField::set_populations(int i, int j, const std::array<double, 5>& f) {
  const size_t k = idx(i, j);
  for (int p = 0; p < 5; ++p) f_[p][k] = f[p];
}

std::array<double, 5> boundary_closure_populations(
    const DiffusionProblem& prob, const Discretization& disc, const RelaxationSet& set,
    const BoundaryData& data, double x, double y, double t) {
  DistributionField fld(prob, disc, set);
  fld.set_boundary_data(data);
  return fld.closure_at(x, y, t);
}

}  // namespace lbfd
