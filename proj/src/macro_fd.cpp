// SPDX-License-Identifier: Apache-2.0
#include "lbfd/macro_fd.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace lbfd {

namespace {

StencilCoefficients slfd_plain(const RelaxationSet& set) {
  const double s2 = set.s2, s4 = set.s4, s5 = set.s5, w0 = set.w0;
  StencilCoefficients c;
  c.kind = SchemeKind::slfd;
  c.c0 = (w0 - 1) * s4 + 1;
  c.cx = c.cy = 1 - s5 / 4 - s2 / 2 - s4 * w0 / 4;
  c.b0 = (s4 * w0 + s5 - 2) * (1 - s2);
  c.bx = c.by = ((s5 + 2 * s2 - 4) * (1 - s4) + w0 * s4 * (s5 + 2 * s2 - 3)) / 4;
  c.bd = (2 - s2 - s4 * w0) * (s2 + s5 - 2) / 4;
  c.g0 = s4 * w0 * (s2 - 1) * (s5 - 1) + (1 - s4) * (s5 - 2) * (s2 - 1);
  c.gx = c.gy = (s2 - 1) * (s4 * w0 * (3 - s2 - 2 * s5) + (2 * s2 + 3 * s5 - s2 * s5 - 4)) / 4;
  c.gd = (w0 * s4 * (s2 - 1) * (s2 + s5 - 2) + (1 - s4) * (s2 - 2) * (s2 + s5 - 2)) / 4;
  c.z0 = (w0 * s4 - 1) * (1 - s5) * (s2 - 1) * (s2 - 1);
  c.zx = c.zy =
      (s4 * w0 * (s2 - 1) * (s2 - 1) * (s5 - 1) + (1 - s4) * (1 - s2) * (2 * s2 + 3 * s5 - s2 * s5 - 4)) / 4;
  c.e0 = (1 - s2) * (1 - s2) * (1 - s4) * (1 - s5);
  c.src = s2 * s2 * s4 * s5;
  return c;
}

}  // namespace

StencilCoefficients build_coefficients(const RelaxationSet& set, SchemeKind kind,
                                       double zeta, double dt) {
  set.validate();
  const double s2 = set.s2, s4 = set.s4, s5 = set.s5, w0 = set.w0;
  switch (kind) {
    case SchemeKind::slfd: {
      if (set.matrix_kind != MatrixKind::orthogonal)
        throw SchemeMismatch("slfd needs the orthogonal transform matrix");
      return slfd_plain(set);
    }
    case SchemeKind::flfd: {
      if (set.matrix_kind != MatrixKind::orthogonal)
        throw SchemeMismatch("flfd needs the orthogonal transform matrix");
      if (std::abs(s5 - 1.0) > 1e-12) throw SchemeMismatch("flfd requires s5 == 1");
      StencilCoefficients c;
      c.kind = SchemeKind::flfd;
      c.c0 = (w0 - 1) * s4 + 1;
      c.cx = c.cy = 0.75 - s2 / 2 - s4 * w0 / 4;
      c.b0 = (s4 * w0 - 1) * (1 - s2);
      c.bx = c.by = ((2 * s2 - 3) * (1 - s4) + 2 * w0 * s4 * (s2 - 1)) / 4;
      c.bd = (2 - s2 - s4 * w0) * (s2 - 1) / 4;
      c.g0 = (1 - s4) * (1 - s2);
      c.gx = c.gy = (1 - s4 * w0) * (1 - s2) * (1 - s2) / 4;
      c.gd = (w0 * s4 * (s2 - 1) * (s2 - 1) + (1 - s4) * (s2 - 2) * (s2 - 1)) / 4;
      c.z0 = 0.0;
      c.zx = c.zy = (s4 - 1) * (1 - s2) * (1 - s2) / 4;
      c.e0 = 0.0;
      c.src = s2 * s2 * s4;
      return c;
    }
    case SchemeKind::slfd_mn: {
      if (set.matrix_kind != MatrixKind::natural)
        throw SchemeMismatch("slfd_mn needs the natural transform matrix");
      const double w1 = set.w_side();
      StencilCoefficients c;
      c.kind = SchemeKind::slfd_mn;
      c.c0 = 1 - 2 * w1 * (s4 + s5);
      c.cx = -(s2 + s4 - 2) / 2 + w1 * s4;
      c.cy = -(s2 + s5 - 2) / 2 + w1 * s5;
      c.b0 = (s4 + s5 - 2) * (1 - s2) - 2 * w1 * (1 - s2) * (s4 + s5);
      c.bx = (s2 + s4 - 2) / 2 + s4 * w1 * (1 - s2) - s5 * w1 * (s2 + s4 - 2);
      c.by = (s2 + s5 - 2) / 2 + s5 * w1 * (1 - s2) - s4 * w1 * (s2 + s5 - 2);
      c.bd = -(s2 + s4 - 2) * (s2 + s5 - 2) / 4 +
             (s4 * w1 * (s2 + s5 - 2) + s5 * w1 * (s2 + s4 - 2)) / 2;
      c.g0 = (s2 - 1) * (s4 + s5 - 2) - 2 * w1 * (s2 - 1) * (2 * s4 * s5 - s4 - s5);
      c.gx = -(s2 - 1) * (s5 - 1) * (s2 + s4 - 2) / 2 +
             w1 * (s2 - 1) * (s4 * (s5 - 1) + s5 * (s2 + s4 - 2));
      c.gy = -(s2 - 1) * (s4 - 1) * (s2 + s5 - 2) / 2 +
             w1 * (s2 - 1) * (s5 * (s4 - 1) + s4 * (s2 + s5 - 2));
      c.gd = (s2 + s4 - 2) * (s2 + s5 - 2) / 4 +
             w1 * (1 - s2) * (s4 * (s2 + s5 - 2) + s5 * (s2 + s4 - 2)) / 2;
      c.z0 = -(s2 - 1) * (s2 - 1) * (s4 - 1) * (s5 - 1) +
             2 * w1 * (s2 - 1) * (s2 - 1) * (2 * s4 * s5 - s4 - s5);
      c.zx = (s2 - 1) * (s5 - 1) * (s2 + s4 - 2) / 2 - w1 * s4 * (s2 - 1) * (s2 - 1) * (s5 - 1);
      c.zy = (s2 - 1) * (s4 - 1) * (s2 + s5 - 2) / 2 - w1 * s5 * (s2 - 1) * (s2 - 1) * (s4 - 1);
      c.e0 = (s2 - 1) * (s2 - 1) * (s4 - 1) * (s5 - 1);
      c.src = s2 * s2 * s4 * s5;
      return c;
    }
    case SchemeKind::slfd_al: {
      if (set.matrix_kind != MatrixKind::orthogonal)
        throw SchemeMismatch("slfd_al needs the orthogonal transform matrix");
      const double zdt = zeta * dt;
      if (zdt == 2.0) throw DegenerateScaling("zeta * dt == 2");
      const StencilCoefficients p = slfd_plain(set);
      const double pre = 2.0 / (2.0 - zdt), q = zdt / 8.0;
      StencilCoefficients c;
      c.kind = SchemeKind::slfd_al;
      c.c0 = pre * (p.c0 - 0.5 * zdt * (w0 * (s4 - 2) + 1 - s4));
      c.cx = c.cy = pre * (p.cx - q * (2 - 2 * s2 - s5 + w0 * (2 - s4)));
      c.b0 = pre * (p.b0 + q * (4 * w0 * (s2 - 1) * (s4 - 2) + 4 * s5 * (s2 - 1)));
      c.bx = c.by =
          pre * (p.bx + q * ((s4 - 1) * (2 * s2 + s5 - 2) - w0 * (s4 - 2) * (2 * s2 + s5 - 3)));
      c.bd = pre * (p.bd + q * (w0 * (s4 - 2) * (s2 + s5 - 2) + s2 * (s2 + s5 - 2)));
      c.g0 = pre * (p.g0 + q * (4 * s5 * (s2 - 1) * (s4 - 1) -
                                4 * w0 * (s2 - 1) * (s4 - 2) * (s5 - 1)));
      c.gx = c.gy = pre * (p.gx + q * ((s2 - 1) * (s5 + s2 * s5 - 2) +
                                       w0 * (s2 - 1) * (s4 - 2) * (s2 + 2 * s5 - 3)));
      c.gd = pre * (p.gd + q * (s2 * (s4 - 1) * (s2 + s5 - 2) -
                                w0 * (s2 - 1) * (s4 - 2) * (s2 + s5 - 2)));
      c.z0 = pre * (p.z0 - q * (1 - s2) * (4 * (1 - s2) * (1 - s5) +
                                4 * w0 * (s2 - 1) * (s4 - 2) * (s5 - 1)));
      c.zx = c.zy = pre * (p.zx - q * (1 - s2) * ((s4 - 1) * (s5 + s2 * s5 - 2) -
                                                  w0 * (s2 - 1) * (s4 - 2) * (s5 - 1)));
      c.e0 = pre * (p.e0 + 0.5 * zdt * (s2 - 1) * (s2 - 1) * (s4 - 1) * (s5 - 1));
      c.src = pre * p.src;
      return c;
    }
  }
  throw SchemeMismatch("unknown scheme kind");
}

void write_coefficients_csv(const std::string& path, const StencilCoefficients& c,
                            const std::string& header) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  if (!header.empty()) os << "# " << header << "\n";
  os << "name,value\n";
  char buf[64];
  auto row = [&](const char* n, double v) {
    std::snprintf(buf, sizeof buf, "%s,%.12e\n", n, v);
    os << buf;
  };
  row("alpha1", c.c0); row("alpha2x", c.cx); row("alpha2y", c.cy);
  row("beta1", c.b0); row("beta2x", c.bx); row("beta2y", c.by); row("beta3", c.bd);
  row("gamma1", c.g0); row("gamma2x", c.gx); row("gamma2y", c.gy); row("gamma3", c.gd);
  row("zeta1", c.z0); row("zeta2x", c.zx); row("zeta2y", c.zy);
  row("eta", c.e0); row("delta", c.src);
}

void ScalarHistory::push(ScalarField f) {
  if (f.nx != nx_ || f.ny != ny_) throw ShapeMismatch("history level shape");
  ring_.push_back(std::move(f));
  if (int(ring_.size()) > depth_) ring_.erase(ring_.begin());
}

const ScalarField& ScalarHistory::level(int k) const {
  if (k < 0 || k >= int(ring_.size())) throw HistoryUnderflow("history level out of range");
  return ring_[ring_.size() - 1 - size_t(k)];
}

namespace {

struct Rows {
  const double *c = nullptr, *m = nullptr, *p = nullptr;  // row j, j-1, j+1
};

inline double tap_cross(const Rows& r, int i, int im, int ip, double w0c, double wx, double wy) {
  return w0c * r.c[i] + wx * (r.c[im] + r.c[ip]) + wy * (r.m[i] + r.p[i]);
}

inline double tap_box(const Rows& r, int i, int im, int ip, double w0c, double wx, double wy,
                      double wd) {
  return w0c * r.c[i] + wx * (r.c[im] + r.c[ip]) + wy * (r.m[i] + r.p[i]) +
         wd * (r.m[im] + r.m[ip] + r.p[im] + r.p[ip]);
}

}  // namespace

ScalarField fd_step(const ScalarHistory& hist, const StencilCoefficients& coef,
                    const DiffusionProblem& prob, const Discretization& disc,
                    double t_next, const BoundaryData* dirichlet) {
  const int depth = coef.history_depth();
  if (hist.stored() < depth) throw HistoryUnderflow("history not fully populated");
  const int nx = hist.nx(), ny = hist.ny();
  ScalarField out(nx, ny, hist.x0(), hist.y0(), hist.dx());
  const bool periodic = prob.boundary == BoundaryKind::periodic;
  if (!periodic && (!dirichlet || !dirichlet->value))
    throw BoundaryError("Dirichlet stepping needs boundary values");

  const ScalarField& l0 = hist.level(0);
  const ScalarField& l1 = hist.level(1);
  const ScalarField& l2 = hist.level(2);
  const ScalarField& l3 = hist.level(3);
  const ScalarField* l4 = depth >= 5 ? &hist.level(4) : nullptr;
  const double srcterm = disc.dt * coef.src * prob.source_const;

  const int j_lo = periodic ? 0 : 1, j_hi = periodic ? ny : ny - 1;
  for (int j = j_lo; j < j_hi; ++j) {
    const int jm = periodic ? (j - 1 + ny) % ny : j - 1;
    const int jp = periodic ? (j + 1) % ny : j + 1;
    auto rows = [&](const ScalarField& f) {
      return Rows{f.v.data() + size_t(j) * nx, f.v.data() + size_t(jm) * nx,
                  f.v.data() + size_t(jp) * nx};
    };
    const Rows r0 = rows(l0), r1 = rows(l1), r2 = rows(l2), r3 = rows(l3);
    const double* r4c = l4 ? l4->v.data() + size_t(j) * nx : nullptr;
    double* dst = out.v.data() + size_t(j) * nx;

    auto eval = [&](int i, int im, int ip) {
      double acc = tap_cross(r0, i, im, ip, coef.c0, coef.cx, coef.cy);
      acc += tap_box(r1, i, im, ip, coef.b0, coef.bx, coef.by, coef.bd);
      acc += tap_box(r2, i, im, ip, coef.g0, coef.gx, coef.gy, coef.gd);
      acc += tap_cross(r3, i, im, ip, coef.z0, coef.zx, coef.zy);
      if (r4c) acc += coef.e0 * r4c[i];
      return acc + srcterm;
    };

    const int i_lo = periodic ? 0 : 1, i_hi = periodic ? nx : nx - 1;
    if (periodic) {
      dst[0] = eval(0, nx - 1, 1);
      for (int i = 1; i < nx - 1; ++i) dst[i] = eval(i, i - 1, i + 1);
      dst[nx - 1] = eval(nx - 1, nx - 2, 0);
    } else {
      for (int i = i_lo; i < i_hi; ++i) dst[i] = eval(i, i - 1, i + 1);
    }
  }

  if (!periodic) {
    for (int i = 0; i < nx; ++i) {
      out.at(i, 0) = dirichlet->value(out.x(i), out.y(0), t_next);
      out.at(i, ny - 1) = dirichlet->value(out.x(i), out.y(ny - 1), t_next);
    }
    for (int j = 1; j < ny - 1; ++j) {
      out.at(0, j) = dirichlet->value(out.x(0), out.y(j), t_next);
      out.at(nx - 1, j) = dirichlet->value(out.x(nx - 1), out.y(j), t_next);
    }
  }
  return out;
}

void bootstrap(ScalarHistory& hist, BootstrapStrategy strategy,
               const DiffusionProblem& prob, const Discretization& disc,
               const RelaxationSet& set,
               const std::function<double(double, double, double)>& solution,
               const InitialData* init_data, const BoundaryData* bdata) {
  const int depth = hist.depth();
  if (strategy == BootstrapStrategy::analytic) {
    if (!solution) throw NoAnalyticSolution("analytic bootstrap without a closed-form solution");
    for (int k = 0; k < depth; ++k) {
      ScalarField f(hist.nx(), hist.ny(), hist.x0(), hist.y0(), hist.dx());
      const double t = k * disc.dt;
      for (int j = 0; j < f.ny; ++j)
        for (int i = 0; i < f.nx; ++i) f.at(i, j) = solution(f.x(i), f.y(j), t);
      hist.push(std::move(f));
    }
    return;
  }
  if (!init_data) throw NoAnalyticSolution("lb bootstrap needs initial data for the kinetic init");
  DistributionField lb(prob, disc, set);
  if (bdata) lb.set_boundary_data(*bdata);
  lb.initialize(*init_data);
  hist.push(lb.macroscopic());
  for (int k = 1; k < depth; ++k) {
    lb.step();
    hist.push(lb.macroscopic());
  }
}

}  // namespace lbfd
