// SPDX-License-Identifier: Apache-2.0
#include "lbfd/verify.hpp"

#include <cmath>

namespace lbfd {

double rmse(const ScalarField& numeric, const AnalyticSolution& exact, double t) {
  if (numeric.nx <= 0 || numeric.ny <= 0) throw ShapeMismatch("empty field");
  double acc = 0.0;
  for (int j = 0; j < numeric.ny; ++j)
    for (int i = 0; i < numeric.nx; ++i) {
      const double d = numeric.at(i, j) - exact(numeric.x(i), numeric.y(j), t);
      acc += d * d;
    }
  return std::sqrt(acc / (double(numeric.nx) * numeric.ny));
}

const char* to_string(SchemeId s) {
  switch (s) {
    case SchemeId::mrt_lb: return "mrt_lb";
    case SchemeId::flfd: return "flfd";
    case SchemeId::slfd: return "slfd";
    case SchemeId::mrt_lb_mn: return "mrt_lb_mn";
    case SchemeId::slfd_mn: return "slfd_mn";
    case SchemeId::mrt_lb_al1: return "mrt_lb_al1";
    case SchemeId::mrt_lb_al2: return "mrt_lb_al2";
    case SchemeId::slfd_al1: return "slfd_al1";
    case SchemeId::slfd_al2: return "slfd_al2";
  }
  return "?";
}

SchemeId scheme_from_string(const std::string& name) {
  for (SchemeId s : {SchemeId::mrt_lb, SchemeId::flfd, SchemeId::slfd, SchemeId::mrt_lb_mn,
                     SchemeId::slfd_mn, SchemeId::mrt_lb_al1, SchemeId::mrt_lb_al2,
                     SchemeId::slfd_al1, SchemeId::slfd_al2})
    if (name == to_string(s)) return s;
  throw ValidationError("unknown scheme: " + name);
}

bool scheme_is_kinetic(SchemeId s) {
  return s == SchemeId::mrt_lb || s == SchemeId::mrt_lb_mn || s == SchemeId::mrt_lb_al1 ||
         s == SchemeId::mrt_lb_al2;
}

namespace {

RelaxationSet derive_for(SchemeId scheme, double eps, double s5, double zeta, double dt,
                         double s4_perturbation) {
  RelaxationSet set;
  switch (scheme) {
    case SchemeId::mrt_lb:
    case SchemeId::slfd:
      set = derive_fourth_order(eps, s5);
      break;
    case SchemeId::flfd:
      set = derive_fourth_order(eps, 1.0);
      break;
    case SchemeId::mrt_lb_mn:
    case SchemeId::slfd_mn:
      set = derive_fourth_order_natural(eps);
      break;
    case SchemeId::mrt_lb_al1:
    case SchemeId::slfd_al1:
      set = derive_linear_source_v1(eps);
      break;
    case SchemeId::mrt_lb_al2:
    case SchemeId::slfd_al2:
      set = derive_linear_source_v2(eps, s5, zeta, dt);
      break;
  }
  if (s4_perturbation != 0.0) {
    set.s4 += s4_perturbation;
    set.validate();
  }
  return set;
}

SchemeKind fd_kind_for(SchemeId scheme) {
  switch (scheme) {
    case SchemeId::flfd: return SchemeKind::flfd;
    case SchemeId::slfd: return SchemeKind::slfd;
    case SchemeId::slfd_mn: return SchemeKind::slfd_mn;
    case SchemeId::slfd_al1:
    case SchemeId::slfd_al2: return SchemeKind::slfd_al;
    default: throw SchemeMismatch("not a finite-difference scheme");
  }
}

}  // namespace

ScalarField run_scheme(SchemeId scheme, const RunSettings& rs, AnalyticSolution* out_exact) {
  const double kappa = rs.eps * rs.dx * rs.dx / rs.dt;
  AnalyticSolution exact = AnalyticSolution::by_id(rs.example_id, kappa);
  if (out_exact) *out_exact = exact;
  const DiffusionProblem& prob = exact.problem;
  const Discretization disc = Discretization::make(prob, rs.dx, rs.dt);
  const double s5 =
      (scheme == SchemeId::mrt_lb_al2 || scheme == SchemeId::slfd_al2) && rs.s5 == 1.0
          ? 1.2
          : rs.s5;
  const RelaxationSet set = derive_for(scheme, rs.eps, s5, prob.source_linear, rs.dt,
                                       rs.s4_perturbation);
  const int n_steps = int(std::lround(rs.T / rs.dt));

  if (scheme_is_kinetic(scheme)) {
    DistributionField lb(prob, disc, set);
    if (prob.boundary == BoundaryKind::dirichlet) lb.set_boundary_data(exact.boundary_data());
    lb.initialize(exact.initial_data(disc));
    lb.run(n_steps);
    return lb.macroscopic();
  }

  const SchemeKind kind = fd_kind_for(scheme);
  const StencilCoefficients coef = build_coefficients(set, kind, prob.source_linear, rs.dt);
  const int depth = coef.history_depth();
  ScalarHistory hist(depth, disc.nx, disc.ny, prob.x0, prob.y0, rs.dx);
  bootstrap(hist, BootstrapStrategy::analytic, prob, disc, set, exact.value, nullptr);
  const BoundaryData bd = exact.boundary_data();
  const BoundaryData* bdp = prob.boundary == BoundaryKind::dirichlet ? &bd : nullptr;
  for (int k = depth; k <= n_steps; ++k) {
    hist.push(fd_step(hist, coef, prob, disc, k * rs.dt, bdp));
  }
  return hist.level(0);
}

ConvergenceReport convergence_study(SchemeId scheme, int example_id, double eps, double dx0,
                                    double dt0, int n_rungs, double T, double s5,
                                    double s4_perturbation) {
  if (n_rungs < 2) throw RangeError("ladder needs at least two rungs");
  ConvergenceReport rep;
  rep.scheme = scheme;
  rep.example_id = example_id;
  rep.eps = eps;
  rep.s5 = s5;
  rep.T = T;
  for (int r = 0; r < n_rungs; ++r) {
    RunSettings rs;
    rs.example_id = example_id;
    rs.eps = eps;
    rs.dx = dx0 / std::pow(2.0, r);
    rs.dt = dt0 / std::pow(4.0, r);
    rs.T = T;
    rs.s5 = s5;
    rs.s4_perturbation = s4_perturbation;
    AnalyticSolution exact;
    const ScalarField num = run_scheme(scheme, rs, &exact);
    rep.rungs.push_back({rs.dx, rs.dt, rmse(num, exact, T)});
  }
  for (size_t k = 0; k + 1 < rep.rungs.size(); ++k)
    rep.pair_cr.push_back(std::log2(rep.rungs[k].rmse / rep.rungs[k + 1].rmse));
  rep.final_cr = rep.pair_cr.back();
  // least-squares slope of log2(rmse) vs log2(dx)
  const int n = int(rep.rungs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int k = 0; k < n; ++k) {
    const double x = std::log2(rep.rungs[size_t(k)].dx), y = std::log2(rep.rungs[size_t(k)].rmse);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  rep.lsq_cr = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return rep;
}

EquivalenceReport equivalence_check(int example_id, double eps, double s5, int grid_n,
                                    int steps, SchemeKind fd_kind, double dx2_over_dt) {
  AnalyticSolution probe = AnalyticSolution::by_id(example_id, 1.0);
  if (probe.problem.boundary != BoundaryKind::periodic)
    throw SchemeMismatch("equivalence check runs on periodic problems");
  const double dx = probe.problem.lx / grid_n;
  const double dt = dx * dx / dx2_over_dt;
  const double kappa = eps * dx2_over_dt;
  AnalyticSolution exact = AnalyticSolution::by_id(example_id, kappa);
  const DiffusionProblem& prob = exact.problem;
  const Discretization disc = Discretization::make(prob, dx, dt);
  RelaxationSet set;
  if (fd_kind == SchemeKind::slfd_al)
    set = derive_linear_source_v2(eps, s5, prob.source_linear, dt);
  else if (fd_kind == SchemeKind::slfd_mn)
    set = derive_fourth_order_natural(eps);
  else
    set = derive_fourth_order(eps, s5);

  DistributionField lb(prob, disc, set);
  lb.initialize(exact.initial_data(disc));
  std::vector<ScalarField> traj;
  traj.reserve(size_t(steps) + 1);
  traj.push_back(lb.macroscopic());
  for (int k = 0; k < steps; ++k) {
    lb.step();
    traj.push_back(lb.macroscopic());
  }

  const StencilCoefficients coef = build_coefficients(set, fd_kind, prob.source_linear, dt);
  const int depth = coef.history_depth();
  ScalarHistory hist(depth, disc.nx, disc.ny, prob.x0, prob.y0, dx);
  for (int k = 0; k < depth; ++k) hist.push(traj[size_t(k)]);

  EquivalenceReport rep;
  rep.lb_steps = steps;
  for (int k = depth; k <= steps; ++k) {
    ScalarField fd = fd_step(hist, coef, prob, disc, k * dt, nullptr);
    const double dev = max_abs_diff(fd, traj[size_t(k)]);
    rep.per_step.push_back(dev);
    rep.max_dev = std::max(rep.max_dev, dev);
    hist.push(std::move(fd));
  }
  return rep;
}

bool TableRow::all_pass() const {
  if (!cr_pass) return false;
  for (const TableCell& c : cells)
    if (!c.rmse_pass) return false;
  return true;
}

bool TableReport::all_pass() const {
  for (const TableRow& r : rows)
    if (!r.all_pass()) return false;
  return true;
}

namespace {

struct PaperRow {
  double eps;
  double rmse[4];
  double cr;
};

struct PaperTable {
  const char* id;
  SchemeId scheme;
  int example_id;
  double dx0, dt0, T;
  PaperRow rows[4];
};

// Published RMSE/CR tables (decimal-comma cells normalized).
const PaperTable kTables[] = {
    {"ex1_lb", SchemeId::mrt_lb, 1, 0.1, 0.1, 10.0,
     {{0.001, {6.7249e-7, 4.3010e-8, 2.7205e-9, 1.7092e-10}, 3.9807},
      {0.005, {2.7793e-6, 1.7768e-7, 1.1238e-8, 7.0653e-10}, 3.6472},
      {0.100, {7.3601e-7, 4.6588e-8, 2.9392e-9, 1.8473e-10}, 3.9867},
      {0.150, {1.5830e-6, 1.0176e-7, 6.4425e-9, 4.0519e-10}, 3.9773}}},
    {"ex1_flfd", SchemeId::flfd, 1, 0.1, 0.1, 10.0,
     {{0.001, {3.5341e-7, 2.3026e-8, 1.4631e-9, 9.2142e-11}, 3.9684},
      {0.005, {1.4207e-6, 9.2523e-8, 5.8786e-9, 3.7000e-10}, 3.9689},
      {0.100, {3.9773e-6, 2.5877e-7, 1.6437e-8, 1.0348e-9}, 3.9684},
      {0.150, {1.2018e-5, 7.7574e-7, 4.9177e-8, 3.0941e-9}, 3.9744}}},
    {"ex2_lb", SchemeId::mrt_lb, 2, 0.1, 0.1, 10.0,
     {{0.04, {8.8311e-8, 6.6863e-9, 4.3672e-10, 2.9422e-11}, 3.5475},
      {0.08, {1.3741e-7, 7.2973e-9, 4.6827e-10, 2.9422e-11}, 3.7263},
      {0.10, {2.1585e-7, 9.3445e-9, 6.1023e-10, 3.9040e-11}, 4.1420},
      {0.12, {3.1187e-7, 1.6277e-8, 1.0587e-9, 6.7528e-11}, 4.0577}}},
    {"ex2_flfd", SchemeId::flfd, 2, 0.1, 0.1, 10.0,
     {{0.04, {2.5276e-10, 5.8786e-11, 1.2537e-12, 6.3751e-14}, 3.978},
      {0.08, {8.9627e-10, 6.6733e-11, 4.3916e-12, 2.6318e-13}, 3.9689},
      {0.10, {2.8156e-9, 2.0894e-10, 1.3743e-11, 8.3952e-13}, 3.9039},
      {0.12, {6.6352e-9, 4.9170e-10, 3.2335e-11, 2.0162e-12}, 3.8948}}},
    {"ex3_al1_lb", SchemeId::mrt_lb_al1, 3, 0.1, 0.05, 2.0,
     {{0.05, {2.4698e-10, 2.5765e-11, 1.6454e-12, 1.0354e-13}, 3.9035},
      {0.08, {3.0363e-10, 2.2482e-11, 1.4355e-12, 9.0325e-14}, 3.9050},
      {0.10, {2.7737e-10, 2.0499e-11, 1.3088e-12, 8.2354e-14}, 3.9059},
      {0.12, {2.5291e-10, 1.8661e-11, 1.1915e-12, 7.4974e-14}, 3.9067}}},
    {"ex3_al1_fd", SchemeId::slfd_al1, 3, 0.1, 0.05, 2.0,
     {{0.05, {3.3591e-10, 2.5532e-11, 1.6435e-12, 1.0363e-13}, 3.8875},
      {0.08, {2.9279e-10, 2.2234e-11, 1.4316e-12, 9.0274e-14}, 3.8878},
      {0.10, {2.6655e-10, 2.0245e-11, 1.3040e-12, 8.2232e-14}, 3.8875},
      {0.12, {2.4192e-10, 1.8402e-11, 1.1859e-12, 7.4800e-14}, 3.8864}}},
    {"ex3_al2_lb", SchemeId::mrt_lb_al2, 3, 0.1, 0.05, 2.0,
     {{0.05, {3.3623e-10, 2.4941e-11, 1.6198e-12, 1.0859e-13}, 3.8655},
      {0.08, {3.0236e-10, 2.2327e-11, 1.4255e-12, 8.9788e-14}, 3.9053},
      {0.10, {2.8705e-10, 2.1531e-11, 1.3899e-12, 9.0262e-14}, 3.8783},
      {0.12, {2.7782e-10, 2.1517e-11, 1.4472e-12, 1.0597e-13}, 3.7854}}},
    {"ex3_al2_fd", SchemeId::slfd_al2, 3, 0.1, 0.05, 2.0,
     {{0.05, {3.1243e-10, 2.4367e-11, 1.6078e-12, 1.0823e-13}, 3.8317},
      {0.08, {2.7863e-10, 2.1798e-11, 1.4165e-12, 8.9619e-14}, 3.8674},
      {0.10, {2.6390e-10, 2.1049e-11, 1.3848e-12, 9.0349e-14}, 3.8374},
      {0.12, {2.5489e-10, 2.1091e-11, 1.4472e-12, 1.0641e-13}, 3.7420}}},
};

}  // namespace

std::vector<std::string> all_table_ids() {
  std::vector<std::string> out;
  for (const PaperTable& t : kTables) out.emplace_back(t.id);
  return out;
}

TableReport reproduce_table(const std::string& table_id) {
  const PaperTable* table = nullptr;
  for (const PaperTable& t : kTables)
    if (table_id == t.id) table = &t;
  if (!table) throw ValidationError("unknown table id: " + table_id);

  TableReport rep;
  rep.id = table->id;
  rep.scheme = table->scheme;
  rep.example_id = table->example_id;
  rep.dx0 = table->dx0;
  rep.dt0 = table->dt0;
  rep.T = table->T;
  for (const PaperRow& prow : table->rows) {
    const ConvergenceReport c = convergence_study(table->scheme, table->example_id, prow.eps,
                                                  table->dx0, table->dt0, 4, table->T);
    TableRow row;
    row.eps = prow.eps;
    for (int k = 0; k < 4; ++k) {
      row.cells[k].paper_rmse = prow.rmse[k];
      row.cells[k].measured_rmse = c.rungs[size_t(k)].rmse;
      const double ratio = row.cells[k].measured_rmse / prow.rmse[k];
      row.cells[k].rmse_pass = ratio <= 3.0 && ratio >= 1.0 / 3.0;
    }
    row.paper_cr = prow.cr;
    row.measured_cr = c.final_cr;
    row.lsq_cr = c.lsq_cr;
    row.paper_self_cr = std::log2(prow.rmse[2] / prow.rmse[3]);
    row.cr_pass = std::abs(row.measured_cr - prow.cr) <= 0.15;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace lbfd
