// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "lbfd/analytic.hpp"
#include "lbfd/macro_fd.hpp"

namespace lbfd {

/// Root-mean-square deviation from the analytic solution at time t over all
/// stored nodes.
double rmse(const ScalarField& numeric, const AnalyticSolution& exact, double t);

enum class SchemeId {
  mrt_lb,      // kinetic model, orthogonal matrix
  flfd,        // five-level scheme (s5 = 1)
  slfd,        // six-level scheme
  mrt_lb_mn,   // kinetic model, natural matrix
  slfd_mn,     // six-level natural-matrix scheme
  mrt_lb_al1,  // kinetic linear-source model, parameter family 1
  mrt_lb_al2,  //   "       "       "        , family 2 (modified rate)
  slfd_al1,    // six-level linear-source scheme, family 1
  slfd_al2,    //   "       "       "           , family 2
};
const char* to_string(SchemeId s);
SchemeId scheme_from_string(const std::string& name);
bool scheme_is_kinetic(SchemeId s);

struct RunSettings {
  int example_id = 1;
  double eps = 0.1;
  double dx = 0.1, dt = 0.1;
  double T = 1.0;
  double s5 = 1.0;            // free rate for mrt_lb / slfd / al2 families
  double s4_perturbation = 0; // shifts s4 off the fourth-order point
};

/// Runs one scheme to time T and returns the solved field; kappa is fixed by
/// eps dx^2 / dt. `out_exact` (optional) receives the solution object used.
ScalarField run_scheme(SchemeId scheme, const RunSettings& rs,
                       AnalyticSolution* out_exact = nullptr);

struct ConvergenceRung {
  double dx, dt, rmse;
};

struct ConvergenceReport {
  SchemeId scheme{};
  int example_id = 0;
  double eps = 0, s5 = 1, T = 0;
  std::vector<ConvergenceRung> rungs;
  std::vector<double> pair_cr;  // log2(rmse_k / rmse_{k+1})
  double final_cr = 0;          // last pair (the comparable table number)
  double lsq_cr = 0;            // least-squares slope across all rungs
};

/// Grid ladder with dx halving and dt quartering per rung (dx^2/dt fixed).
ConvergenceReport convergence_study(SchemeId scheme, int example_id, double eps,
                                    double dx0, double dt0, int n_rungs, double T,
                                    double s5 = 1.0, double s4_perturbation = 0.0);

struct EquivalenceReport {
  double max_dev = 0;
  std::vector<double> per_step;  // starting at the first predicted level
  int lb_steps = 0;
};

/// Runs the kinetic model, seeds the finite-difference history from its first
/// levels, and tracks |phi_LB - phi_FD| per step (periodic problems).
EquivalenceReport equivalence_check(int example_id, double eps, double s5, int grid_n,
                                    int steps, SchemeKind fd_kind,
                                    double dx2_over_dt = 0.1);

struct TableCell {
  double paper_rmse = 0, measured_rmse = 0;
  bool rmse_pass = false;
};

struct TableRow {
  double eps = 0;
  TableCell cells[4];
  double paper_cr = 0, measured_cr = 0, lsq_cr = 0;
  double paper_self_cr = 0;  // CR the paper's own finest RMSE pair implies
  bool cr_pass = false;
  bool all_pass() const;
};

struct TableReport {
  std::string id;
  SchemeId scheme{};
  int example_id = 0;
  double dx0 = 0, dt0 = 0, T = 0;
  std::vector<TableRow> rows;
  bool all_pass() const;
};

/// Table ids: ex1_lb, ex1_flfd, ex2_lb, ex2_flfd, ex3_al1_lb, ex3_al1_fd,
/// ex3_al2_lb, ex3_al2_fd.
std::vector<std::string> all_table_ids();
TableReport reproduce_table(const std::string& table_id);

}  // namespace lbfd
