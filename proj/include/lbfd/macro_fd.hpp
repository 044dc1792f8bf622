// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "lbfd/field.hpp"
#include "lbfd/kinetic.hpp"
#include "lbfd/params.hpp"

namespace lbfd {

enum class SchemeKind { slfd, flfd, slfd_mn, slfd_al };

/// Stencil weights of the multi-level schemes. Level n uses the 5-point
/// cross, levels n-1 and n-2 the 9-point box, level n-3 the cross, level n-4
/// the center. x/y cross weights differ only for the natural-matrix variant.
struct StencilCoefficients {
  SchemeKind kind = SchemeKind::slfd;
  double c0 = 0, cx = 0, cy = 0;           // level n
  double b0 = 0, bx = 0, by = 0, bd = 0;   // level n-1
  double g0 = 0, gx = 0, gy = 0, gd = 0;   // level n-2
  double z0 = 0, zx = 0, zy = 0;           // level n-3
  double e0 = 0;                           // level n-4
  double src = 0;                          // phi^{n+1} += dt * src * R

  /// Number of time levels in the stencil (6 or 5).
  int levels() const { return kind == SchemeKind::flfd ? 5 : 6; }
  int history_depth() const { return levels() - 1; }

  /// Sum of all phi-weights with stencil multiplicities.
  double weight_sum() const {
    return c0 + 2 * (cx + cy) + b0 + 2 * (bx + by) + 4 * bd + g0 + 2 * (gx + gy) + 4 * gd +
           z0 + 2 * (zx + zy) + e0;
  }
};

/// Closed-form coefficient builder. flfd requires s5 == 1; slfd_mn requires
/// the natural matrix kind; slfd/slfd_al the orthogonal kind. slfd_al takes
/// the linear-source parameters (zeta, dt).
StencilCoefficients build_coefficients(const RelaxationSet& set, SchemeKind kind,
                                       double zeta = 0.0, double dt = 0.0);

/// name,value CSV dump for audit.
void write_coefficients_csv(const std::string& path, const StencilCoefficients& c,
                            const std::string& header = "");

/// Ring of up to five past scalar levels phi^n .. phi^{n-4}.
class ScalarHistory {
 public:
  ScalarHistory(int depth, int nx, int ny, double x0, double y0, double dx)
      : depth_(depth), nx_(nx), ny_(ny), x0_(x0), y0_(y0), dx_(dx) {}

  void push(ScalarField f);
  bool full() const { return int(ring_.size()) >= depth_; }
  int depth() const { return depth_; }
  int stored() const { return int(ring_.size()); }

  /// phi at level n-k (k = 0 is the newest stored level).
  const ScalarField& level(int k) const;

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double x0() const { return x0_; }
  double y0() const { return y0_; }
  double dx() const { return dx_; }

 private:
  int depth_, nx_, ny_;
  double x0_, y0_, dx_;
  std::vector<ScalarField> ring_;  // newest last
};

/// One multi-level update. Periodic problems wrap; Dirichlet problems update
/// the interior and pin boundary nodes to boundary(x, y, t_next).
ScalarField fd_step(const ScalarHistory& hist, const StencilCoefficients& coef,
                    const DiffusionProblem& prob, const Discretization& disc,
                    double t_next, const BoundaryData* dirichlet = nullptr);

enum class BootstrapStrategy { analytic, lb_bootstrap };

/// Fills the history with the first `depth` time levels, either by sampling a
/// closed-form solution (supplied evaluator) or by running the kinetic model.
/// The kinetic route needs the initial data for the fourth-order init.
void bootstrap(ScalarHistory& hist, BootstrapStrategy strategy,
               const DiffusionProblem& prob, const Discretization& disc,
               const RelaxationSet& set,
               const std::function<double(double, double, double)>& solution,
               const InitialData* init_data, const BoundaryData* bdata = nullptr);

}  // namespace lbfd
