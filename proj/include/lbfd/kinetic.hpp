// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <functional>
#include <vector>

#include "lbfd/field.hpp"
#include "lbfd/lattice.hpp"
#include "lbfd/params.hpp"

namespace lbfd {

/// Space-time evaluators for Dirichlet data. First-order members are needed
/// for every closure; the second-order ones for the two-unknown corner form.
struct BoundaryData {
  using Fn = std::function<double(double, double, double)>;  // (x, y, t)
  Fn value, ddt, ddx, ddy;
  Fn dtt, dtx, dty, dxx, dxy, dyy;

  bool complete() const {
    return value && ddt && ddx && ddy && dtt && dtx && dty && dxx && dxy && dyy;
  }
};

/// Node-wise initial condition: phi and its spatial derivatives at t = 0.
/// The time derivative is eliminated through the governing equation.
struct InitialData {
  ScalarField phi, ddx, ddy, lap;
};

enum class CollisionVariant {
  from_matrix_kind,  // diagonal S with the set's own transform matrix
  natural_sn,        // natural matrix paired with S_N (equivalence runs)
};

/// Equilibrium populations w_i * phi.
std::array<double, 5> equilibrium(double phi, const RelaxationSet& set);

/// D2Q5 MRT lattice Boltzmann stepper for the diffusion equation, covering
/// the constant-source model and the linear-source variant (zeta != 0).
class DistributionField {
 public:
  DistributionField(const DiffusionProblem& prob, const Discretization& disc,
                    const RelaxationSet& set,
                    CollisionVariant variant = CollisionVariant::from_matrix_kind);

  /// Populations from the first-order asymptotic expansion of the update map,
  /// with the conserved moment pinned to the macroscopic definition.
  void initialize(const InitialData& data);

  void set_boundary_data(BoundaryData data);

  /// One full lattice update: collision, streaming, boundary closure.
  void step();
  void run(int steps);

  /// phi = (sum_i f_i + dt R / 2) / (1 - zeta dt / 2).
  ScalarField macroscopic() const;
  double phi_at(int i, int j) const;

  /// Fills the inward-pointing unknown populations on all Dirichlet edges and
  /// corners from the boundary data at time t.
  void close_boundary(double t);

  /// Full five-entry closure vector at one boundary point (needs boundary data).
  std::array<double, 5> closure_at(double x, double y, double t) const;

  double total_mass() const;
  int time_index() const { return n_; }
  double time() const { return n_ * disc_.dt; }

  const Discretization& disc() const { return disc_; }
  const DiffusionProblem& problem() const { return prob_; }
  const RelaxationSet& relaxation() const { return set_; }

  std::array<double, 5> populations(int i, int j) const;
  void set_populations(int i, int j, const std::array<double, 5>& f);

 private:
  void collide();
  void stream();
  size_t idx(int i, int j) const { return size_t(j) * disc_.nx + i; }

  /// Asymptotic population vector at one point (shared by init and closure).
  std::array<double, 5> asymptotic_populations(double phi, double dphi_t,
                                               double dphi_x, double dphi_y,
                                               const double* second,  // dtt,dtx,dty,dxx,dxy,dyy or null
                                               bool pin_conserved) const;

  DiffusionProblem prob_;
  Discretization disc_;
  RelaxationSet set_;
  CollisionVariant variant_;
  BoundaryData bdata_;
  bool has_bdata_ = false;
  bool diag_fast_ = false;  // orthogonal + diagonal S moment-space kernel

  double a_[5][5];      // M^-1 S M
  double aw_[5];        // A w
  double bw_[5];        // M^-1 (I - S/2) M w
  double linv_[5][5];   // Lambda^-1
  double fixv_[5];      // M^-1 e1 (conserved-moment correction direction)
  double w_[5];
  double e4_ = 0.0;     // (1 - 5 w0) c^2 (orthogonal second-moment equilibrium)

  std::array<std::vector<double>, 5> f_, post_;
  int n_ = 0;
};

/// Full closure population vector (all five entries) at one boundary point.
std::array<double, 5> boundary_closure_populations(
    const DiffusionProblem& prob, const Discretization& disc, const RelaxationSet& set,
    const BoundaryData& data, double x, double y, double t);

}  // namespace lbfd
