// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lbfd/error.hpp"

namespace lbfd {

/// Row-major scalar field on an nx x ny node lattice anchored at (x0, y0).
struct ScalarField {
  int nx = 0, ny = 0;
  double x0 = 0.0, y0 = 0.0, dx = 0.0;
  std::vector<double> v;

  ScalarField() = default;
  ScalarField(int nx_, int ny_, double x0_ = 0, double y0_ = 0, double dx_ = 1)
      : nx(nx_), ny(ny_), x0(x0_), y0(y0_), dx(dx_), v(size_t(nx_) * ny_, 0.0) {}

  double& at(int i, int j) { return v[size_t(j) * nx + i]; }
  double at(int i, int j) const { return v[size_t(j) * nx + i]; }
  double x(int i) const { return x0 + i * dx; }
  double y(int j) const { return y0 + j * dx; }
  size_t size() const { return v.size(); }

  bool same_shape(const ScalarField& o) const { return nx == o.nx && ny == o.ny; }
};

double max_abs_diff(const ScalarField& a, const ScalarField& b);  // ShapeMismatch

/// CSV snapshot: one "x,y,phi" row per node. header goes in as "# ..." lines.
void write_field_csv(const std::string& path, const ScalarField& f,
                     const std::string& header = "");

/// Raw snapshot: little-endian header (int64 nx, ny, n; double dx, dt) followed
/// by nx*ny row-major float64 values.
void write_field_binary(const std::string& path, const ScalarField& f,
                        std::int64_t n, double dt);
ScalarField read_field_binary(const std::string& path, std::int64_t* n_out = nullptr,
                              double* dt_out = nullptr);

}  // namespace lbfd
