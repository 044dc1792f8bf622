// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <array>

#include "lbfd/params.hpp"

namespace lbfd {

using Mat5 = Eigen::Matrix<double, 5, 5>;
using Vec5 = Eigen::Matrix<double, 5, 1>;

/// D2Q5 velocity directions as integer offsets (scaled by c at use sites):
/// rest, +x, +y, -x, -y.
struct VelocitySet {
  static constexpr std::array<int, 5> ex{0, 1, 0, -1, 0};
  static constexpr std::array<int, 5> ey{0, 0, 1, 0, -1};
  static constexpr std::array<int, 5> opposite{0, 3, 4, 1, 2};
};

/// Moment weights per node: (w0, w1, w1, w1, w1), w1 = (1-w0)/4.
Vec5 weight_vector(const RelaxationSet& set);

/// Transform matrix for the requested kind (rows are moment functionals).
Mat5 transform_matrix(MatrixKind kind, double c);

/// Exact inverse of the transform matrix.
Mat5 transform_inverse(MatrixKind kind, double c);

/// Diagonal relaxation matrix diag(s1, s2, s2, s4, s5).
Mat5 relaxation_diagonal(const RelaxationSet& set);

/// Non-diagonal relaxation matrix S_N = M_N M^-1 S M M_N^-1 that makes the
/// natural-matrix model reproduce the orthogonal-matrix one.
Mat5 relaxation_natural_equivalent(const RelaxationSet& set, double c);

}  // namespace lbfd
