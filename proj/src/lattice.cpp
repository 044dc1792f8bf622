// SPDX-License-Identifier: Apache-2.0
#include "lbfd/lattice.hpp"

namespace lbfd {

Vec5 weight_vector(const RelaxationSet& set) {
  Vec5 w;
  const double ws = set.w_side();
  w << set.w0, ws, ws, ws, ws;
  return w;
}

Mat5 transform_matrix(MatrixKind kind, double c) {
  const double c2 = c * c;
  Mat5 m;
  if (kind == MatrixKind::orthogonal) {
    m << 1, 1, 1, 1, 1,
         0, c, 0, -c, 0,
         0, 0, c, 0, -c,
         -4 * c2, c2, c2, c2, c2,
         0, c2, -c2, c2, -c2;
  } else {
    m << 1, 1, 1, 1, 1,
         0, c, 0, -c, 0,
         0, 0, c, 0, -c,
         0, c2, 0, c2, 0,
         0, 0, c2, 0, c2;
  }
  return m;
}

Mat5 transform_inverse(MatrixKind kind, double c) {
  const double c2 = c * c;
  Mat5 m;
  if (kind == MatrixKind::orthogonal) {
    // rows orthogonal: M^-1 = M^T diag(5, 2c^2, 2c^2, 20c^4, 4c^4)^-1
    m << 0.2, 0, 0, -1.0 / (5 * c2), 0,
         0.2, 0.5 / c, 0, 1.0 / (20 * c2), 0.25 / c2,
         0.2, 0, 0.5 / c, 1.0 / (20 * c2), -0.25 / c2,
         0.2, -0.5 / c, 0, 1.0 / (20 * c2), 0.25 / c2,
         0.2, 0, -0.5 / c, 1.0 / (20 * c2), -0.25 / c2;
  } else {
    m << 1, 0, 0, -1.0 / c2, -1.0 / c2,
         0, 0.5 / c, 0, 0.5 / c2, 0,
         0, 0, 0.5 / c, 0, 0.5 / c2,
         0, -0.5 / c, 0, 0.5 / c2, 0,
         0, 0, -0.5 / c, 0, 0.5 / c2;
  }
  return m;
}

Mat5 relaxation_diagonal(const RelaxationSet& set) {
  Mat5 s = Mat5::Zero();
  s.diagonal() << set.s1, set.s2, set.s2, set.s4, set.s5;
  return s;
}

Mat5 relaxation_natural_equivalent(const RelaxationSet& set, double c) {
  const Mat5 m = transform_matrix(MatrixKind::orthogonal, c);
  const Mat5 mi = transform_inverse(MatrixKind::orthogonal, c);
  const Mat5 mn = transform_matrix(MatrixKind::natural, c);
  const Mat5 mni = transform_inverse(MatrixKind::natural, c);
  return mn * mi * relaxation_diagonal(set) * m * mni;
}

}  // namespace lbfd
