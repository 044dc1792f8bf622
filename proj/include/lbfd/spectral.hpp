// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lbfd/macro_fd.hpp"
#include "lbfd/params.hpp"

namespace lbfd {

using cplx = std::complex<double>;
using CMat5 = Eigen::Matrix<cplx, 5, 5>;

/// Per-mode Fourier symbols of the lattice update (lattice velocity c = 1):
/// shift matrix T(theta), P = T(I-S), Q = T S.
struct SymbolMatrices {
  double theta1 = 0, theta2 = 0;
  std::array<cplx, 5> shifts;  // exp(-i c_k . theta)
  CMat5 T, P, Q;
};

/// Entrywise construction of the symbol matrices.
SymbolMatrices build_symbol(const RelaxationSet& set, double theta1, double theta2);

/// Oracle path: T = M diag(shifts) M^-1 by explicit product.
CMat5 symbol_by_product(const RelaxationSet& set, double theta1, double theta2);

/// Monic degree-5 characteristic polynomial coefficients:
/// X^5 + u4 X^4 + u3 X^3 + u2 X^2 + u1 X + u0.
struct CharPoly {
  std::array<cplx, 5> u;  // u[0] = constant term
};

/// Faddeev-LeVerrier trace recursion (the in-code authority).
CharPoly char_poly_fl(const CMat5& m);

/// Closed-form coefficients, bilinear in (cos theta1, cos theta2); includes
/// the s1 dependence.
CharPoly char_poly_closed_form(const RelaxationSet& set, double theta1, double theta2);

/// The published closed forms, taken literally (they assume s1 = 0). Kept for
/// the audit; where they disagree with the recursion, the recursion wins.
CharPoly char_poly_as_printed(const RelaxationSet& set, double theta1, double theta2);

/// Coefficients by expanding prod (X - lambda_i) from eigenvalues (oracle).
CharPoly char_poly_from_eigenvalues(const CMat5& m);

/// Quartic amplification polynomial of the five-level scheme at a mode:
/// p(l) = l^4 + a1 l^3 + a2 l^2 + a3 l + a4, with the reduced cubic
/// coefficients p1..p4.
struct AmplificationPoly {
  double chi1 = 0, chi2 = 0;
  double a1 = 0, a2 = 0, a3 = 0, a4 = 0;
  double p1 = 0, p2 = 0, p3 = 0, p4 = 0;

  std::array<cplx, 4> roots() const;
  double max_root_modulus() const;
};

/// Validated parameter set (s5 == 1 required).
AmplificationPoly amplification_poly(const RelaxationSet& set, double chi1, double chi2);

/// Raw five-level coefficients without legality checks (for scans over the
/// closure of the parameter box and deliberately illegal boxes).
AmplificationPoly amplification_poly_raw(double s2, double s4, double w0, double chi1,
                                         double chi2);

/// Symbol polynomial of a general stencil: monic, degree = levels-1; returns
/// coefficients c so that p(l) = l^d + c[0] l^{d-1} + ... + c[d-1].
std::vector<double> scheme_symbol_poly(const StencilCoefficients& coef, double chi1,
                                       double chi2);
double max_root_modulus(const std::vector<double>& monic_tail);

enum class Verdict { stable, marginal, unstable };
const char* to_string(Verdict v);

struct ConditionReport {
  Verdict verdict = Verdict::stable;
  double min_value = 0;
  std::array<double, 5> values{};  // the five condition quantities
};

/// Fixed tolerance band for "on the boundary" classification.
inline constexpr double kMarginBand = 1e-9;

/// Condition set p1-p2+p3-p4, p1+p2+p3+p4, p1-p4, p1+p4, p1^2-p1p3-p4^2+p2p4.
ConditionReport routh_hurwitz_check(const AmplificationPoly& p);
/// Equivalent Routh-Hurwitz set with 3p1+3p4-p2-p3 and 3p1-3p4-p3+p2.
ConditionReport routh_hurwitz_alt(const AmplificationPoly& p);

struct ScanBox {
  double s2_lo = 0, s2_hi = 2;
  double s4_lo = 0, s4_hi = 2;
  double w0_lo = 0, w0_hi = 1;
  double s5 = 1.0;  // != 1 scans the six-level scheme, root test only
};

struct ScanPoint {
  double s2, s4, w0, theta1, theta2, max_mod;
  Verdict verdict;
};

struct ScanReport {
  ScanBox box;
  int res = 0;
  double max_mod = 0;
  ScanPoint argmax{};
  long points = 0;
  long unstable_points = 0;     // by root test, |lambda| > 1 + band
  long verdict_disagreements = 0;  // between the two condition sets
  bool empirical = false;       // s5 != 1 (outside the proved theorem)
};

/// Full grid scan; res points per axis (>= 2), modes over [-pi, pi]^2.
/// row_sink, when set, receives every grid point in deterministic order.
ScanReport stability_scan(const ScanBox& box, int res,
                          const std::function<void(const ScanPoint&)>& row_sink = {});

/// Sign functions of the stability proof (validated closed forms).
double sign_function_f(double s2, double s4, double w0, double chi1, double chi2);
double sign_function_h(double s2, double s4, double w0, double chi1, double chi2);
double sign_function_k(double s2, double s4, double w0, double chi1, double chi2);

/// Boundary-face restrictions of F, index order:
/// s2=0, s2=2, s4=0, s4=2, w0=0, w0=1, chi1=-1, chi1=+1.
inline constexpr int kNumBoundaryCases = 8;
extern const char* const kBoundaryCaseNames[kNumBoundaryCases];
double boundary_case_f(int which, double s2, double s4, double w0, double chi1, double chi2);

struct SignSampleResult {
  long samples = 0;
  long violations = 0;
  double worst_margin = 0;  // signed; claim is F<0 (H,K>0): margin is max F (min H/K)
  std::array<double, 5> worst_point{};
};

enum class SignFunction { f, h, k, k_subfunctions };

/// Dense random sampling on the open box; deterministic for a fixed seed.
SignSampleResult sample_sign_function(SignFunction which, long n, std::uint64_t seed);

/// Boundary faces of F: samples each face and requires <= band.
SignSampleResult sample_boundary_case(int which, long n, std::uint64_t seed);

/// Appendix-style K factorization cases (s4=0 and s2=2 faces, chi corners),
/// checked as identities against the direct K and for their asserted signs.
double k_case_s4_zero(double s2, double w0, double chi1, double chi2);
double k_case_s2_two(double s4, double w0, double chi1, double chi2);

}  // namespace lbfd
