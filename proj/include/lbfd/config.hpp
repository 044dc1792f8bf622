// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lbfd/params.hpp"

namespace lbfd {

/// Resolved run configuration: subcommand plus the flat key=value settings
/// (file lines and command-line overrides share one namespace).
struct RunConfig {
  std::string subcommand;  // run | converge | equiv | stability-scan | tables | params

  // problem
  std::optional<int> example;  // 1, 2, 3
  double kappa = 0, source_const = 0, source_linear = 0;
  double lx = 1, ly = 1, x0 = 0, y0 = 0;
  BoundaryKind boundary = BoundaryKind::periodic;

  // parameters
  double eps = 0.1;
  double s1 = 1.0;
  double s5 = 1.0;
  MatrixKind matrix_kind = MatrixKind::orthogonal;
  std::string scheme = "mrt_lb";

  // discretization / run
  double dx = 0.1, dt = 0.1, T = 1.0;
  int rungs = 4;
  std::vector<double> snapshots;

  // equiv
  int grid = 40, steps = 200;

  // stability scan
  double s2_lo = 0, s2_hi = 2, s4_lo = 0, s4_hi = 2, w0_lo = 0, w0_hi = 1;
  double scan_s5 = 1.0;
  int res = 12;
  long signs = 0;

  // tables
  std::string tables = "all";

  // output
  std::string out = "out";
  std::uint64_t seed = 20240901;
  bool svg = true;

  /// Canonical "k=v k=v ..." line for artifact headers.
  std::string resolved() const;
};

/// Parses flat key=value text (one pair per line, '#' comments). Throws
/// ParseError (with line numbers) or ValidationError (all violations listed).
RunConfig parse_config(const std::string& text);

/// Applies one key=value (or a bare exampleN token) to a config.
void apply_key_value(RunConfig& cfg, const std::string& token, const std::string& where);

/// Cross-field validation; derives parameter sets to surface RangeErrors.
void validate(const RunConfig& cfg);

/// Executes the subcommand, writing artifacts under cfg.out (or $LBFD_OUT).
/// Returns a process exit status; partially written artifacts are removed on
/// failure.
int dispatch(const RunConfig& cfg);

}  // namespace lbfd
