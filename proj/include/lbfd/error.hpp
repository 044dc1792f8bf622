// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace lbfd {

/// Parameter landed outside its legal open interval.
struct RangeError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Square-root argument of the modified-rate formula went negative.
struct NegativeRadicand : std::domain_error {
  using std::domain_error::domain_error;
};

/// Coefficient builder asked for a scheme the parameter set cannot produce.
struct SchemeMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

/// Multi-level step requested before the history ring was filled.
struct HistoryUnderflow : std::logic_error {
  using std::logic_error::logic_error;
};

/// Dirichlet problem is missing boundary value/derivative data.
struct BoundaryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// zeta*dt == 2 makes the macroscopic scaling singular.
struct DegenerateScaling : std::domain_error {
  using std::domain_error::domain_error;
};

/// A relaxation rate of zero makes the collision matrix non-invertible.
struct SingularRelaxation : std::domain_error {
  using std::domain_error::domain_error;
};

/// Field shapes disagree.
struct ShapeMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

/// Analytic bootstrap requested for a problem without a closed-form solution.
struct NoAnalyticSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Config text could not be parsed; message carries line/field diagnostics.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Config parsed but failed validation; message lists all violations.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lbfd
