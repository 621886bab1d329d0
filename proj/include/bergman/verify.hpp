#pragma once

#include <string>
#include <vector>

#include "bergman/errors.hpp"

namespace bergman::verify {

/// One verification check: a measured value compared against a target with
/// a tolerance.  For boolean checks, value is 1.0 (pass) or 0.0.
struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool all_pass() const;
};

// The ten verification criteria.  Each returns its sub-checks, including a
// runtime check against the documented budget.
std::vector<CheckResult> criterion_spectrum_oracle();    // 1
std::vector<CheckResult> criterion_trace_identity();     // 2
std::vector<CheckResult> criterion_dixmier();            // 3
std::vector<CheckResult> criterion_schatten_macaev();    // 4
std::vector<CheckResult> criterion_forelli_rudin();      // 5
std::vector<CheckResult> criterion_berezin();            // 6
std::vector<CheckResult> criterion_finite_rank();        // 7
std::vector<CheckResult> criterion_radial_diff();        // 8
std::vector<CheckResult> criterion_classifier_table();   // 9
std::vector<CheckResult> criterion_funo_ratio();         // 10

/// Run one of {all, specfun, spectral, quad, nystrom, classify}; checks are
/// sorted by name in the returned report.  Throws ParameterError on an
/// unknown suite name.
SuiteReport run_suite(const std::string& suite);

}  // namespace bergman::verify
