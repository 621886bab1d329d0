// Acceptance gate: runs the ten verification criteria and prints one
// pass/fail line per criterion.  Exits nonzero if any criterion fails.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bergman/verify.hpp"

int main() {
  using bergman::verify::CheckResult;
  struct Criterion {
    const char* title;
    std::function<std::vector<CheckResult>()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 spectrum oracle (Nystrom vs analytic singular values)",
       bergman::verify::criterion_spectrum_oracle},
      {"2 trace identity (Schatten-1 sum vs closed form)",
       bergman::verify::criterion_trace_identity},
      {"3 Dixmier trace extrapolation",
       bergman::verify::criterion_dixmier},
      {"4 Schatten/Macaev thresholds and decay slope",
       bergman::verify::criterion_schatten_macaev},
      {"5 Forelli-Rudin integrals and asymptotics",
       bergman::verify::criterion_forelli_rudin},
      {"6 Berezin transform quadrature vs closed form",
       bergman::verify::criterion_berezin},
      {"7 finite-rank counts",
       bergman::verify::criterion_finite_rank},
      {"8 fractional radial derivative algebra",
       bergman::verify::criterion_radial_diff},
      {"9 classifier golden table",
       bergman::verify::criterion_classifier_table},
      {"10 eigenvalue ratio comparability",
       bergman::verify::criterion_funo_ratio},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::vector<CheckResult> checks;
    std::string error;
    try {
      checks = criterion.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    bool pass = error.empty();
    for (const auto& c : checks) pass = pass && c.pass;
    std::printf("criterion %s: %s\n", criterion.title,
                pass ? "PASS" : "FAIL");
    if (!pass) {
      ++failures;
      if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
      for (const auto& c : checks) {
        if (!c.pass) {
          std::printf("    failed check %s: value=%.12g target=%.12g "
                      "tolerance=%.12g %s\n",
                      c.name.c_str(), c.value, c.target, c.tolerance,
                      c.detail.c_str());
        }
      }
    }
  }
  return failures == 0 ? 0 : 1;
}
