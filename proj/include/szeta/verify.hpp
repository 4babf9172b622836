#pragma once

// Verification suites: each check exercises one advertised property of the
// library end to end and reports a pass/fail verdict with the measured
// numbers. The thirteen numbered criteria gate the build; checks marked
// informational document supplementary evidence and do not gate.
//
// Suites:
//   "specfun"     fast special-function identity checks
//   "spectrum"    criteria 1, 2, 3, 4, 13
//   "asymptotics" criteria 5, 6
//   "zeta"        criteria 7, 8, 9, 10, 11, 12
//   "acceptance"  all thirteen criteria in order
//   "all"         specfun checks plus the acceptance set
//
// Criterion 2 fans its (kappa, beta) grid out over std::async workers; the
// SZETA_THREADS environment variable caps the worker count. Results are
// aggregated in fixed grid order, so the report is deterministic regardless
// of the thread count.

#include <iosfwd>
#include <string>
#include <vector>

namespace szeta::verify {

struct CheckResult {
  std::string id;
  std::string name;
  bool pass = false;
  bool informational = false;  // reported, but never gates a suite
  std::string detail;
  double seconds = 0.0;
};

std::vector<CheckResult> run_suite(const std::string& suite);

// Prints one line per check plus a summary; returns the number of failed
// gating (non-informational) checks.
int print_report(const std::vector<CheckResult>& results, std::ostream& os);

}  // namespace szeta::verify
