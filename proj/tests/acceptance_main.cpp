// Acceptance gate: runs the thirteen numbered criteria and prints one verdict
// line per criterion, with the measured values and pinned tolerances in the
// detail lines. [INFO]/[info] lines carry supplementary evidence and do not
// gate. Exit status is the number of failed criteria.

#include <iostream>

#include "szeta/verify.hpp"

int main() {
  const auto results = szeta::verify::run_suite("acceptance");
  return szeta::verify::print_report(results, std::cout);
}
