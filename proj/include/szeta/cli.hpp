#pragma once

// Batch front end: one JobSpec in, one JSON document or CSV table out.
//
// Commands: spectrum, zeta, poles, heat, verify. Extension selection: exactly
// one of g/kappa, and (away from the essentially self-adjoint regime) exactly
// one of beta/gamma; beta accepts the literal "-inf". Exit codes: 0 success,
// 2 validation error, 3 numerical-domain error, 1 internal failure. Output is
// deterministic for identical jobs, independent of SZETA_THREADS.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace szeta::cli {

struct JobSpec {
  std::string command;  // spectrum | zeta | poles | heat | verify
  std::optional<double> g;
  std::optional<double> kappa;
  std::optional<std::string> beta;  // decimal literal or "-inf"
  std::optional<double> gamma;
  int n_max = 10;        // spectrum: levels 0..n_max
  int M = 2000;          // zeta/heat: computed head length
  int N_max = 6;         // poles/heat: deepest tail order
  int n_pole_max = 8;    // poles/heat: deepest ladder index
  std::vector<std::string> s_values;  // zeta: "re" or "re,im" literals
  std::vector<double> t_values;       // heat: evaluation times
  std::string format = "json";        // json | csv
  double merge_tol = 1e-9;
  double pole_guard = 1e-3;
  std::string suite = "all";  // verify: specfun | spectrum | asymptotics | zeta | all
};

// Job-file (de)serialization; strict about unknown keys.
JobSpec jobspec_from_json(const std::string& text);
std::string jobspec_to_json(const JobSpec& job);

// Executes the job; diagnostics go to err as single lines. Returns the exit code.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

// Full command line including `--job file.json`; writes to the given streams.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int main_entry(int argc, const char* const* argv);

}  // namespace szeta::cli
