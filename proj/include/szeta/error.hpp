#pragma once

#include <stdexcept>
#include <string>

namespace szeta {

// Error hierarchy mapped to process exit codes by the CLI:
// validation_error -> 2, domain_error -> 3, anything else -> 1.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input (bad flags, out-of-range settings).
struct validation_error : error {
  using error::error;
};

// Mathematically invalid request (pole of Gamma/zeta, wrong region, guard
// violation of a truncated expansion).
struct domain_error : error {
  using error::error;
};

// Broken internal invariant; indicates a bug, not a user mistake.
struct internal_error : error {
  using error::error;
};

}  // namespace szeta
