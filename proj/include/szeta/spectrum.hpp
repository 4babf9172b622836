#pragma once

// Spectrum of one self-adjoint extension. Eigenvalues are zeros of the secular
// function
//     f(lambda) = 1/Gamma(1 - kappa - lambda/4) - beta / Gamma(kappa - lambda/4),
// a transcription of the boundary condition Gamma(kappa - lambda/4) /
// Gamma(1 - kappa - lambda/4) = beta. Root isolation works on the bounded form
//     f_b(t) = sinpi(1 - kappa - t) - beta G(t) sinpi(kappa - t),
//     G(t) = Gamma(1 - kappa + t) / Gamma(kappa + t),  t = lambda / 4,
// which equals pi f / Gamma(kappa + t) and shares its zeros for lambda > -4 kappa.
// At t = n + kappa the beta term vanishes identically and f_b alternates sign,
// so (4(n - 1 + kappa), 4(n + kappa)) brackets the n-th excited level for every
// finite beta.

#include <vector>

#include "szeta/sae.hpp"

namespace szeta::spectrum {

struct SecularContext {
  sae::CouplingParams params;
  sae::ExtensionParam ext;
};

enum class Provenance {
  ClosedForm,      // lattice spectrum: beta = 0, beta = -infinity, or ESA regime
  RootFound,       // bisection plus Newton polish on f_b
  AsymptoticTail,  // large-n expansion, used for tails beyond computed roots
};

struct Level {
  int n = 0;
  double lambda = 0.0;
  Provenance provenance = Provenance::RootFound;
};

struct Spectrum {
  std::vector<Level> levels;    // strictly increasing in lambda
  bool has_nonpositive = false; // lambda_0 <= 0 present
  bool at_threshold = false;    // beta sits exactly at the zero-mode threshold
};

struct GroundStateResult {
  Level level;
  bool at_threshold = false;
};

struct SimplicityEntry {
  int n = 0;
  double lambda = 0.0;
  double f_prime = 0.0;     // secular_f_prime at the root; nonzero iff simple
  double pole_margin = 0.0; // distance to the nearest Gamma pole of either factor
  bool ok = false;
};

// Gamma(kappa)/Gamma(1-kappa): the beta at which lambda_0 = 0.
double threshold_beta(double kappa);

// Secular function value. Never NaN: once Gamma(kappa + t) overflows the
// result is +-HUGE_VAL with the sign of f_b.
double secular_f(double lambda, const SecularContext& ctx);

// d f / d lambda through the entire combination psi/Gamma, finite at the
// Gamma poles of either term.
double secular_f_prime(double lambda, const SecularContext& ctx);

// Bounded secular form f_b and its lambda-derivative; valid for
// lambda > 4 (kappa - 1).
double secular_f_bounded(double lambda, const SecularContext& ctx);
double secular_f_bounded_prime(double lambda, const SecularContext& ctx);

// Ground state (n = 0). Branches on beta against threshold_beta:
//   beta >  thr : lambda_0 < 0, from the monotone log-Gamma-ratio equation;
//   beta == thr : lambda_0 = 0 exactly, flagged at_threshold;
//   0 < beta < thr : root in (0, 4(1-kappa));
//   beta <= 0   : root in [4(1-kappa), 4 kappa).
GroundStateResult ground_state(const SecularContext& ctx);

// n-th eigenvalue. Bisection to absolute width 1e-12 (or the ULP floor of the
// bracket) followed by at most 5 Newton steps that may not leave the bracket.
double eigenvalue(int n, const SecularContext& ctx);

// Large-n expansion lambda_n ~ 4 [ n + 1 - kappa + d1 n^{1-2k} + d2 n^{-2k}
// + d3 n^{2-4k} ], d1 = (beta/pi) sin(2 pi kappa), d2 = d1 (1-kappa)(1-2kappa),
// d3 = -(beta^2/(2 pi)) sin(4 pi kappa). Exact lattice values for beta = 0,
// beta = -infinity and the ESA regime.
double eigenvalue_asymptotic(int n, const SecularContext& ctx);

// Levels 0..n_max with ordering and ground-state flags.
Spectrum compute_spectrum(const SecularContext& ctx, int n_max);

// Eigenfunction phi_lambda(x) = x^alpha e^{-x^2/2} U((2 alpha + 1 - lambda)/4;
// alpha + 1/2; x^2), not normalized. Requires x > 0.
double eigenfunction(double lambda, double x, const sae::CouplingParams& p);

// Coefficient (2 alpha - 1) [Gamma(1/2 - alpha)/Gamma(alpha - 1/2)]
// [Gamma((2 alpha + 1 - lambda)/4) / Gamma((3 - 2 alpha - lambda)/4)]:
// the ratio of the x^alpha to the x^{1-alpha} amplitude in phi_lambda near 0,
// scaled by (2 alpha - 1).
double boundary_coefficient(double lambda, const sae::CouplingParams& p);

// Reports f'(lambda_n) and the pole margin for levels 0..n_max; every
// eigenvalue of a fixed extension is simple, so ok should hold throughout.
std::vector<SimplicityEntry> simplicity_check(const SecularContext& ctx, int n_max);

}  // namespace szeta::spectrum
