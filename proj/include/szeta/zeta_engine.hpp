#pragma once

// Spectral zeta function of one extension,
//     zeta(s) = sum_{lambda_n > 0} lambda_n^{-s},
// with three evaluation routes (closed form for the lattice extensions, direct
// sum for Re s > 1, analytic continuation via a resummed tail model), the
// closed-form catalog of poles and residues, numeric residue extraction, and
// the induced small-t heat-kernel expansion.
//
// Conventions. Nonpositive eigenvalues (one can occur, for beta at or above
// the threshold) are excluded from every zeta sum and reported in the
// excluded_* fields; the heat trace keeps all levels. A pole of the catalog at
//     s0 = -N (2 kappa - 1) - 2n
// carries residue ((-1)^N / pi) C_{N,n} sin(2 pi N kappa); the Weyl pole at
// s = 1 carries residue 1/4 for every extension. Heat coefficients pair the
// power -s0 with Gamma(s0) times the residue.

#include <complex>
#include <utility>
#include <vector>

#include "szeta/sae.hpp"
#include "szeta/spectrum.hpp"

namespace szeta::zeta_engine {

using cpx = std::complex<double>;

enum class NumericCheck {
  Supported,         // inside the continuation window, N <= 2 model order,
                     // residue large enough to resolve
  BeyondModelOrder,  // needs N >= 3 tail orders, or sits below the numeric
                     // resolution; invisible to the continuation model
  OutsideWindow,     // position at or below the Re s > -1.9 validation window
  Vanishing,         // residue is (numerically) exactly zero
};

struct PoleEntry {
  double position = 0.0;
  double total_residue = 0.0;
  std::vector<std::pair<int, int>> contributors;  // (N, n) pairs, merged
  bool vanishing = false;
  NumericCheck numeric_check = NumericCheck::Supported;
};

struct PoleCatalog {
  std::vector<PoleEntry> entries;  // descending position, s = 1 first
};

enum class Region { DirectSum, Continued };

struct ZetaValue {
  cpx s;
  cpx value;
  double err_estimate = 0.0;
  Region region = Region::Continued;
  int excluded_count = 0;          // nonpositive eigenvalues left out of the sum
  double excluded_lambda = 0.0;    // the excluded eigenvalue, if any
  double excluded_magnitude = 0.0; // |lambda|^{-Re s} of the excluded level (0 if lambda = 0)
};

// 4^{-s} zeta_H(s, 1 - kappa) for beta = 0; 4^{-s} zeta_H(s, kappa) for the
// minus-infinity extension and the ESA regime. No closed form otherwise.
cpx zeta_closed_form(cpx s, const spectrum::SecularContext& ctx);

// Direct spectral sum over the first M levels with the exact-model tail
// completion; requires Re s > 1.
ZetaValue zeta_direct(cpx s, const spectrum::SecularContext& ctx, int M,
                      const spectrum::Spectrum* precomputed = nullptr);

// Analytic continuation: Kahan-compensated head sum over the first M levels
// plus the tail model
//   4^{-s} [ zeta_H(s, M+1-kappa) - s d1 zeta_H(s+2k, M)
//            - s (kappa-1) d1 (s+2k) zeta_H(s+2k+1, M)
//            - s d3 zeta_H(s+4k-1, M) ],
//   d1 = (beta/pi) sin(2 pi kappa),  d3 = -(beta^2/(2 pi)) sin(4 pi kappa),
// from the second-order large-n eigenvalue expansion with its leading band
// resummed exactly. Valid for Re s > -1.95 and s at least pole_guard away from
// every genuine continuation pole; throws domain_error otherwise.
ZetaValue zeta_continued(cpx s, const spectrum::SecularContext& ctx, int M,
                         const spectrum::Spectrum* precomputed = nullptr,
                         double pole_guard = 1e-3);

// All poles with N <= N_max, n <= n_max; positions closer than merge_tol are
// merged into one entry with summed residue.
PoleCatalog pole_catalog(const spectrum::SecularContext& ctx, int N_max, int n_max,
                         double merge_tol);

struct ResidueEstimate {
  double value = 0.0;
  double uncertainty = 0.0;  // quadratic- vs linear-extrapolant spread
};

// Residue at s0 from (s - s0) zeta(s) sampled at s0 + eps, eps in
// {0.1, 0.05, 0.025}, extrapolated to eps = 0 (Neville quadratic).
ResidueEstimate residue_numeric(double s0, const spectrum::SecularContext& ctx, int M,
                                const spectrum::Spectrum* precomputed = nullptr);

struct HeatCoefficient {
  double power = 0.0;        // -position
  double coefficient = 0.0;  // Gamma(position) * residue; 0 when !defined
  bool defined = true;       // false at nonpositive-integer positions (Gamma pole)
  double position = 0.0;
  double residue = 0.0;
};

// Heat-kernel coefficients induced by the pole catalog:
//   Tr e^{-tH} ~ sum coefficient * t^{power}.
std::vector<HeatCoefficient> heat_coefficients(const spectrum::SecularContext& ctx,
                                               int N_max, int n_max, double merge_tol);

struct HeatTrace {
  double value = 0.0;
  double err_estimate = 0.0;
};

// Tr e^{-tH} over all levels: first M computed eigenvalues, then the large-n
// model until terms fall below 1e-18 of the total, plus a geometric bound on
// the remainder.
HeatTrace heat_trace_numeric(double t, const spectrum::SecularContext& ctx, int M);

}  // namespace szeta::zeta_engine
