#pragma once

// Parameter algebra for the half-line operator -d^2/dx^2 + g/x^2 + x^2 and
// the one-parameter family of its self-adjoint extensions.
//
// Conventions used throughout the library:
//   alpha = 1/2 + sqrt(g + 1/4),   kappa = (2 alpha + 1) / 4.
// For the coupling window 0 <= g < 3/4 this gives kappa in [3/4, 1) and the
// operator admits a one-parameter family of extensions; for g >= 3/4 it is
// essentially self-adjoint and the boundary parameter is absent.

namespace szeta::sae {

struct CouplingParams {
  double g = 0.0;      // coupling of the 1/x^2 term
  double alpha = 1.0;  // 1/2 + sqrt(g + 1/4)
  double kappa = 0.75; // (2 alpha + 1)/4
};

enum class RegimeTag {
  NontrivialSAE,           // g < 3/4: one-parameter extension family
  EssentiallySelfAdjoint,  // g >= 3/4: unique self-adjoint realization
};

enum class ExtensionKind { Finite, MinusInfinity };

// Boundary parameter selecting one self-adjoint extension. beta = -infinity
// labels the distinguished extension reached when the gamma-map denominator
// vanishes (the map diverges through +infinity and -infinity at the same
// boundary condition, so the two signs name a single extension).
struct ExtensionParam {
  ExtensionKind kind = ExtensionKind::Finite;
  double beta = 0.0;  // meaningful only when kind == Finite

  static ExtensionParam finite(double b);
  static ExtensionParam minus_infinity();
  bool is_finite() const { return kind == ExtensionKind::Finite; }
};

// Derives alpha and kappa from g. Requires g >= -1/4 (real alpha); the
// supported coupling window for the rest of the library is g >= 0.
CouplingParams params_from_g(double g);

// Inverse map on the kappa parametrization, kappa in [1/2, 1).
double g_from_kappa(double kappa);

RegimeTag regime(double g);

// Phases of the extension map: gamma1 = arg Gamma(1 - kappa - i/4),
// gamma2 = arg Gamma(kappa - i/4).
double gamma1(const CouplingParams& p);
double gamma2(const CouplingParams& p);

// beta(gamma) = cos(gamma - gamma1) / cos(gamma - gamma2). Monotone increasing
// between consecutive poles of the denominator; |cos(gamma - gamma2)| <= 1e-12
// is mapped to the minus-infinity extension.
ExtensionParam beta_from_gamma(double gamma, const CouplingParams& p);

}  // namespace szeta::sae
