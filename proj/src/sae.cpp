#include "szeta/sae.hpp"

#include <cmath>

#include "szeta/error.hpp"
#include "szeta/specfun.hpp"

namespace szeta::sae {

ExtensionParam ExtensionParam::finite(double b) {
  if (!std::isfinite(b)) throw validation_error("ExtensionParam: beta must be finite");
  ExtensionParam e;
  e.kind = ExtensionKind::Finite;
  e.beta = b;
  return e;
}

ExtensionParam ExtensionParam::minus_infinity() {
  ExtensionParam e;
  e.kind = ExtensionKind::MinusInfinity;
  e.beta = -HUGE_VAL;
  return e;
}

CouplingParams params_from_g(double g) {
  if (!(g >= -0.25)) throw validation_error("params_from_g: requires g >= -1/4");
  CouplingParams p;
  p.g = g;
  p.alpha = 0.5 + std::sqrt(g + 0.25);
  p.kappa = 0.25 * (2.0 * p.alpha + 1.0);
  return p;
}

double g_from_kappa(double kappa) {
  if (!(kappa >= 0.5 && kappa < 1.0))
    throw validation_error("g_from_kappa: requires kappa in [1/2, 1)");
  double t = 4.0 * kappa - 2.0;
  return 0.25 * (t * t - 1.0);
}

RegimeTag regime(double g) {
  return g < 0.75 ? RegimeTag::NontrivialSAE : RegimeTag::EssentiallySelfAdjoint;
}

double gamma1(const CouplingParams& p) {
  return specfun::log_gamma(specfun::cpx(1.0 - p.kappa, -0.25)).imag();
}

double gamma2(const CouplingParams& p) {
  return specfun::log_gamma(specfun::cpx(p.kappa, -0.25)).imag();
}

ExtensionParam beta_from_gamma(double gamma, const CouplingParams& p) {
  double c2 = std::cos(gamma - gamma2(p));
  if (std::fabs(c2) <= 1e-12) return ExtensionParam::minus_infinity();
  return ExtensionParam::finite(std::cos(gamma - gamma1(p)) / c2);
}

}  // namespace szeta::sae
