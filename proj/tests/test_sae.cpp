#include <cmath>
#include <random>

#include "doctest.h"
#include "szeta/error.hpp"
#include "szeta/sae.hpp"

using szeta::validation_error;
using namespace szeta::sae;

namespace {

bool rel_close(double got, double want, double rtol) {
  return std::fabs(got - want) <= rtol * std::fabs(want);
}

}  // namespace

TEST_CASE("params_from_g / g_from_kappa: derived quantities and round trip") {
  CouplingParams p0 = params_from_g(0.0);
  CHECK(p0.alpha == 1.0);
  CHECK(p0.kappa == 0.75);
  CouplingParams p = params_from_g(0.39);  // alpha = 1.3, kappa = 0.9
  CHECK(rel_close(p.alpha, 1.3, 1e-15));
  CHECK(rel_close(p.kappa, 0.9, 1e-15));
  for (double g = 0.0; g < 0.75; g += 0.037) {
    CHECK(std::fabs(g_from_kappa(params_from_g(g).kappa) - g) <= 1e-13);
  }
  CHECK_THROWS_AS(params_from_g(-0.3), validation_error);
  CHECK_THROWS_AS(g_from_kappa(0.4), validation_error);
  CHECK_THROWS_AS(g_from_kappa(1.0), validation_error);
}

TEST_CASE("regime: boundary g = 3/4 is essentially self-adjoint") {
  CHECK(regime(0.0) == RegimeTag::NontrivialSAE);
  CHECK(regime(0.74999) == RegimeTag::NontrivialSAE);
  CHECK(regime(0.75) == RegimeTag::EssentiallySelfAdjoint);
  CHECK(regime(5.0) == RegimeTag::EssentiallySelfAdjoint);
}

TEST_CASE("gamma phases: frozen values at alpha = 1 and alpha = 1.3") {
  CouplingParams a1 = params_from_g(0.0);
  CHECK(rel_close(gamma1(a1), 0.83887024394321282, 1e-13));
  CHECK(rel_close(gamma2(a1), 0.25843254845881058, 1e-13));
  CHECK(rel_close(std::sin(gamma1(a1) - gamma2(a1)), 0.54839000021044025, 1e-13));
  CouplingParams a13 = params_from_g(0.39);
  CHECK(rel_close(gamma1(a13), 1.2915037977422529, 1e-13));
  CHECK(rel_close(gamma2(a13), 0.18071636659235533, 1e-13));
}

TEST_CASE("beta_from_gamma: frozen values") {
  CouplingParams a1 = params_from_g(0.0);
  CHECK(rel_close(beta_from_gamma(gamma2(a1), a1).beta, 0.83622270219672543, 1e-13));
  CHECK(rel_close(beta_from_gamma(0.3, a1).beta, 0.85903101494033057, 1e-13));
  CHECK(rel_close(beta_from_gamma(1.1, a1).beta, 1.4499571395853430, 1e-13));
  CHECK(rel_close(beta_from_gamma(2.9, a1).beta, 0.53661793418384277, 1e-13));
  CouplingParams a13 = params_from_g(0.39);
  CHECK(rel_close(beta_from_gamma(gamma2(a13), a13).beta, 0.44395607791287280, 1e-13));
  CHECK(rel_close(beta_from_gamma(0.3, a13).beta, 0.55134984205084884, 1e-13));
  CHECK(rel_close(beta_from_gamma(1.1, a13).beta, 1.6189567945530200, 1e-13));
  CHECK(rel_close(beta_from_gamma(2.9, a13).beta, 0.041321222586636303, 1e-13));
}

TEST_CASE("beta_from_gamma: monotone between poles, one divergence per period") {
  for (double g : {0.0, 0.2, 0.39, 0.6}) {
    CouplingParams p = params_from_g(g);
    double g2 = gamma2(p);
    // Strictly increasing on a pole-free continuity interval.
    const int kGrid = 1000;
    double lo = g2 - 1.5, hi = g2 + 1.5;  // inside (g2 - pi/2, g2 + pi/2)
    double prev = beta_from_gamma(lo, p).beta;
    bool monotone = true;
    for (int i = 1; i <= kGrid; ++i) {
      double gamma = lo + (hi - lo) * i / kGrid;
      double b = beta_from_gamma(gamma, p).beta;
      if (!(b > prev)) monotone = false;
      prev = b;
    }
    CHECK(monotone);
    // Exactly one denominator sign change over one full period of length pi.
    const int kScan = 10000;
    int flips = 0;
    double c_prev = std::cos(lo - g2);
    for (int i = 1; i <= kScan; ++i) {
      double gamma = lo + 3.14159265358979323846 * i / kScan;
      double c = std::cos(gamma - g2);
      if (c_prev * c < 0.0) ++flips;
      c_prev = c;
    }
    CHECK(flips == 1);
    // The pole angle itself maps to the minus-infinity extension.
    ExtensionParam e = beta_from_gamma(g2 + 1.5707963267948966, p);
    CHECK(!e.is_finite());
    CHECK(e.kind == ExtensionKind::MinusInfinity);
  }
}

TEST_CASE("ExtensionParam: construction guards") {
  CHECK(ExtensionParam::finite(2.5).beta == 2.5);
  CHECK(ExtensionParam::finite(0.0).is_finite());
  CHECK(!ExtensionParam::minus_infinity().is_finite());
  CHECK_THROWS_AS(ExtensionParam::finite(HUGE_VAL), validation_error);
  CHECK_THROWS_AS(ExtensionParam::finite(std::nan("")), validation_error);
}
