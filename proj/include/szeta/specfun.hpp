#pragma once

#include <complex>

namespace szeta::specfun {

using cpx = std::complex<double>;

// sin(pi x) / cos(pi x) with argument reduction; exactly 0 at the lattice
// points (integers, respectively half-integers), which downstream code relies
// on to kill Gamma-pole terms without tolerance fudging.
double sinpi(double x);
double cospi(double x);

// B_{2k} for k in [1, 30]; B_2 = 1/6, B_4 = -1/30.
double bernoulli_2k(int k);

// Principal-branch log Gamma (standard continuous branch off the negative
// axis). Throws domain_error at non-positive integers. Relative accuracy
// <= 1e-13 for |z| <= 1e6 away from poles.
cpx log_gamma(cpx z);

// log |Gamma(x)| for real x (any sign, off poles); +inf at poles.
double log_abs_gamma(double x);

// Sign of Gamma(x): +1 for x > 0, alternating on (-k-1, -k), 0 at poles.
int gamma_sign(double x);

// Gamma(x) for real x off poles, via log_abs_gamma and gamma_sign; overflows
// to +-inf for large |x| rather than throwing.
double gamma_real(double x);

// Digamma psi(z); throws domain_error at non-positive integers.
cpx digamma(cpx z);
double digamma(double x);

// 1/Gamma(x): entire, exactly 0 at non-positive integers. For very negative
// non-integer x the true value exceeds double range and +-HUGE_VAL with the
// correct sign is returned.
double recip_gamma(double x);

// psi(x)/Gamma(x): entire combination (finite at every real x), used to keep
// the secular derivative pole-free.
double digamma_over_gamma(double x);

// F(lambda) = Gamma(kappa - lambda/4) / Gamma(1 - kappa - lambda/4),
// computed via log-gamma differences with sign tracking. Returns exactly 0
// where the denominator argument hits a Gamma pole and a signed infinity
// where the numerator argument does (sign of the limit from above in lambda).
double gamma_ratio(double kappa, double lambda);

// Hurwitz zeta(s, q), q > 0, by Euler-Maclaurin summation. Accuracy
// <= 1e-12 relative for Re s > -5, |Im s| <= 50. Throws domain_error at the
// s = 1 pole and for q <= 0.
cpx hurwitz_zeta(cpx s, double q);

// eps * zeta(1 + eps, q): finite at eps = 0 (value 1), removable-singularity
// companion to hurwitz_zeta used where a vanishing coefficient multiplies the
// zeta pole.
cpx eps_hurwitz_product(cpx eps, double q);

// Riemann zeta(s) = hurwitz_zeta(s, 1).
cpx riemann_zeta(cpx s);

// Tricomi U(a; b; x), x > 0. Exact polynomial path for a a non-positive
// integer; two-Kummer-M connection formula for x <= 30; asymptotic series for
// x > 30. Accuracy degrades near integer b; *degraded is set accordingly when
// provided. Throws domain_error on overflow or x <= 0.
double kummer_u(double a, double b, double x, bool* degraded = nullptr);

// Physicists' Hermite polynomial H_n(x) by three-term recurrence.
double hermite(int n, double x);

}  // namespace szeta::specfun
