#pragma once

// Large-|lambda| expansions feeding the pole catalog. Two layers:
//
//  * a_m(kappa): closed-form coefficients of the asymptotic expansion
//      log [ Gamma(1 - kappa - lambda/4) / Gamma(kappa - lambda/4) ]
//        ~ (1 - 2 kappa) log(-lambda/4) + sum_m a_m (-lambda)^{-2m};
//
//  * C_{N,n}(kappa, beta): coefficients of the expansion of the secular
//    correction to the resolvent trace,
//      sum_{N>=1} sum_{n>=0} C_{N,n} (-lambda)^{-N(2 kappa - 1) - 2n - 1},
//    with b_n(kappa, N) the Taylor coefficients of exp(N sum_m a_m w^m) and
//      C_{N,n} = -(4^{2 kappa - 1} beta)^N (2 kappa - 1 + 2n/N) b_n.
//
// Both series are asymptotic, not convergent; the evaluators guard against
// being used beyond the order where terms start growing.

#include <complex>

namespace szeta::asymptotics {

using cpx = std::complex<double>;

// Closed form for a_m; exact zero at kappa = 1/2. Requires m >= 1.
double a_m(int m, double kappa);

// Taylor coefficient of exp(N sum_{m>=1} a_m(kappa) w^m) at order n; b_0 = 1.
double b_n(int n, double kappa, int N);

// -(4^{2k-1} beta)^N (2k - 1 + 2n/N) b_n(kappa, N). The beta-free aggregate is
// formed first and the beta^N factor (integer power by repeated multiplication)
// is applied last, so C_{N,n}(beta) equals C_{N,n}(1) times beta^N exactly.
double C_Nn(int N, int n, double kappa, double beta);

// Exact left side of the first expansion, from the complex log Gamma.
cpx log_gamma_ratio_exact(cpx lambda, double kappa);

// Truncation of the first expansion at order M (terms m = 1..M). Throws
// domain_error once the term magnitudes start growing at this lambda.
cpx log_gamma_ratio_asymptotic(cpx lambda, double kappa, int M);

// Truncation of the second expansion at N <= N_max, n <= n_max. Requires the
// geometric guard |beta (-lambda/4)^{1-2 kappa}| < 1; throws domain_error
// otherwise. The series covers only the beta-dependent part: the integer-power
// band common to all extensions is omitted.
cpx first_term_asymptotic(cpx lambda, double kappa, double beta, int N_max, int n_max);

}  // namespace szeta::asymptotics
