#include "szeta/asymptotics.hpp"

#include <cmath>
#include <vector>

#include "szeta/error.hpp"
#include "szeta/specfun.hpp"

namespace szeta::asymptotics {

namespace {

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
  return r;
}

}  // namespace

double a_m(int m, double kappa) {
  if (m < 1) throw validation_error("a_m: requires m >= 1");
  double k = kappa, ck = 1.0 - kappa;
  double k2m = std::pow(k, 2 * m), ck2m = std::pow(ck, 2 * m);
  double brace = (ck2m - k2m) + (k - 0.5) / m * (ck2m + k2m);
  double bsum = 0.0;
  for (int p = 1; p <= m; ++p) {
    double odd = std::pow(k, 2 * (m - p) + 1) - std::pow(ck, 2 * (m - p) + 1);
    bsum += specfun::bernoulli_2k(p) / (p * (2.0 * p - 1.0)) * binom(2 * m - 1, 2 * p - 2) * odd;
  }
  brace += (2.0 * m + 1.0) * bsum;
  return std::ldexp(1.0, 4 * m - 1) / (2.0 * m + 1.0) * brace;
}

double b_n(int n, double kappa, int N) {
  if (n < 0) throw validation_error("b_n: requires n >= 0");
  if (N < 1) throw validation_error("b_n: requires N >= 1");
  // exp of a power series: E_0 = 1, k E_k = sum_{j=1}^{k} j P_j E_{k-j}.
  std::vector<double> E(n + 1, 0.0);
  E[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += j * (N * a_m(j, kappa)) * E[k - j];
    E[k] = acc / k;
  }
  return E[n];
}

double C_Nn(int N, int n, double kappa, double beta) {
  if (N < 1) throw validation_error("C_Nn: requires N >= 1");
  if (n < 0) throw validation_error("C_Nn: requires n >= 0");
  double base = std::pow(4.0, 2.0 * kappa - 1.0);
  double base_pow = 1.0;
  for (int i = 0; i < N; ++i) base_pow *= base;
  double aggregate =
      -base_pow * (2.0 * kappa - 1.0 + 2.0 * static_cast<double>(n) / N) * b_n(n, kappa, N);
  double beta_pow = 1.0;
  for (int i = 0; i < N; ++i) beta_pow *= beta;
  return aggregate * beta_pow;
}

cpx log_gamma_ratio_exact(cpx lambda, double kappa) {
  cpx t = 0.25 * lambda;
  return specfun::log_gamma(1.0 - kappa - t) - specfun::log_gamma(kappa - t);
}

cpx log_gamma_ratio_asymptotic(cpx lambda, double kappa, int M) {
  if (M < 0) throw validation_error("log_gamma_ratio_asymptotic: requires M >= 0");
  cpx res = (1.0 - 2.0 * kappa) * std::log(-lambda / 4.0);
  cpx inv2 = 1.0 / (lambda * lambda);  // (-lambda)^{-2}
  cpx w = inv2;
  double prev = HUGE_VAL;
  for (int m = 1; m <= M; ++m) {
    cpx term = a_m(m, kappa) * w;
    double mag = std::abs(term);
    if (mag > prev)
      throw domain_error("log_gamma_ratio_asymptotic: series diverging at this order");
    res += term;
    prev = mag;
    w *= inv2;
  }
  return res;
}

cpx first_term_asymptotic(cpx lambda, double kappa, double beta, int N_max, int n_max) {
  if (N_max < 1) throw validation_error("first_term_asymptotic: requires N_max >= 1");
  if (n_max < 0) throw validation_error("first_term_asymptotic: requires n_max >= 0");
  cpx mq = -lambda / 4.0;
  double guard = std::fabs(beta) * std::exp((1.0 - 2.0 * kappa) * std::log(std::abs(mq)));
  if (!(guard < 1.0))
    throw domain_error("first_term_asymptotic: outside the geometric convergence region");
  cpx log_ml = std::log(-lambda);
  cpx res = 0.0;
  for (int N = 1; N <= N_max; ++N) {
    for (int n = 0; n <= n_max; ++n) {
      double p = -N * (2.0 * kappa - 1.0) - 2.0 * n - 1.0;
      res += C_Nn(N, n, kappa, beta) * std::exp(p * log_ml);
    }
  }
  return res;
}

}  // namespace szeta::asymptotics
