#include "szeta/spectrum.hpp"

#include <cmath>

#include "szeta/error.hpp"
#include "szeta/specfun.hpp"

namespace szeta::spectrum {

namespace {

constexpr double kPi = 3.1415926535897932385;
constexpr double kLogPi = 1.1447298858494001741;

bool lattice_spectrum(const SecularContext& ctx) {
  return sae::regime(ctx.params.g) == sae::RegimeTag::EssentiallySelfAdjoint ||
         !ctx.ext.is_finite();
}

double finite_beta(const SecularContext& ctx) {
  if (!ctx.ext.is_finite())
    throw domain_error("secular form: undefined for the minus-infinity extension");
  return ctx.ext.beta;
}

// Bisection on f_b to absolute width 1e-12 (or the ULP floor), then at most
// 5 Newton steps confined to the bracket.
double refine_root(double lo, double hi, const SecularContext& ctx) {
  double flo = secular_f_bounded(lo, ctx);
  double fhi = secular_f_bounded(hi, ctx);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi))
    throw internal_error("refine_root: endpoints do not bracket a sign change");
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    double fm = secular_f_bounded(mid, ctx);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 5; ++i) {
    double fx = secular_f_bounded(x, ctx);
    double fpx = secular_f_bounded_prime(x, ctx);
    if (fpx == 0.0) break;
    double step = fx / fpx;
    double xn = x - step;
    if (!(xn >= lo && xn <= hi)) break;
    x = xn;
    if (std::fabs(step) <= 1e-15 * std::max(1.0, std::fabs(x))) break;
  }
  return x;
}

}  // namespace

double threshold_beta(double kappa) {
  return std::exp(specfun::log_abs_gamma(kappa) - specfun::log_abs_gamma(1.0 - kappa));
}

double secular_f(double lambda, const SecularContext& ctx) {
  double kappa = ctx.params.kappa;
  double t = 0.25 * lambda;
  if (!ctx.ext.is_finite()) return -specfun::recip_gamma(kappa - t);
  double beta = ctx.ext.beta;
  if (t <= 100.0)
    return specfun::recip_gamma(1.0 - kappa - t) - beta * specfun::recip_gamma(kappa - t);
  // Both reciprocals overflow together for large lambda; recover the sign and
  // magnitude from f = Gamma(kappa + t) f_b / pi instead of forming inf - inf.
  double fb = secular_f_bounded(lambda, ctx);
  if (fb == 0.0) return 0.0;
  double lg = specfun::log_abs_gamma(kappa + t) + std::log(std::fabs(fb)) - kLogPi;
  if (lg > 709.0) return fb > 0.0 ? HUGE_VAL : -HUGE_VAL;
  return std::copysign(std::exp(lg), fb);
}

double secular_f_prime(double lambda, const SecularContext& ctx) {
  double kappa = ctx.params.kappa;
  double t = 0.25 * lambda;
  double v = kappa - t;
  if (!ctx.ext.is_finite()) return -0.25 * specfun::digamma_over_gamma(v);
  double u = 1.0 - kappa - t;
  return 0.25 * (specfun::digamma_over_gamma(u) -
                 ctx.ext.beta * specfun::digamma_over_gamma(v));
}

double secular_f_bounded(double lambda, const SecularContext& ctx) {
  double kappa = ctx.params.kappa;
  double beta = finite_beta(ctx);
  double t = 0.25 * lambda;
  if (!(t > kappa - 1.0))
    throw domain_error("secular_f_bounded: requires lambda > 4 (kappa - 1)");
  double G = std::exp(specfun::log_abs_gamma(1.0 - kappa + t) -
                      specfun::log_abs_gamma(kappa + t));
  return specfun::sinpi(1.0 - kappa - t) - beta * G * specfun::sinpi(kappa - t);
}

double secular_f_bounded_prime(double lambda, const SecularContext& ctx) {
  double kappa = ctx.params.kappa;
  double beta = finite_beta(ctx);
  double t = 0.25 * lambda;
  if (!(t > kappa - 1.0))
    throw domain_error("secular_f_bounded_prime: requires lambda > 4 (kappa - 1)");
  double G = std::exp(specfun::log_abs_gamma(1.0 - kappa + t) -
                      specfun::log_abs_gamma(kappa + t));
  double psid = specfun::digamma(1.0 - kappa + t) - specfun::digamma(kappa + t);
  double ddt = -kPi * specfun::cospi(1.0 - kappa - t) -
               beta * (G * psid * specfun::sinpi(kappa - t) -
                       kPi * G * specfun::cospi(kappa - t));
  return 0.25 * ddt;
}

GroundStateResult ground_state(const SecularContext& ctx) {
  const auto& p = ctx.params;
  GroundStateResult r;
  r.level.n = 0;
  if (lattice_spectrum(ctx)) {
    r.level.lambda = 4.0 * p.kappa;
    r.level.provenance = Provenance::ClosedForm;
    return r;
  }
  double beta = ctx.ext.beta;
  if (beta == 0.0) {
    r.level.lambda = 4.0 * (1.0 - p.kappa);
    r.level.provenance = Provenance::ClosedForm;
    return r;
  }
  double thr = threshold_beta(p.kappa);
  if (beta == thr) {
    r.level.lambda = 0.0;
    r.level.provenance = Provenance::ClosedForm;
    r.at_threshold = true;
    return r;
  }
  r.level.provenance = Provenance::RootFound;
  if (beta > thr) {
    // Negative ground state from the monotone log form
    //   h(lambda) = log Gamma(kappa - t) - log Gamma(1 - kappa - t) - log beta,
    // strictly decreasing in lambda with h(0) < 0.
    double lnb = std::log(beta);
    auto h = [&](double lam) {
      double t = 0.25 * lam;
      return specfun::log_abs_gamma(p.kappa - t) -
             specfun::log_abs_gamma(1.0 - p.kappa - t) - lnb;
    };
    double hi = 0.0, lo = -1.0;
    while (h(lo) <= 0.0) {
      lo *= 2.0;
      if (lo < -1e15) throw internal_error("ground_state: runaway bracket expansion");
    }
    while (hi - lo > 1e-12) {
      double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      double hm = h(mid);
      if (hm == 0.0) {
        lo = hi = mid;
        break;
      }
      if (hm > 0.0)
        lo = mid;
      else
        hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 5; ++i) {
      double t = 0.25 * x;
      double hp = -0.25 * (specfun::digamma(p.kappa - t) - specfun::digamma(1.0 - p.kappa - t));
      if (hp == 0.0) break;
      double step = h(x) / hp;
      double xn = x - step;
      if (!(xn >= lo && xn <= hi)) break;
      x = xn;
      if (std::fabs(step) <= 1e-15 * std::max(1.0, std::fabs(x))) break;
    }
    r.level.lambda = x;
  } else if (beta > 0.0) {
    r.level.lambda = refine_root(0.0, 4.0 * (1.0 - p.kappa), ctx);
  } else {
    r.level.lambda = refine_root(4.0 * (1.0 - p.kappa), 4.0 * p.kappa, ctx);
  }
  return r;
}

double eigenvalue(int n, const SecularContext& ctx) {
  if (n < 0) throw validation_error("eigenvalue: requires n >= 0");
  const auto& p = ctx.params;
  if (lattice_spectrum(ctx)) return 4.0 * (n + p.kappa);
  if (ctx.ext.beta == 0.0) return 4.0 * (n + 1.0 - p.kappa);
  if (n == 0) return ground_state(ctx).level.lambda;
  return refine_root(4.0 * (n - 1 + p.kappa), 4.0 * (n + p.kappa), ctx);
}

double eigenvalue_asymptotic(int n, const SecularContext& ctx) {
  const auto& p = ctx.params;
  if (lattice_spectrum(ctx)) return 4.0 * (n + p.kappa);
  if (ctx.ext.beta == 0.0) return 4.0 * (n + 1.0 - p.kappa);
  if (n < 1)
    throw validation_error("eigenvalue_asymptotic: requires n >= 1 for finite beta");
  double k = p.kappa, b = ctx.ext.beta;
  double d1 = b / kPi * specfun::sinpi(2.0 * k);
  double d2 = d1 * (1.0 - k) * (1.0 - 2.0 * k);
  double d3 = -b * b / (2.0 * kPi) * specfun::sinpi(4.0 * k);
  double nn = static_cast<double>(n);
  return 4.0 * (nn + 1.0 - k + d1 * std::pow(nn, 1.0 - 2.0 * k) +
                d2 * std::pow(nn, -2.0 * k) + d3 * std::pow(nn, 2.0 - 4.0 * k));
}

Spectrum compute_spectrum(const SecularContext& ctx, int n_max) {
  if (n_max < 0) throw validation_error("compute_spectrum: requires n_max >= 0");
  Spectrum s;
  s.levels.reserve(n_max + 1);
  GroundStateResult gs = ground_state(ctx);
  s.at_threshold = gs.at_threshold;
  s.has_nonpositive = gs.level.lambda <= 0.0;
  s.levels.push_back(gs.level);
  for (int n = 1; n <= n_max; ++n) {
    Level l;
    l.n = n;
    l.lambda = eigenvalue(n, ctx);
    l.provenance = lattice_spectrum(ctx) || ctx.ext.beta == 0.0 ? Provenance::ClosedForm
                                                                : Provenance::RootFound;
    if (!(l.lambda > s.levels.back().lambda))
      throw internal_error("compute_spectrum: levels not strictly increasing");
    s.levels.push_back(l);
  }
  return s;
}

double eigenfunction(double lambda, double x, const sae::CouplingParams& p) {
  if (!(x > 0.0)) throw domain_error("eigenfunction: requires x > 0");
  double a = 0.25 * (2.0 * p.alpha + 1.0 - lambda);
  double b = p.alpha + 0.5;
  double u = specfun::kummer_u(a, b, x * x, nullptr);
  return std::pow(x, p.alpha) * std::exp(-0.5 * x * x) * u;
}

double boundary_coefficient(double lambda, const sae::CouplingParams& p) {
  double num = 0.5 - p.alpha;
  double den = p.alpha - 0.5;
  if ((num <= 0.0 && num == std::floor(num)) || (den <= 0.0 && den == std::floor(den)))
    throw domain_error("boundary_coefficient: Gamma pole at this alpha");
  double fixed = (2.0 * p.alpha - 1.0) * specfun::gamma_real(num) / specfun::gamma_real(den);
  return fixed * specfun::gamma_ratio(p.kappa, lambda);
}

std::vector<SimplicityEntry> simplicity_check(const SecularContext& ctx, int n_max) {
  Spectrum s = compute_spectrum(ctx, n_max);
  double kappa = ctx.params.kappa;
  bool lattice = lattice_spectrum(ctx) || ctx.ext.beta == 0.0;
  std::vector<SimplicityEntry> out;
  out.reserve(s.levels.size());
  for (const Level& l : s.levels) {
    SimplicityEntry e;
    e.n = l.n;
    e.lambda = l.lambda;
    e.f_prime = secular_f_prime(l.lambda, ctx);
    double t = 0.25 * l.lambda;
    double d1 = std::fabs(t - kappa - std::round(t - kappa));
    double d2 = std::fabs(t - (1.0 - kappa) - std::round(t - (1.0 - kappa)));
    e.pole_margin = 4.0 * std::min(d1, d2);
    // Simplicity is equivalent to a nonvanishing secular derivative; for root
    // spectra decide on the bounded form, whose derivative does not overflow.
    // A negative ground state sits below the bounded form's validity range,
    // where the entire form is itself overflow-free.
    if (!lattice && t > kappa - 1.0 + 1e-12)
      e.ok = std::fabs(secular_f_bounded_prime(l.lambda, ctx)) > 0.0;
    else
      e.ok = std::isfinite(e.f_prime) && e.f_prime != 0.0;
    out.push_back(e);
  }
  return out;
}

}  // namespace szeta::spectrum
