#include "szeta/zeta_engine.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "szeta/asymptotics.hpp"
#include "szeta/error.hpp"
#include "szeta/specfun.hpp"

namespace szeta::zeta_engine {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLog4 = 1.386294361119890618834464242916353136;

bool lattice_spectrum(const spectrum::SecularContext& ctx) {
  return sae::regime(ctx.params.g) == sae::RegimeTag::EssentiallySelfAdjoint ||
         !ctx.ext.is_finite();
}

// Head sum over the first M levels plus exclusion bookkeeping. Terms are added
// in ascending n with Kahan compensation: the head reaches ~M^{1+|Re s|} in
// magnitude while the continued value is O(1), so naive roundoff would
// dominate the result for Re s < 0.
void head_sum(cpx s, const spectrum::SecularContext& ctx, int M,
              const spectrum::Spectrum* pre, ZetaValue& out) {
  cpx sum = 0.0, comp = 0.0;
  for (int n = 0; n < M; ++n) {
    const double lam = (pre != nullptr) ? pre->levels[static_cast<size_t>(n)].lambda
                                        : spectrum::eigenvalue(n, ctx);
    if (!(lam > 0.0)) {
      out.excluded_count += 1;
      out.excluded_lambda = lam;
      out.excluded_magnitude =
          (lam == 0.0) ? 0.0 : std::pow(std::fabs(lam), -s.real());
      continue;
    }
    const cpx term = std::exp(-s * std::log(lam));
    const cpx y = term - comp;
    const cpx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  out.value = sum;
}

// Tail model for levels n >= M. Exact for the lattice extensions and for
// beta = 0; otherwise second order in the eigenvalue expansion, with the
// (n + 1 - kappa)^{-s} band resummed as a Hurwitz zeta so the model keeps the
// full integer-power ladder of the true tail.
cpx tail_model(cpx s, const spectrum::SecularContext& ctx, int M) {
  const double k = ctx.params.kappa;
  cpx t;
  if (lattice_spectrum(ctx)) {
    t = specfun::hurwitz_zeta(s, static_cast<double>(M) + k);
  } else {
    const double beta = ctx.ext.beta;
    const double d1 = beta / kPi * specfun::sinpi(2.0 * k);
    const double d3 = -beta * beta / (2.0 * kPi) * specfun::sinpi(4.0 * k);
    const double q = static_cast<double>(M);
    t = specfun::hurwitz_zeta(s, q + 1.0 - k);
    if (d1 != 0.0) {
      t -= s * d1 * specfun::hurwitz_zeta(s + 2.0 * k, q);
      // (s+2k) zeta_H(s+2k+1, q) written through the product form, which is
      // finite across its removable point s = -2k.
      t -= s * (k - 1.0) * d1 * specfun::eps_hurwitz_product(s + 2.0 * k, q);
    }
    if (d3 != 0.0) t -= s * d3 * specfun::hurwitz_zeta(s + 4.0 * k - 1.0, q);
  }
  return std::exp(-s * kLog4) * t;
}

double model_err(cpx s, const spectrum::SecularContext& ctx, int M) {
  if (lattice_spectrum(ctx)) return 1e-13;
  const double beta = ctx.ext.beta;
  const double a = 1.0 + std::abs(s);
  return a * a * a * (1.0 + beta * beta) *
             std::pow(static_cast<double>(M), -(s.real() + 2.0)) +
         1e-13;
}

void require_m(int M) {
  if (M < 1) throw validation_error("zeta_engine: M must be at least 1");
}

// Genuine poles of the continued function: s = 1 always; for finite beta != 0
// the catalog positions inside the window whose residues do not vanish.
void check_pole_guard(cpx s, const spectrum::SecularContext& ctx, double pole_guard) {
  if (!(pole_guard > 0.0))
    throw validation_error("zeta_continued: pole_guard must be positive");
  if (std::abs(s - cpx(1.0, 0.0)) < pole_guard)
    throw domain_error("zeta_continued: s is within pole_guard of the pole at s = 1");
  if (lattice_spectrum(ctx) || ctx.ext.beta == 0.0) return;
  const PoleCatalog pc = pole_catalog(ctx, 2, 4, 1e-9);
  for (const PoleEntry& e : pc.entries) {
    if (e.position == 1.0) continue;
    if (std::fabs(e.total_residue) <= 1e-13) continue;
    if (std::abs(s - cpx(e.position, 0.0)) < pole_guard)
      throw domain_error("zeta_continued: s is within pole_guard of a catalog pole");
  }
}

void check_precomputed(const spectrum::Spectrum* pre, int M) {
  if (pre != nullptr && pre->levels.size() < static_cast<size_t>(M))
    throw validation_error("zeta_engine: precomputed spectrum has fewer than M levels");
}

}  // namespace

cpx zeta_closed_form(cpx s, const spectrum::SecularContext& ctx) {
  double q;
  if (lattice_spectrum(ctx)) {
    q = ctx.params.kappa;
  } else if (ctx.ext.beta == 0.0) {
    q = 1.0 - ctx.params.kappa;
  } else {
    throw domain_error("zeta_closed_form: closed form exists only for beta = 0, "
                       "the minus-infinity extension, and the ESA regime");
  }
  return std::exp(-s * kLog4) * specfun::hurwitz_zeta(s, q);
}

ZetaValue zeta_direct(cpx s, const spectrum::SecularContext& ctx, int M,
                      const spectrum::Spectrum* pre) {
  require_m(M);
  check_precomputed(pre, M);
  if (!(s.real() > 1.0))
    throw domain_error("zeta_direct: requires Re s > 1; use zeta_continued");
  ZetaValue out;
  out.s = s;
  out.region = Region::DirectSum;
  head_sum(s, ctx, M, pre, out);
  out.value += tail_model(s, ctx, M);
  out.err_estimate = model_err(s, ctx, M);
  return out;
}

ZetaValue zeta_continued(cpx s, const spectrum::SecularContext& ctx, int M,
                         const spectrum::Spectrum* pre, double pole_guard) {
  require_m(M);
  check_precomputed(pre, M);
  if (!(s.real() > -1.95))
    throw domain_error("zeta_continued: outside the continuation window Re s > -1.95");
  check_pole_guard(s, ctx, pole_guard);
  ZetaValue out;
  out.s = s;
  out.region = Region::Continued;
  head_sum(s, ctx, M, pre, out);
  out.value += tail_model(s, ctx, M);
  out.err_estimate = model_err(s, ctx, M);
  return out;
}

PoleCatalog pole_catalog(const spectrum::SecularContext& ctx, int N_max, int n_max,
                         double merge_tol) {
  if (N_max < 1) throw validation_error("pole_catalog: N_max must be at least 1");
  if (n_max < 0) throw validation_error("pole_catalog: n_max must be nonnegative");
  if (!(merge_tol > 0.0))
    throw validation_error("pole_catalog: merge_tol must be positive");

  PoleCatalog pc;
  {
    // Weyl pole, common to every extension: residue of 4^{-s} zeta_H(s, q).
    PoleEntry weyl;
    weyl.position = 1.0;
    weyl.total_residue = 0.25;
    weyl.numeric_check = NumericCheck::Supported;
    pc.entries.push_back(weyl);
  }
  if (lattice_spectrum(ctx) || ctx.ext.beta == 0.0) return pc;

  const double k = ctx.params.kappa;
  const double beta = ctx.ext.beta;
  struct Item {
    double pos;
    double res;
    int N, n;
  };
  std::vector<Item> items;
  items.reserve(static_cast<size_t>(N_max) * static_cast<size_t>(n_max + 1));
  for (int N = 1; N <= N_max; ++N) {
    const double sign = (N % 2 == 0) ? 1.0 : -1.0;
    const double sin_factor = specfun::sinpi(2.0 * N * k);  // exactly 0 at half-integer 2Nk
    for (int n = 0; n <= n_max; ++n) {
      Item it;
      it.pos = -N * (2.0 * k - 1.0) - 2.0 * n;
      it.res = sign / kPi * asymptotics::C_Nn(N, n, k, beta) * sin_factor;
      it.N = N;
      it.n = n;
      items.push_back(it);
    }
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.pos != b.pos) return a.pos > b.pos;
    if (a.N != b.N) return a.N < b.N;
    return a.n < b.n;
  });

  for (size_t i = 0; i < items.size();) {
    PoleEntry e;
    e.position = items[i].pos;
    size_t j = i;
    while (j < items.size() && items[i].pos - items[j].pos <= merge_tol) {
      e.total_residue += items[j].res;
      e.contributors.emplace_back(items[j].N, items[j].n);
      ++j;
    }
    std::sort(e.contributors.begin(), e.contributors.end());
    e.vanishing = std::fabs(e.total_residue) <= 1e-13;
    int max_order = 0;
    for (const auto& c : e.contributors) max_order = std::max(max_order, c.first);
    if (e.vanishing) {
      e.numeric_check = NumericCheck::Vanishing;
    } else if (e.position <= -1.9) {
      e.numeric_check = NumericCheck::OutsideWindow;
    } else if (max_order > 2 || std::fabs(e.total_residue) <= 1e-6) {
      e.numeric_check = NumericCheck::BeyondModelOrder;
    } else {
      e.numeric_check = NumericCheck::Supported;
    }
    pc.entries.push_back(e);
    i = j;
  }
  return pc;
}

ResidueEstimate residue_numeric(double s0, const spectrum::SecularContext& ctx, int M,
                                const spectrum::Spectrum* pre) {
  require_m(M);
  std::optional<spectrum::Spectrum> own;
  if (pre == nullptr && !lattice_spectrum(ctx)) {
    own = spectrum::compute_spectrum(ctx, M - 1);
    pre = &*own;
  }
  const double eps[3] = {0.1, 0.05, 0.025};
  double v[3];
  for (int i = 0; i < 3; ++i)
    v[i] = eps[i] * zeta_continued(cpx(s0 + eps[i], 0.0), ctx, M, pre).value.real();
  // Neville extrapolation of the quadratic through (eps_i, v_i) to eps = 0.
  const double p01 = (eps[0] * v[1] - eps[1] * v[0]) / (eps[0] - eps[1]);
  const double p12 = (eps[1] * v[2] - eps[2] * v[1]) / (eps[1] - eps[2]);
  const double p012 = (eps[0] * p12 - eps[2] * p01) / (eps[0] - eps[2]);
  const double lin = v[1] + (v[2] - v[1]) * (0.0 - eps[1]) / (eps[2] - eps[1]);
  ResidueEstimate r;
  r.value = p012;
  r.uncertainty = std::fabs(p012 - lin);
  return r;
}

std::vector<HeatCoefficient> heat_coefficients(const spectrum::SecularContext& ctx,
                                               int N_max, int n_max, double merge_tol) {
  const PoleCatalog pc = pole_catalog(ctx, N_max, n_max, merge_tol);
  std::vector<HeatCoefficient> out;
  out.reserve(pc.entries.size());
  for (const PoleEntry& e : pc.entries) {
    HeatCoefficient h;
    h.position = e.position;
    h.residue = e.total_residue;
    h.power = -e.position;
    const bool gamma_pole =
        e.position <= 0.0 && e.position == std::floor(e.position);
    h.defined = !gamma_pole;
    h.coefficient = h.defined ? specfun::gamma_real(e.position) * e.total_residue : 0.0;
    out.push_back(h);
  }
  return out;
}

HeatTrace heat_trace_numeric(double t, const spectrum::SecularContext& ctx, int M) {
  require_m(M);
  if (!(t > 0.0)) throw domain_error("heat_trace_numeric: requires t > 0");
  double sum = 0.0, comp = 0.0;
  auto add = [&](double x) {
    const double y = x - comp;
    const double u = sum + y;
    comp = (u - sum) - y;
    sum = u;
  };
  for (int n = 0; n < M; ++n) add(std::exp(-t * spectrum::eigenvalue(n, ctx)));
  // Model tail; terms decay like exp(-4 t) per level.
  double term = 0.0;
  long n = M;
  const long n_cap = M + 200000000L;
  do {
    term = std::exp(-t * spectrum::eigenvalue_asymptotic(static_cast<int>(n), ctx));
    add(term);
    ++n;
  } while (term >= 1e-18 * sum && n < n_cap);
  const double r = std::exp(-4.0 * t);
  HeatTrace h;
  h.value = sum;
  h.err_estimate = term * r / (1.0 - r) + 1e-15 * sum;
  return h;
}

}  // namespace szeta::zeta_engine
