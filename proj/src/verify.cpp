#include "szeta/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <ostream>
#include <random>
#include <thread>

#include "szeta/asymptotics.hpp"
#include "szeta/error.hpp"
#include "szeta/sae.hpp"
#include "szeta/specfun.hpp"
#include "szeta/spectrum.hpp"
#include "szeta/zeta_engine.hpp"

namespace szeta::verify {

namespace {

using cpx = std::complex<double>;
constexpr double kPi = 3.141592653589793238462643383279502884;

std::string fmt(const char* f, ...) {
  char buf[1024];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return std::string(buf);
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

spectrum::SecularContext ctx_of(double kappa, double beta) {
  spectrum::SecularContext ctx;
  ctx.params = sae::params_from_g(sae::g_from_kappa(kappa));
  ctx.ext = sae::ExtensionParam::finite(beta);
  return ctx;
}

spectrum::SecularContext ctx_minus_inf(double kappa) {
  spectrum::SecularContext ctx;
  ctx.params = sae::params_from_g(sae::g_from_kappa(kappa));
  ctx.ext = sae::ExtensionParam::minus_infinity();
  return ctx;
}

int thread_budget(int tasks) {
  int t = static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  if (const char* env = std::getenv("SZETA_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) t = std::min(t, cap);
  }
  return std::min(t, tasks);
}

// --- criterion 1 -----------------------------------------------------------

CheckResult criterion_1() {
  Timer timer;
  CheckResult r;
  r.id = "criterion-1";
  r.name = "closed-form lattice spectra are bit-exact";
  long checked = 0, exact = 0;
  const double kappas[] = {0.75, 0.8, 0.7853981634};
  for (const double k : kappas) {
    const auto c0 = ctx_of(k, 0.0);
    const auto cm = ctx_minus_inf(k);
    for (int n = 0; n <= 1000; ++n) {
      ++checked;
      if (spectrum::eigenvalue(n, c0) == 4.0 * (n + 1.0 - k)) ++exact;
      ++checked;
      if (spectrum::eigenvalue(n, cm) == 4.0 * (n + k)) ++exact;
    }
  }
  // g = 0 (kappa = 3/4): Neumann 4n+1 and Dirichlet 4n+3.
  const auto cn = ctx_of(0.75, 0.0);
  const auto cd = ctx_minus_inf(0.75);
  for (int n = 0; n <= 1000; ++n) {
    ++checked;
    if (spectrum::eigenvalue(n, cn) == 4.0 * n + 1.0) ++exact;
    ++checked;
    if (spectrum::eigenvalue(n, cd) == 4.0 * n + 3.0) ++exact;
  }
  r.pass = exact == checked;
  r.detail = fmt("%ld/%ld levels bit-exact against 4(n+1-kappa) / 4(n+kappa); "
                 "g = 0 reproduces 4n+1 (Neumann) and 4n+3 (Dirichlet)",
                 exact, checked);
  r.seconds = timer.seconds();
  return r;
}

// --- criterion 2 -----------------------------------------------------------

struct CellStat {
  long checked = 0;
  long bracket_violations = 0;
  long residual_violations = 0;
  double max_scaled_residual = 0.0;
};

CellStat check_cell(double kappa, double beta, int n_hi) {
  CellStat st;
  const auto ctx = ctx_of(kappa, beta);
  for (int n = 1; n <= n_hi; ++n) {
    const double lam = spectrum::eigenvalue(n, ctx);
    ++st.checked;
    if (!(lam > 4.0 * (n - 1.0 + kappa) && lam < 4.0 * (n + kappa)))
      ++st.bracket_violations;
    const double fb = spectrum::secular_f_bounded(lam, ctx);
    const double fbp = spectrum::secular_f_bounded_prime(lam, ctx);
    const double scale = std::max(1.0, std::fabs(fbp) * std::fabs(lam));
    const double scaled = std::fabs(fb) / scale;
    st.max_scaled_residual = std::max(st.max_scaled_residual, scaled);
    if (scaled > 1e-11) ++st.residual_violations;
  }
  return st;
}

CheckResult criterion_2() {
  Timer timer;
  CheckResult r;
  r.id = "criterion-2";
  r.name = "root brackets and scaled residuals on the 5x7 grid";
  const double kappas[] = {0.76, 0.8175, 0.875, 0.9325, 0.99};
  const double betas[] = {-10.0, -1.0, -0.1, 0.5, 1.0, 5.0, 50.0};
  const int n_hi = 10000;

  struct Cell {
    double kappa, beta;
  };
  std::vector<Cell> cells;
  for (const double k : kappas)
    for (const double b : betas) cells.push_back({k, b});

  const int workers = thread_budget(static_cast<int>(cells.size()));
  std::vector<std::future<std::vector<CellStat>>> futures;
  futures.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&cells, w, workers, n_hi]() {
      std::vector<CellStat> out;
      for (size_t i = static_cast<size_t>(w); i < cells.size();
           i += static_cast<size_t>(workers))
        out.push_back(check_cell(cells[i].kappa, cells[i].beta, n_hi));
      return out;
    }));
  }
  // Reassemble in fixed grid order for a deterministic aggregate.
  std::vector<CellStat> stats(cells.size());
  for (int w = 0; w < workers; ++w) {
    const auto part = futures[static_cast<size_t>(w)].get();
    size_t j = 0;
    for (size_t i = static_cast<size_t>(w); i < cells.size();
         i += static_cast<size_t>(workers))
      stats[i] = part[j++];
  }
  CellStat total;
  for (const auto& st : stats) {
    total.checked += st.checked;
    total.bracket_violations += st.bracket_violations;
    total.residual_violations += st.residual_violations;
    total.max_scaled_residual = std::max(total.max_scaled_residual, st.max_scaled_residual);
  }
  const double secs = timer.seconds();
  r.pass = total.bracket_violations == 0 && total.residual_violations == 0 &&
           secs < 60.0;
  r.detail = fmt("%ld roots, n in [1, 10^4]: %ld bracket violations, %ld residual "
                 "violations, max scaled |f| = %.3e (bound 1e-11); ground states "
                 "are covered by criterion 3",
                 total.checked, total.bracket_violations, total.residual_violations,
                 total.max_scaled_residual);
  r.seconds = secs;
  return r;
}

// --- criterion 3 -----------------------------------------------------------

CheckResult criterion_3() {
  Timer timer;
  CheckResult r;
  r.id = "criterion-3";
  r.name = "ground state changes sign at beta = Gamma(kappa)/Gamma(1-kappa)";
  bool ok = true;
  std::string detail;
  for (const double k : {0.75, 0.8}) {
    const double thr = spectrum::threshold_beta(k);
    const double lo = spectrum::ground_state(ctx_of(k, thr - 1e-9)).level.lambda;
    const double hi = spectrum::ground_state(ctx_of(k, thr + 1e-9)).level.lambda;
    const auto at = spectrum::ground_state(ctx_of(k, thr));
    const bool flip = lo > 0.0 && hi < 0.0 && at.level.lambda == 0.0 && at.at_threshold;
    ok = ok && flip;
    detail += fmt("%skappa=%.2f: thr=%.10f, lambda0(thr-1e-9)=%+.3e, "
                  "lambda0(thr+1e-9)=%+.3e, lambda0(thr)=0 %s",
                  detail.empty() ? "" : "; ", k, thr, lo, hi,
                  flip ? "(sign change confirmed)" : "(FLIP MISSING)");
  }
  r.pass = ok;
  r.detail = detail;
  r.seconds = timer.seconds();
  return r;
}

// --- criterion 4 -----------------------------------------------------------

CheckResult criterion_4() {
  Timer timer;
  CheckResult r;
  r.id = "criterion-4";
  r.name = "eigenvalue asymptotics confirm the retained orders";
  const double k = 0.8;
  const auto ctx = ctx_of(k, 1.0);
  const double d3 = std::fabs(spectrum::eigenvalue(1000, ctx) -
                              spectrum::eigenvalue_asymptotic(1000, ctx));
  const double d4 = std::fabs(spectrum::eigenvalue(10000, ctx) -
                              spectrum::eigenvalue_asymptotic(10000, ctx));
  // First omitted order is the beta^3 band, n^{3-6 kappa}.
  const double p = 3.0 - 6.0 * k;
  const double fit = d3 * std::pow(1000.0, -p);
  const double bound = 10.0 * fit * std::pow(10000.0, p);
  r.pass = d4 <= bound;
  r.detail = fmt("|lambda - model| = %.6e at n=10^3, %.6e at n=10^4; first-omitted "
                 "fit predicts %.3e at n=10^4, bound 10x = %.3e",
                 d3, d4, fit * std::pow(10000.0, p), bound);
  r.seconds = timer.seconds();
  return r;
}

// --- criterion 5 -----------------------------------------------------------

CheckResult criterion_5() {
  Timer timer;
  CheckResult r;
  r.id = "criterion-5";
  r.name = "partition sums b_n match the Bell closed forms";
  std::mt19937 rng(7001);
  std::uniform_real_distribution<double> dk(0.55, 0.99);
  std::uniform_int_distribution<int> dN(1, 8);
  long bad_b = 0, bad_a1 = 0;
  double worst_b = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const double k = dk(rng);
    const int N = dN(rng);
    const double Nr = static_cast<double>(N);
    const double a1 = asymptotics::a_m(1, k);
    const double a2 = asymptotics::a_m(2, k);
    const double a3 = asymptotics::a_m(3, k);
    const double a4 = asymptotics::a_m(4, k);
    const double want[5] = {
        1.0,
        Nr * a1,
        Nr * a2 + Nr * Nr * a1 * a1 / 2.0,
        Nr * a3 + Nr * Nr * a1 * a2 + Nr * Nr * Nr * a1 * a1 * a1 / 6.0,
        Nr * a4 + Nr * Nr * (a2 * a2 / 2.0 + a1 * a3) +
            Nr * Nr * Nr * a1 * a1 * a2 / 2.0 +
            Nr * Nr * Nr * Nr * a1 * a1 * a1 * a1 / 24.0,
    };
    for (int n = 0; n <= 4; ++n) {
      const double got = asymptotics::b_n(n, k, N);
      const double rel = std::fabs(got - want[n]) /
                         std::max({1e-300, std::fabs(got), std::fabs(want[n])});
      worst_b = std::max(worst_b, rel);
      if (rel > 1e-12) ++bad_b;
    }
    const double ident = 8.0 / 3.0 * k * (1.0 - 3.0 * k + 2.0 * k * k);
    if (std::fabs(a1 - ident) > 1e-13 * std::max(1.0, std::fabs(ident))) ++bad_a1;
  }
  long bad_half = 0;
  for (int m = 1; m <= 6; ++m)
    if (asymptotics::a_m(m, 0.5) != 0.0) ++bad_half;
  r.pass = bad_b == 0 && bad_a1 == 0 && bad_half == 0;
  r.detail = fmt("50 random (kappa, N): b_0..b_4 worst rel dev %.2e (bound 1e-12, "
                 "%ld over); a_1 identity violations %ld (bound 1e-13); "
                 "a_m(1/2) nonzero count %ld for m <= 6",
                 worst_b, bad_b, bad_a1, bad_half);
  r.seconds = timer.seconds();
  return r;
}

// --- criterion 6 -----------------------------------------------------------

CheckResult criterion_6() {
  Timer timer;
  CheckResult r;
  r.id = "criterion-6";
  r.name = "gamma-ratio asymptotics within the first omitted term at M = 5";
  const double k = 0.8;
  const cpx lam(0.0, 200.0);
  const cpx exact = asymptotics::log_gamma_ratio_exact(lam, k);
  const cpx model = asymptotics::log_gamma_ratio_asymptotic(lam, k, 5);
  const double diff = std::abs(exact - model);
  const double omitted = std::fabs(asymptotics::a_m(6, k)) * std::pow(200.0, -12.0);
  r.pass = diff <= omitted;
  r.detail = fmt("|exact - asymptotic| = %.3e vs first-omitted bound %.3e "
                 "(ratio %.2e). The bound sits ~10 decades below the double "
                 "rounding floor of the two log-gamma evaluations, and the true "
                 "remainder of this asymptotic series already exceeds the "
                 "first-omitted magnitude by ~0.2%% in exact arithmetic, so the "
                 "literal bound is unattainable; see the informational check for "
                 "the attainable form of the same statement",
                 diff, omitted, diff / omitted);
  r.seconds = timer.seconds();
  return r;
}

CheckResult criterion_6_info() {
  Timer timer;
  CheckResult r;
  r.id = "criterion-6-info";
  r.name = "gamma-ratio remainder tracks the first omitted term at M = 1";
  r.informational = true;
  const double k = 0.8;
  const cpx lam(0.0, 200.0);
  // At M = 1 the first omitted term (3.8e-10) is far above the rounding floor,
  // so the remainder/omitted ratio is measurable: it must be within 25% of 1.
  const cpx exact = asymptotics::log_gamma_ratio_exact(lam, k);
  const cpx model = asymptotics::log_gamma_ratio_asymptotic(lam, k, 1);
  const double diff = std::abs(exact - model);
  const double omitted = std::fabs(asymptotics::a_m(2, k)) * std::pow(200.0, -4.0);
  const double ratio = diff / omitted;
  r.pass = ratio > 0.75 && ratio < 1.25;
  r.detail = fmt("|exact - asymptotic| = %.6e, first omitted %.6e, ratio %.4f "
                 "(required within [0.75, 1.25]): the series is asymptotic with "
                 "the stated coefficients",
                 diff, omitted, ratio);
  r.seconds = timer.seconds();
  return r;
}

// --- criterion 7 -----------------------------------------------------------

CheckResult criterion_7() {
  Timer timer;
  CheckResult r;
  r.id = "criterion-7";
  r.name = "zeta evaluation routes agree where they overlap";
  const auto c0 = ctx_of(0.8, 0.0);
  const auto cm = ctx_minus_inf(0.8);
  double worst_direct = 0.0, worst_cont = 0.0;
  const cpx direct_probes[] = {cpx(2.0, 0.0), cpx(3.5, 0.0), cpx(2.0, 3.0)};
  for (const auto& ctx : {c0, cm}) {
    for (const cpx s : direct_probes) {
      const cpx d = zeta_engine::zeta_direct(s, ctx, 2000).value;
      const cpx w = zeta_engine::zeta_closed_form(s, ctx);
      worst_direct = std::max(worst_direct, std::abs(d - w));
    }
    for (const double sr : {-0.3, -1.5}) {
      const cpx c = zeta_engine::zeta_continued(cpx(sr, 0.0), ctx, 2000).value;
      const cpx w = zeta_engine::zeta_closed_form(cpx(sr, 0.0), ctx);
      worst_cont = std::max(worst_cont, std::abs(c - w));
    }
  }
  r.pass = worst_direct <= 1e-8 && worst_cont <= 1e-6;
  r.detail = fmt("direct vs closed at s in {2, 3.5, 2+3i}: max |dev| = %.3e "
                 "(bound 1e-8); continued vs closed at s in {-0.3, -1.5}, "
                 "M = 2000: max |dev| = %.3e (bound 1e-6); beta in {0, -inf}",
                 worst_direct, worst_cont);
  r.seconds = timer.seconds();
  return r;
}

// --- criterion 8 -----------------------------------------------------------

CheckResult criterion_8() {
  Timer timer;
  CheckResult r;
  r.id = "criterion-8";
  r.name = "universal residue 1/4 at s = 1";
  struct Case {
    double kappa, beta;
  };
  const Case cases[] = {{0.75, 1.0}, {0.8, -2.0}, {0.8, 1.0}};
  double worst = 0.0;
  std::string vals;
  for (const auto& c : cases) {
    const auto est = zeta_engine::residue_numeric(1.0, ctx_of(c.kappa, c.beta), 2000);
    worst = std::max(worst, std::fabs(est.value - 0.25));
    vals += fmt("%s(%.2f, %+.0f): %.8f", vals.empty() ? "" : ", ", c.kappa, c.beta,
                est.value);
  }
  r.pass = worst <= 1e-3;
  r.detail = fmt("Richardson limit of (s-1) zeta(s): %s; max |est - 1/4| = %.3e "
                 "(bound 1e-3)",
                 vals.c_str(), worst);
  r.seconds = timer.seconds();
  return r;
}

// --- criterion 9 -----------------------------------------------------------

CheckResult criterion_9() {
  Timer timer;
  CheckResult r;
  r.id = "criterion-9";
  r.name = "beta-dependent residues match the catalog, one adjudicated sign";
  bool ok = true;
  int sign_agree = 0, sign_total = 0;
  std::string detail;

  // kappa = 3/4: |Res(-1/2)| = beta/pi, absolute bound 1e-3, M = 10^4.
  for (const double beta : {0.5, 1.0, 2.0}) {
    const auto ctx = ctx_of(0.75, beta);
    const auto spec = spectrum::compute_spectrum(ctx, 9999);
    const auto est = zeta_engine::residue_numeric(-0.5, ctx, 10000, &spec);
    const double catalog = -beta / kPi;
    const double mag_dev = std::fabs(std::fabs(est.value) - beta / kPi);
    ++sign_total;
    if (est.value * catalog > 0.0) ++sign_agree;
    ok = ok && mag_dev <= 1e-3;
    detail += fmt("%sRes(-1/2; 3/4, %.1f) = %+.8f (catalog %+.8f, |mag dev| %.2e)",
                  detail.empty() ? "" : "; ", beta, est.value, catalog, mag_dev);
  }

  // kappa = 4/5, beta = 1: catalog match at -0.6 and -1.2 within 5e-2 relative.
  const auto ctx8 = ctx_of(0.8, 1.0);
  const auto spec8 = spectrum::compute_spectrum(ctx8, 9999);
  const auto pc = zeta_engine::pole_catalog(ctx8, 2, 0, 1e-9);
  for (const double s0 : {-0.6, -1.2}) {
    double catalog = 0.0;
    for (const auto& e : pc.entries)
      if (std::fabs(e.position - s0) < 1e-9) catalog = e.total_residue;
    const auto est = zeta_engine::residue_numeric(s0, ctx8, 10000, &spec8);
    const double rel = std::fabs(est.value - catalog) / std::fabs(catalog);
    ++sign_total;
    if (est.value * catalog > 0.0) ++sign_agree;
    ok = ok && rel <= 5e-2;
    detail += fmt("; Res(%.1f; 4/5, 1) = %+.8f (catalog %+.8f, rel dev %.2e)", s0,
                  est.value, catalog, rel);
  }

  ok = ok && sign_agree == sign_total;
  r.pass = ok;
  r.detail = fmt("adjudicated convention: residue = ((-1)^N/pi) C_{N,n} "
                 "sin(2 pi N kappa) with overall factor +1; sign agreement %d/%d. %s",
                 sign_agree, sign_total, detail.c_str());
  r.seconds = timer.seconds();
  return r;
}

// --- criterion 10 ----------------------------------------------------------

CheckResult criterion_10() {
  Timer timer;
  CheckResult r;
  r.id = "criterion-10";
  r.name = "residues scale exactly as beta^N";
  bool ok = true;
  // Catalog residues at (1,0), (2,0), (3,0) under beta -> 2 beta: exact
  // doubling by 2^N. Powers of two scale floating-point products exactly.
  for (const double beta : {0.7, 1.3}) {
    const auto pa = zeta_engine::pole_catalog(ctx_of(0.8, beta), 3, 0, 1e-9);
    const auto pb = zeta_engine::pole_catalog(ctx_of(0.8, 2.0 * beta), 3, 0, 1e-9);
    for (int N = 1; N <= 3; ++N) {
      const double ra = pa.entries[static_cast<size_t>(N)].total_residue;
      const double rb = pb.entries[static_cast<size_t>(N)].total_residue;
      ok = ok && (rb == std::ldexp(ra, N));
    }
  }
  // Closed forms at kappa = 3/4.
  for (const double beta : {0.7, 1.3, 2.25}) {
    ok = ok && (asymptotics::C_Nn(1, 0, 0.75, beta) == -beta);
    ok = ok && (asymptotics::C_Nn(3, 0, 0.75, beta) == ((-4.0 * beta) * beta) * beta);
  }
  r.pass = ok;
  r.detail = "beta -> 2 beta doubles (1,0), (2,0), (3,0) residues by exactly "
             "2, 4, 8 (bitwise); C_{1,0}(3/4, beta) = -beta and "
             "C_{3,0}(3/4, beta) = -4 beta^3 bitwise";
  r.seconds = timer.seconds();
  return r;
}

// --- criterion 11 ----------------------------------------------------------

CheckResult criterion_11() {
  Timer timer;
  CheckResult r;
  r.id = "criterion-11";
  r.name = "kappa = 3/4 even-N vanishing and half-integer merging";
  const auto pc = zeta_engine::pole_catalog(ctx_of(0.75, 1.0), 9, 8, 1e-9);
  double worst_even = 0.0;
  long integer_positions = 0;
  for (const auto& e : pc.entries) {
    if (e.position == 1.0) continue;
    if (std::fabs(e.position - std::round(e.position)) < 1e-9) {
      ++integer_positions;
      worst_even = std::max(worst_even, std::fabs(e.total_residue));
    }
  }
  bool merge_ok = true;
  std::string merges;
  for (int k = 0; k <= 4; ++k) {
    const double pos = -0.5 - k;
    std::vector<std::pair<int, int>> want;
    for (int n = 0; n <= k / 2; ++n) want.emplace_back(2 * (k - 2 * n) + 1, n);
    std::sort(want.begin(), want.end());
    const zeta_engine::PoleEntry* found = nullptr;
    for (const auto& e : pc.entries)
      if (std::fabs(e.position - pos) < 1e-9) found = &e;
    const bool this_ok = found != nullptr && found->contributors == want;
    merge_ok = merge_ok && this_ok;
    merges += fmt("%ss=%.1f: %zu contributor(s)%s", merges.empty() ? "" : ", ", pos,
                  found ? found->contributors.size() : 0, this_ok ? "" : " MISMATCH");
  }
  r.pass = worst_even < 1e-14 && merge_ok;
  r.detail = fmt("%ld integer-position entries, max |even-N residue| = %.1e "
                 "(bound 1e-14; the sin(2 pi N kappa) factors vanish exactly); "
                 "merged sets {(2(k-2n)+1, n)} verified: %s",
                 integer_positions, worst_even, merges.c_str());
  r.seconds = timer.seconds();
  return r;
}

// --- criterion 12 ----------------------------------------------------------

CheckResult criterion_12() {
  Timer timer;
  CheckResult r;
  r.id = "criterion-12";
  r.name = "heat trace: Weyl limit, half-power slope, stated prefactor";
  const auto c1 = ctx_of(0.75, 1.0);
  const auto c0 = ctx_of(0.75, 0.0);

  // (a) t Tr -> 1/4.
  const double t_small = 1e-4;
  const auto h_small = zeta_engine::heat_trace_numeric(t_small, c1, 2000);
  const double weyl_dev = std::fabs(t_small * h_small.value - 0.25);
  const bool pass_a = weyl_dev <= 2e-3;

  // (b, c) Delta(t) = Tr_{beta=1} - Tr_{beta=0} on a log grid in [1e-4, 1e-2].
  const double ts[] = {1e-4, 3.1622776601683794e-4, 1e-3, 3.1622776601683794e-3,
                       1e-2};
  double lx = 0.0, ly = 0.0, lxx = 0.0, lxy = 0.0;
  double delta_small = 0.0;
  for (const double t : ts) {
    const double d = zeta_engine::heat_trace_numeric(t, c1, 2000).value -
                     zeta_engine::heat_trace_numeric(t, c0, 2000).value;
    if (t == ts[0]) delta_small = d;
    const double x = std::log(t), y = std::log(std::fabs(d));
    lx += x;
    ly += y;
    lxx += x * x;
    lxy += x * y;
  }
  const double n_pts = 5.0;
  const double slope = (n_pts * lxy - lx * ly) / (n_pts * lxx - lx * lx);
  const bool pass_b = std::fabs(slope - 0.5) <= 0.05;

  const double prefactor = delta_small / std::sqrt(t_small);
  const double claimed = std::sqrt(kPi) * (1.0 / kPi);  // for beta = 1
  const bool pass_c = std::fabs(std::fabs(prefactor) - claimed) <= 0.1 * claimed;

  r.pass = pass_a && pass_b && pass_c;
  r.detail = fmt("(a) t Tr = %.7f at t = 1e-4, |dev from 1/4| = %.2e (bound 2e-3) %s; "
                 "(b) log-log slope of Delta = Tr_1 - Tr_0 over [1e-4, 1e-2] is "
                 "%.4f (0.5 +/- 0.05) %s; (c) prefactor Delta/sqrt(t) = %.4f vs "
                 "stated sqrt(pi)/pi = %.4f, ratio %.3f (bound +/-10%%) %s",
                 t_small * h_small.value, weyl_dev, pass_a ? "PASS" : "FAIL", slope,
                 pass_b ? "PASS" : "FAIL", prefactor, claimed, prefactor / claimed,
                 pass_c ? "PASS" : "FAIL");
  r.seconds = timer.seconds();
  return r;
}

CheckResult criterion_12_info() {
  Timer timer;
  CheckResult r;
  r.id = "criterion-12-info";
  r.name = "heat prefactor matches Gamma(-1/2) Res(-1/2)";
  r.informational = true;
  const auto c1 = ctx_of(0.75, 1.0);
  const auto c0 = ctx_of(0.75, 0.0);
  const double t = 1e-4;
  const double delta = zeta_engine::heat_trace_numeric(t, c1, 2000).value -
                       zeta_engine::heat_trace_numeric(t, c0, 2000).value;
  const double prefactor = delta / std::sqrt(t);
  // Gamma(-1/2) (-beta/pi) = 2 beta / sqrt(pi): the catalog-consistent value.
  const double catalog = 2.0 / std::sqrt(kPi);
  r.pass = std::fabs(prefactor - catalog) <= 0.1 * catalog;
  r.detail = fmt("Delta/sqrt(t) = %.4f at t = 1e-4 vs Gamma(-1/2) Res(-1/2) = "
                 "2 beta/sqrt(pi) = %.4f (ratio %.4f): the measured half-power "
                 "coefficient carries twice the stated sqrt(pi)/pi prefactor and "
                 "matches the heat-coefficient convention Gamma(position) x residue",
                 prefactor, catalog, prefactor / catalog);
  r.seconds = timer.seconds();
  return r;
}

// --- criterion 13 ----------------------------------------------------------

CheckResult criterion_13() {
  Timer timer;
  CheckResult r;
  r.id = "criterion-13";
  r.name = "g = 0 eigenfunctions reduce to Hermite forms; Robin derivative";
  const auto params = sae::params_from_g(0.0);
  double worst = 0.0;
  for (int kk = 0; kk <= 5; ++kk) {
    const double lam_odd = 4.0 * kk + 3.0;
    const double lam_even = 4.0 * kk + 1.0;
    for (double x = 0.1; x <= 3.0 + 1e-12; x += 0.1) {
      const double ph_o = spectrum::eigenfunction(lam_odd, x, params);
      const double he_o = std::ldexp(std::exp(-0.5 * x * x) *
                                         specfun::hermite(2 * kk + 1, x),
                                     -(2 * kk + 1));
      worst = std::max(worst, std::fabs(ph_o - he_o) /
                                  std::max(1e-300, std::fabs(he_o)));
      const double ph_e = spectrum::eigenfunction(lam_even, x, params);
      const double he_e = std::ldexp(std::exp(-0.5 * x * x) *
                                         specfun::hermite(2 * kk, x),
                                     -(2 * kk));
      worst = std::max(worst, std::fabs(ph_e - he_e) /
                                  std::max(1e-300, std::fabs(he_e)));
    }
  }
  const bool hermite_ok = worst <= 1e-9;

  // Robin check: for g = 0 the ground state of the beta-extension satisfies
  // phi'(0)/phi(0) = -2 beta; measure by central difference near the origin.
  const double beta = 0.7;
  const auto ctx = ctx_of(0.75, beta);
  const double lam0 = spectrum::ground_state(ctx).level.lambda;
  const double x0 = 1e-4, h = 1e-5;
  const double fp = spectrum::eigenfunction(lam0, x0 + h, params);
  const double fm = spectrum::eigenfunction(lam0, x0 - h, params);
  const double f0 = spectrum::eigenfunction(lam0, x0, params);
  const double ratio = (fp - fm) / (2.0 * h * f0);
  const double robin_dev = std::fabs(ratio - (-2.0 * beta));
  const bool robin_ok = robin_dev <= 1e-3;

  r.pass = hermite_ok && robin_ok;
  r.detail = fmt("Hermite reduction, n <= 5 both parities on x in [0.1, 3]: worst "
                 "rel dev %.2e (bound 1e-9); Robin beta = 0.7: phi'/phi at origin "
                 "= %.6f vs -2 beta = -1.4 (|dev| = %.2e, bound 1e-3)",
                 worst, ratio, robin_dev);
  r.seconds = timer.seconds();
  return r;
}

// --- specfun identity checks ----------------------------------------------

CheckResult specfun_check(int idx) {
  Timer timer;
  CheckResult r;
  r.id = fmt("specfun-%d", idx);
  std::mt19937 rng(static_cast<unsigned>(9100 + idx));
  switch (idx) {
    case 1: {
      r.name = "sinpi/cospi against std::sin/std::cos";
      std::uniform_real_distribution<double> dx(-40.0, 40.0);
      double worst = 0.0;
      bool zeros = true;
      for (int i = -50; i <= 50; ++i)
        zeros = zeros && specfun::sinpi(static_cast<double>(i)) == 0.0;
      for (int i = 0; i < 500; ++i) {
        const double x = dx(rng);
        worst = std::max(worst, std::fabs(specfun::sinpi(x) - std::sin(kPi * x)));
        worst = std::max(worst, std::fabs(specfun::cospi(x) - std::cos(kPi * x)));
      }
      r.pass = zeros && worst <= 1e-11;
      r.detail = fmt("integer zeros exact; max |dev| = %.2e over 500 points "
                     "(bound 1e-11, dominated by pi-multiplication rounding in "
                     "the reference)",
                     worst);
      break;
    }
    case 2: {
      r.name = "log_gamma Legendre duplication";
      std::uniform_real_distribution<double> dre(0.3, 8.0), dim(-8.0, 8.0);
      double worst = 0.0;
      for (int i = 0; i < 50; ++i) {
        const cpx z(dre(rng), dim(rng));
        const cpx lhs = specfun::log_gamma(2.0 * z);
        const cpx rhs = specfun::log_gamma(z) + specfun::log_gamma(z + 0.5) +
                        (2.0 * z - 0.5) * std::log(2.0) -
                        0.5 * std::log(2.0 * kPi);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
      }
      r.pass = worst <= 1e-12;
      r.detail = fmt("max rel dev %.2e over 50 points (bound 1e-12)", worst);
      break;
    }
    case 3: {
      r.name = "digamma recurrence psi(z+1) = psi(z) + 1/z";
      std::uniform_real_distribution<double> dre(-6.0, 6.0), dim(-6.0, 6.0);
      double worst = 0.0;
      int used = 0;
      while (used < 50) {
        const cpx z(dre(rng), dim(rng));
        if (std::abs(z - std::round(z.real())) < 0.05 && std::fabs(z.imag()) < 0.05)
          continue;
        ++used;
        const cpx lhs = specfun::digamma(z + 1.0);
        const cpx rhs = specfun::digamma(z) + 1.0 / z;
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
      }
      r.pass = worst <= 1e-11;
      r.detail = fmt("max rel dev %.2e over 50 points (bound 1e-11)", worst);
      break;
    }
    case 4: {
      r.name = "recip_gamma inverts gamma_real";
      std::uniform_real_distribution<double> dx(-20.0, 20.0);
      double worst = 0.0;
      int used = 0;
      while (used < 100) {
        const double x = dx(rng);
        if (std::fabs(x - std::round(x)) < 1e-3) continue;
        ++used;
        worst = std::max(worst,
                         std::fabs(specfun::recip_gamma(x) * specfun::gamma_real(x) - 1.0));
      }
      r.pass = worst <= 1e-11;
      r.detail = fmt("max |1/Gamma x Gamma - 1| = %.2e over 100 points (bound 1e-11)",
                     worst);
      break;
    }
    case 5: {
      r.name = "hurwitz_zeta forward shift zeta(s, q) = q^{-s} + zeta(s, q+1)";
      std::uniform_real_distribution<double> dre(-4.0, 4.0), dim(-20.0, 20.0),
          dq(0.1, 5.0);
      double worst = 0.0;
      int used = 0;
      while (used < 30) {
        const cpx s(dre(rng), dim(rng));
        if (std::abs(s - cpx(1.0, 0.0)) < 0.1) continue;
        ++used;
        const double q = dq(rng);
        const cpx lhs = specfun::hurwitz_zeta(s, q);
        const cpx rhs = std::exp(-s * std::log(q)) + specfun::hurwitz_zeta(s, q + 1.0);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
      }
      r.pass = worst <= 1e-9;
      r.detail = fmt("max rel dev %.2e over 30 points (bound 1e-9)", worst);
      break;
    }
    default:
      throw internal_error("specfun_check: unknown index");
  }
  r.seconds = timer.seconds();
  return r;
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite) {
  std::vector<CheckResult> out;
  const auto add_spectrum = [&out]() {
    out.push_back(criterion_1());
    out.push_back(criterion_2());
    out.push_back(criterion_3());
    out.push_back(criterion_4());
    out.push_back(criterion_13());
  };
  const auto add_asymptotics = [&out]() {
    out.push_back(criterion_5());
    out.push_back(criterion_6());
    out.push_back(criterion_6_info());
  };
  const auto add_zeta = [&out]() {
    out.push_back(criterion_7());
    out.push_back(criterion_8());
    out.push_back(criterion_9());
    out.push_back(criterion_10());
    out.push_back(criterion_11());
    out.push_back(criterion_12());
    out.push_back(criterion_12_info());
  };
  const auto add_acceptance = [&out]() {
    out.push_back(criterion_1());
    out.push_back(criterion_2());
    out.push_back(criterion_3());
    out.push_back(criterion_4());
    out.push_back(criterion_5());
    out.push_back(criterion_6());
    out.push_back(criterion_6_info());
    out.push_back(criterion_7());
    out.push_back(criterion_8());
    out.push_back(criterion_9());
    out.push_back(criterion_10());
    out.push_back(criterion_11());
    out.push_back(criterion_12());
    out.push_back(criterion_12_info());
    out.push_back(criterion_13());
  };

  if (suite == "specfun") {
    for (int i = 1; i <= 5; ++i) out.push_back(specfun_check(i));
  } else if (suite == "spectrum") {
    add_spectrum();
  } else if (suite == "asymptotics") {
    add_asymptotics();
  } else if (suite == "zeta") {
    add_zeta();
  } else if (suite == "acceptance") {
    add_acceptance();
  } else if (suite == "all") {
    for (int i = 1; i <= 5; ++i) out.push_back(specfun_check(i));
    add_acceptance();
  } else {
    throw validation_error("run_suite: unknown suite '" + suite +
                           "' (expected specfun, spectrum, asymptotics, zeta, "
                           "acceptance, or all)");
  }
  return out;
}

int print_report(const std::vector<CheckResult>& results, std::ostream& os) {
  int failed = 0, gating = 0;
  for (const auto& r : results) {
    const char* tag = r.informational ? (r.pass ? "INFO" : "info") : (r.pass ? "PASS" : "FAIL");
    if (!r.informational) {
      ++gating;
      if (!r.pass) ++failed;
    }
    os << "[" << tag << "] " << r.id << "  " << r.name << "  ("
       << fmt("%.2f", r.seconds) << " s)\n";
    if (!r.detail.empty()) os << "       " << r.detail << "\n";
  }
  os << "summary: " << (gating - failed) << "/" << gating << " gating checks pass";
  if (failed > 0) {
    os << "; failing:";
    for (const auto& r : results)
      if (!r.informational && !r.pass) os << " " << r.id;
  }
  os << "\n";
  return failed;
}

}  // namespace szeta::verify
