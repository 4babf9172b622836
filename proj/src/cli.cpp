#include "szeta/cli.hpp"

#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "szeta/error.hpp"
#include "szeta/sae.hpp"
#include "szeta/spectrum.hpp"
#include "szeta/verify.hpp"
#include "szeta/zeta_engine.hpp"

namespace szeta::cli {

namespace {

using nlohmann::json;
using cpx = std::complex<double>;

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return std::string(buf);
}

double parse_double(const std::string& text, const char* what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(v))
    throw validation_error(std::string(what) + ": cannot parse '" + text +
                           "' as a finite number");
  return v;
}

cpx parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return cpx(parse_double(text, "s value"), 0.0);
  return cpx(parse_double(text.substr(0, comma), "s value (real part)"),
             parse_double(text.substr(comma + 1), "s value (imaginary part)"));
}

struct ResolvedContext {
  spectrum::SecularContext ctx;
  bool lattice = false;
  std::optional<double> gamma;  // echoed in output when the angle was given
};

// Builds the operator context from the job's parameter fields, enforcing the
// exactly-one rules.
ResolvedContext resolve_context(const JobSpec& job) {
  if (job.g.has_value() == job.kappa.has_value())
    throw validation_error("exactly one of g and kappa must be given");
  const double g = job.g ? *job.g : sae::g_from_kappa(*job.kappa);
  ResolvedContext rc;
  rc.ctx.params = sae::params_from_g(g);
  const bool esa = sae::regime(g) == sae::RegimeTag::EssentiallySelfAdjoint;
  if (esa) {
    if (job.beta || job.gamma)
      throw validation_error("g >= 3/4 is essentially self-adjoint: there is no "
                             "extension choice, so beta/gamma must not be given");
    rc.ctx.ext = sae::ExtensionParam::minus_infinity();  // unused by the lattice path
    rc.lattice = true;
    return rc;
  }
  if (job.beta.has_value() == job.gamma.has_value())
    throw validation_error("exactly one of beta and gamma must be given "
                           "(nontrivial extension family)");
  if (job.beta) {
    if (*job.beta == "-inf") {
      rc.ctx.ext = sae::ExtensionParam::minus_infinity();
    } else {
      rc.ctx.ext = sae::ExtensionParam::finite(parse_double(*job.beta, "beta"));
    }
  } else {
    rc.ctx.ext = sae::beta_from_gamma(*job.gamma, rc.ctx.params);
    rc.gamma = *job.gamma;
  }
  rc.lattice = !rc.ctx.ext.is_finite();
  return rc;
}

void validate_common(const JobSpec& job) {
  static const std::set<std::string> commands = {"spectrum", "zeta", "poles", "heat",
                                                 "verify"};
  if (!commands.count(job.command))
    throw validation_error("unknown command '" + job.command + "'");
  if (job.format != "json" && job.format != "csv")
    throw validation_error("format must be json or csv");
  if (job.command == "verify") {
    static const std::set<std::string> suites = {"specfun", "spectrum", "asymptotics",
                                                 "zeta", "all"};
    if (!suites.count(job.suite))
      throw validation_error("unknown verify suite '" + job.suite +
                             "' (expected specfun, spectrum, asymptotics, zeta, or all)");
    if (job.g || job.kappa || job.beta || job.gamma)
      throw validation_error("verify takes a suite and a format only");
    return;
  }
  if (job.n_max < 0) throw validation_error("n_max must be nonnegative");
  if (job.M < 1) throw validation_error("M must be at least 1");
  if (job.N_max < 1) throw validation_error("N_max must be at least 1");
  if (job.n_pole_max < 0) throw validation_error("n_pole_max must be nonnegative");
  if (!(job.merge_tol > 0.0)) throw validation_error("merge_tol must be positive");
  if (!(job.pole_guard > 0.0)) throw validation_error("pole_guard must be positive");
  for (const double t : job.t_values)
    if (!(t > 0.0)) throw validation_error("t values must be positive");
  if (job.command == "zeta" && job.s_values.empty())
    throw validation_error("zeta requires at least one --s value");
}

const char* provenance_name(spectrum::Provenance p) {
  switch (p) {
    case spectrum::Provenance::ClosedForm: return "closed_form";
    case spectrum::Provenance::RootFound: return "root_found";
    case spectrum::Provenance::AsymptoticTail: return "asymptotic_tail";
  }
  return "unknown";
}

const char* check_name(zeta_engine::NumericCheck c) {
  switch (c) {
    case zeta_engine::NumericCheck::Supported: return "supported";
    case zeta_engine::NumericCheck::BeyondModelOrder: return "beyond_model_order";
    case zeta_engine::NumericCheck::OutsideWindow: return "outside_window";
    case zeta_engine::NumericCheck::Vanishing: return "vanishing";
  }
  return "unknown";
}

json params_block(const ResolvedContext& rc) {
  json ext;
  if (sae::regime(rc.ctx.params.g) == sae::RegimeTag::EssentiallySelfAdjoint) {
    ext["kind"] = "unique";
  } else if (rc.ctx.ext.is_finite()) {
    ext["kind"] = "finite";
    ext["beta"] = rc.ctx.ext.beta;
  } else {
    ext["kind"] = "minus_infinity";
  }
  if (rc.gamma) ext["gamma"] = *rc.gamma;
  return json{
      {"g", rc.ctx.params.g},
      {"alpha", rc.ctx.params.alpha},
      {"kappa", rc.ctx.params.kappa},
      {"regime", sae::regime(rc.ctx.params.g) == sae::RegimeTag::NontrivialSAE
                     ? "nontrivial_sae"
                     : "essentially_self_adjoint"},
      {"extension", ext},
  };
}

json convention_block() {
  return json{
      {"secular_function",
       "f(lambda) = 1/Gamma(1 - kappa - lambda/4) - beta/Gamma(kappa - lambda/4); "
       "the spectrum of the beta-extension is its zero set, and beta = -inf "
       "selects the lattice lambda = 4(n + kappa)"},
      {"residue_formula",
       "Res zeta(s0) = sum over contributors (N, n) with s0 = -N(2 kappa - 1) - 2n "
       "of ((-1)^N / pi) C_{N,n} sin(2 pi N kappa)"},
      {"coefficient_formula",
       "C_{N,n} = -4^{N(2 kappa - 1)} (2 kappa - 1 + 2n/N) b_n(kappa, N) beta^N, "
       "with b_n the exponential partition sums of the a_m tail coefficients"},
      {"sign_adjudication",
       "the overall +1 sign factor in residue_formula is fixed numerically: "
       "Richardson-extrapolated (s - s0) zeta(s) matches the catalog sign at "
       "every supported pole"},
      {"heat_coefficient",
       "Tr e^{-tH} gains Gamma(s0) Res(s0) t^{-s0} per pole; nonpositive-integer "
       "positions are flagged undefined (Gamma pole)"},
      {"exclusions",
       "nonpositive eigenvalues are omitted from every zeta sum and reported in "
       "the excluded fields; the heat trace keeps all levels"},
  };
}

json settings_block(const JobSpec& job) {
  json s{{"format", job.format}};
  if (job.command == "spectrum") s["n_max"] = job.n_max;
  if (job.command == "zeta" || job.command == "heat") s["M"] = job.M;
  if (job.command == "zeta") s["pole_guard"] = job.pole_guard;
  if (job.command == "poles" || job.command == "heat") {
    s["N_max"] = job.N_max;
    s["n_pole_max"] = job.n_pole_max;
    s["merge_tol"] = job.merge_tol;
  }
  return s;
}

void emit_document(const JobSpec& job, const json& results, std::ostream& out,
                   const ResolvedContext* rc) {
  json doc;
  doc["schema"] = "szeta.v1";
  doc["command"] = job.command;
  if (rc != nullptr) doc["params"] = params_block(*rc);
  doc["settings"] = settings_block(job);
  doc["convention"] = convention_block();
  if (job.command == "verify") doc["suite"] = job.suite;
  doc["results"] = results;
  out << doc.dump(2) << "\n";
}

int run_spectrum(const JobSpec& job, const ResolvedContext& rc, std::ostream& out) {
  const auto spec = spectrum::compute_spectrum(rc.ctx, job.n_max);
  if (job.format == "csv") {
    out << "n,lambda,provenance\n";
    for (const auto& lv : spec.levels)
      out << lv.n << "," << num(lv.lambda) << "," << provenance_name(lv.provenance)
          << "\n";
    return 0;
  }
  json levels = json::array();
  for (const auto& lv : spec.levels)
    levels.push_back(json{{"n", lv.n},
                          {"lambda", lv.lambda},
                          {"provenance", provenance_name(lv.provenance)}});
  emit_document(job,
                json{{"levels", levels},
                     {"has_nonpositive", spec.has_nonpositive},
                     {"at_threshold", spec.at_threshold}},
                out, &rc);
  return 0;
}

int run_zeta(const JobSpec& job, const ResolvedContext& rc, std::ostream& out) {
  std::optional<spectrum::Spectrum> spec;
  const spectrum::Spectrum* pre = nullptr;
  if (!rc.lattice) {
    spec = spectrum::compute_spectrum(rc.ctx, job.M - 1);
    pre = &*spec;
  }
  std::vector<zeta_engine::ZetaValue> values;
  values.reserve(job.s_values.size());
  for (const std::string& text : job.s_values) {
    const cpx s = parse_complex(text);
    values.push_back(s.real() > 1.0
                         ? zeta_engine::zeta_direct(s, rc.ctx, job.M, pre)
                         : zeta_engine::zeta_continued(s, rc.ctx, job.M, pre,
                                                       job.pole_guard));
  }
  if (job.format == "csv") {
    out << "s_re,s_im,value_re,value_im,err_estimate,region,excluded_count\n";
    for (const auto& v : values)
      out << num(v.s.real()) << "," << num(v.s.imag()) << ","
          << num(v.value.real()) << "," << num(v.value.imag()) << ","
          << num(v.err_estimate) << ","
          << (v.region == zeta_engine::Region::DirectSum ? "direct_sum" : "continued")
          << "," << v.excluded_count << "\n";
    return 0;
  }
  json arr = json::array();
  for (const auto& v : values) {
    json one{{"s", {v.s.real(), v.s.imag()}},
             {"value", {v.value.real(), v.value.imag()}},
             {"err_estimate", v.err_estimate},
             {"region",
              v.region == zeta_engine::Region::DirectSum ? "direct_sum" : "continued"},
             {"excluded_count", v.excluded_count}};
    if (v.excluded_count > 0) {
      one["excluded_lambda"] = v.excluded_lambda;
      one["excluded_magnitude"] = v.excluded_magnitude;
    }
    arr.push_back(one);
  }
  emit_document(job, json{{"values", arr}}, out, &rc);
  return 0;
}

int run_poles(const JobSpec& job, const ResolvedContext& rc, std::ostream& out) {
  const auto pc =
      zeta_engine::pole_catalog(rc.ctx, job.N_max, job.n_pole_max, job.merge_tol);
  if (job.format == "csv") {
    out << "position,residue,contributors,vanishing,numeric_check\n";
    for (const auto& e : pc.entries) {
      std::string contrib;
      for (const auto& c : e.contributors) {
        if (!contrib.empty()) contrib += "|";
        contrib += std::to_string(c.first) + ":" + std::to_string(c.second);
      }
      out << num(e.position) << "," << num(e.total_residue) << "," << contrib << ","
          << (e.vanishing ? "true" : "false") << "," << check_name(e.numeric_check)
          << "\n";
    }
    return 0;
  }
  json arr = json::array();
  for (const auto& e : pc.entries) {
    json contrib = json::array();
    for (const auto& c : e.contributors) contrib.push_back({c.first, c.second});
    arr.push_back(json{{"position", e.position},
                       {"residue", e.total_residue},
                       {"contributors", contrib},
                       {"vanishing", e.vanishing},
                       {"numeric_check", check_name(e.numeric_check)}});
  }
  emit_document(job, json{{"entries", arr}}, out, &rc);
  return 0;
}

int run_heat(const JobSpec& job, const ResolvedContext& rc, std::ostream& out) {
  const auto hc =
      zeta_engine::heat_coefficients(rc.ctx, job.N_max, job.n_pole_max, job.merge_tol);
  std::vector<zeta_engine::HeatTrace> traces;
  traces.reserve(job.t_values.size());
  for (const double t : job.t_values)
    traces.push_back(zeta_engine::heat_trace_numeric(t, rc.ctx, job.M));
  if (job.format == "csv") {
    out << "power,coefficient,defined\n";
    for (const auto& h : hc)
      out << num(h.power) << "," << num(h.coefficient) << ","
          << (h.defined ? "true" : "false") << "\n";
    if (!job.t_values.empty()) {
      out << "\nt,value,err_estimate\n";
      for (size_t i = 0; i < traces.size(); ++i)
        out << num(job.t_values[i]) << "," << num(traces[i].value) << ","
            << num(traces[i].err_estimate) << "\n";
    }
    return 0;
  }
  json coeffs = json::array();
  for (const auto& h : hc)
    coeffs.push_back(json{{"power", h.power},
                          {"coefficient", h.coefficient},
                          {"defined", h.defined},
                          {"position", h.position},
                          {"residue", h.residue}});
  json trace = json::array();
  for (size_t i = 0; i < traces.size(); ++i)
    trace.push_back(json{{"t", job.t_values[i]},
                         {"value", traces[i].value},
                         {"err_estimate", traces[i].err_estimate}});
  emit_document(job, json{{"coefficients", coeffs}, {"trace", trace}}, out, &rc);
  return 0;
}

int run_verify(const JobSpec& job, std::ostream& out) {
  const auto results = verify::run_suite(job.suite);
  int failed = 0;
  if (job.format == "json") {
    json checks = json::array();
    for (const auto& r : results) {
      // seconds are omitted: JSON output is bit-deterministic across runs.
      checks.push_back(json{{"id", r.id},
                            {"name", r.name},
                            {"pass", r.pass},
                            {"informational", r.informational},
                            {"detail", r.detail}});
      if (!r.informational && !r.pass) ++failed;
    }
    emit_document(job, json{{"checks", checks}, {"failed", failed}}, out, nullptr);
  } else {
    failed = verify::print_report(results, out);
  }
  return failed > 0 ? 1 : 0;
}

}  // namespace

JobSpec jobspec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw validation_error(std::string("job file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw validation_error("job file must hold a JSON object");
  static const std::set<std::string> known = {
      "command", "g",        "kappa",  "beta",       "gamma",
      "n_max",   "M",        "N_max",  "n_pole_max", "s_values",
      "t_values", "format",  "merge_tol", "pole_guard", "suite"};
  for (const auto& item : j.items())
    if (!known.count(item.key()))
      throw validation_error("unknown job field '" + item.key() + "'");
  JobSpec job;
  try {
    if (j.contains("command")) job.command = j["command"].get<std::string>();
    if (j.contains("g")) job.g = j["g"].get<double>();
    if (j.contains("kappa")) job.kappa = j["kappa"].get<double>();
    if (j.contains("beta")) {
      if (j["beta"].is_string())
        job.beta = j["beta"].get<std::string>();
      else
        job.beta = num(j["beta"].get<double>());
    }
    if (j.contains("gamma")) job.gamma = j["gamma"].get<double>();
    if (j.contains("n_max")) job.n_max = j["n_max"].get<int>();
    if (j.contains("M")) job.M = j["M"].get<int>();
    if (j.contains("N_max")) job.N_max = j["N_max"].get<int>();
    if (j.contains("n_pole_max")) job.n_pole_max = j["n_pole_max"].get<int>();
    if (j.contains("s_values")) {
      for (const auto& s : j["s_values"]) {
        if (s.is_string())
          job.s_values.push_back(s.get<std::string>());
        else
          job.s_values.push_back(num(s.get<double>()));
      }
    }
    if (j.contains("t_values"))
      job.t_values = j["t_values"].get<std::vector<double>>();
    if (j.contains("format")) job.format = j["format"].get<std::string>();
    if (j.contains("merge_tol")) job.merge_tol = j["merge_tol"].get<double>();
    if (j.contains("pole_guard")) job.pole_guard = j["pole_guard"].get<double>();
    if (j.contains("suite")) job.suite = j["suite"].get<std::string>();
  } catch (const json::exception& e) {
    throw validation_error(std::string("job field has the wrong type: ") + e.what());
  }
  return job;
}

std::string jobspec_to_json(const JobSpec& job) {
  json j;
  j["command"] = job.command;
  if (job.g) j["g"] = *job.g;
  if (job.kappa) j["kappa"] = *job.kappa;
  if (job.beta) j["beta"] = *job.beta;
  if (job.gamma) j["gamma"] = *job.gamma;
  j["n_max"] = job.n_max;
  j["M"] = job.M;
  j["N_max"] = job.N_max;
  j["n_pole_max"] = job.n_pole_max;
  j["s_values"] = job.s_values;
  j["t_values"] = job.t_values;
  j["format"] = job.format;
  j["merge_tol"] = job.merge_tol;
  j["pole_guard"] = job.pole_guard;
  j["suite"] = job.suite;
  return j.dump(2);
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    validate_common(job);
    if (job.command == "verify") return run_verify(job, out);
    const ResolvedContext rc = resolve_context(job);
    if (job.command == "spectrum") return run_spectrum(job, rc, out);
    if (job.command == "zeta") return run_zeta(job, rc, out);
    if (job.command == "poles") return run_poles(job, rc, out);
    return run_heat(job, rc, out);
  } catch (const validation_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

namespace {

// CLI11 reads "--beta -inf" as an option followed by an unknown flag. Glue
// leading-dash values (negative numbers and the -inf literal) onto their
// option with '='.
std::vector<std::string> glue_negative_values(int argc, const char* const* argv) {
  static const std::set<std::string> value_opts = {
      "--g", "--kappa", "--beta", "--gamma", "--s", "--t", "--merge-tol",
      "--pole-guard"};
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    const std::string tok = argv[i];
    if (value_opts.count(tok) && i + 1 < argc) {
      const std::string next = argv[i + 1];
      const bool dash_value =
          next.size() >= 2 && next[0] == '-' &&
          (std::isdigit(static_cast<unsigned char>(next[1])) || next[1] == '.' ||
           next == "-inf");
      if (dash_value) {
        out.push_back(tok + "=" + next);
        ++i;
        continue;
      }
    }
    out.push_back(tok);
  }
  return out;
}

struct RawOpts {
  double g = 0.0, kappa = 0.0, gamma = 0.0;
  std::string beta;
  int n_max = 10, M = 2000, N_max = 6, n_pole_max = 8;
  std::vector<std::string> s_values;
  std::vector<double> t_values;
  std::string format = "json";
  double merge_tol = 1e-9, pole_guard = 1e-3;
  std::string suite = "all";
};

void add_extension_opts(CLI::App* sc, RawOpts& raw) {
  sc->add_option("--g", raw.g, "coupling g of the g/x^2 term (g >= -1/4)");
  sc->add_option("--kappa", raw.kappa,
                 "spectral parameter kappa in [1/2, 1); alternative to --g");
  sc->add_option("--beta", raw.beta, "extension parameter, or the literal -inf");
  sc->add_option("--gamma", raw.gamma, "extension angle; alternative to --beta");
  sc->add_option("--format", raw.format, "json or csv (default json)");
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"spectra and spectral zeta functions of the half-line oscillator "
               "with a g/x^2 singularity, over all self-adjoint extensions"};
  app.require_subcommand(0, 1);
  std::string job_file;
  app.add_option("--job", job_file, "run a JSON JobSpec file instead of a subcommand");

  RawOpts raw;
  CLI::App* sp = app.add_subcommand("spectrum", "eigenvalues 0..n_max");
  add_extension_opts(sp, raw);
  sp->add_option("--n-max", raw.n_max, "highest level index (default 10)");

  CLI::App* zt = app.add_subcommand("zeta", "zeta function values");
  add_extension_opts(zt, raw);
  zt->add_option("--M", raw.M, "computed head length (default 2000)");
  zt->add_option("--s", raw.s_values, "evaluation point 're' or 're,im' (repeatable)");
  zt->add_option("--pole-guard", raw.pole_guard,
                 "rejection radius around genuine poles (default 1e-3)");

  CLI::App* pl = app.add_subcommand("poles", "pole/residue catalog");
  add_extension_opts(pl, raw);
  pl->add_option("--N-max", raw.N_max, "deepest tail order (default 6)");
  pl->add_option("--n-pole-max", raw.n_pole_max, "deepest ladder index (default 8)");
  pl->add_option("--merge-tol", raw.merge_tol,
                 "position distance that merges entries (default 1e-9)");

  CLI::App* ht = app.add_subcommand("heat", "heat-kernel coefficients and traces");
  add_extension_opts(ht, raw);
  ht->add_option("--N-max", raw.N_max, "deepest tail order (default 6)");
  ht->add_option("--n-pole-max", raw.n_pole_max, "deepest ladder index (default 8)");
  ht->add_option("--merge-tol", raw.merge_tol,
                 "position distance that merges entries (default 1e-9)");
  ht->add_option("--M", raw.M, "computed head length (default 2000)");
  ht->add_option("--t", raw.t_values, "trace evaluation time (repeatable)");

  CLI::App* vf = app.add_subcommand("verify", "run a verification suite");
  vf->add_option("suite", raw.suite,
                 "specfun | spectrum | asymptotics | zeta | all (default all)");
  vf->add_option("--format", raw.format, "json or csv/report (default json)");

  std::vector<std::string> args = glue_negative_values(argc, argv);
  std::vector<const char*> ptrs;
  ptrs.reserve(args.size() + 1);
  ptrs.push_back(argc > 0 ? argv[0] : "szeta");
  for (const auto& a : args) ptrs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(ptrs.size()), ptrs.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  JobSpec job;
  const auto subs = app.get_subcommands();
  if (!job_file.empty()) {
    if (!subs.empty()) {
      err << "error: --job and a subcommand are mutually exclusive\n";
      return 2;
    }
    std::ifstream in(job_file);
    if (!in) {
      err << "error: cannot open job file '" << job_file << "'\n";
      return 2;
    }
    std::ostringstream text;
    text << in.rdbuf();
    try {
      job = jobspec_from_json(text.str());
    } catch (const validation_error& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  } else {
    if (subs.empty()) {
      err << "error: give a subcommand (spectrum, zeta, poles, heat, verify) or --job; "
             "see --help\n";
      return 2;
    }
    CLI::App* sc = subs.front();
    job.command = sc->get_name();
    const auto given = [sc](const char* name) {
      const CLI::Option* o = sc->get_option_no_throw(name);
      return o != nullptr && o->count() > 0;
    };
    if (given("--g")) job.g = raw.g;
    if (given("--kappa")) job.kappa = raw.kappa;
    if (given("--beta")) job.beta = raw.beta;
    if (given("--gamma")) job.gamma = raw.gamma;
    job.n_max = raw.n_max;
    job.M = raw.M;
    job.N_max = raw.N_max;
    job.n_pole_max = raw.n_pole_max;
    job.s_values = raw.s_values;
    job.t_values = raw.t_values;
    job.format = raw.format;
    job.merge_tol = raw.merge_tol;
    job.pole_guard = raw.pole_guard;
    job.suite = raw.suite;
  }
  return run(job, out, err);
}

int main_entry(int argc, const char* const* argv) {
  return main_entry(argc, argv, std::cout, std::cerr);
}

}  // namespace szeta::cli
