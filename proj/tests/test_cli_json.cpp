// CLI behavior: argument handling, exit codes, golden CSV rows, JSON documents
// against schemas/szeta.v1.json, and JobSpec round trips. The schema check uses
// a small local validator covering the draft-07 subset the schema uses.
#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "szeta/cli.hpp"
#include "szeta/error.hpp"
#include "szeta/specfun.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("szeta");
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.code = szeta::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// Validates `doc` against the draft-07 subset used by szeta.v1: type (single
// string), enum, required, properties, additionalProperties (boolean), items
// (single schema), minItems, maxItems. Returns the first violation, "" if ok.
std::string validate(const json& doc, const json& schema, const std::string& where) {
  if (schema.contains("type")) {
    const std::string t = schema["type"].get<std::string>();
    const bool ok = (t == "object" && doc.is_object()) ||
                    (t == "array" && doc.is_array()) ||
                    (t == "string" && doc.is_string()) ||
                    (t == "number" && doc.is_number()) ||
                    (t == "integer" && doc.is_number_integer()) ||
                    (t == "boolean" && doc.is_boolean());
    if (!ok) return where + ": expected type " + t + ", got " + doc.dump();
  }
  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& v : schema["enum"]) hit = hit || v == doc;
    if (!hit) return where + ": value " + doc.dump() + " not in enum";
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!doc.contains(key.get<std::string>()))
          return where + ": missing required member " + key.get<std::string>();
    const json props =
        schema.contains("properties") ? schema["properties"] : json::object();
    const bool closed = schema.contains("additionalProperties") &&
                        schema["additionalProperties"].is_boolean() &&
                        !schema["additionalProperties"].get<bool>();
    for (const auto& item : doc.items()) {
      if (props.contains(item.key())) {
        const std::string msg =
            validate(item.value(), props[item.key()], where + "." + item.key());
        if (!msg.empty()) return msg;
      } else if (closed) {
        return where + ": unexpected member " + item.key();
      }
    }
  }
  if (doc.is_array()) {
    if (schema.contains("minItems") &&
        doc.size() < schema["minItems"].get<size_t>())
      return where + ": fewer than minItems elements";
    if (schema.contains("maxItems") &&
        doc.size() > schema["maxItems"].get<size_t>())
      return where + ": more than maxItems elements";
    if (schema.contains("items"))
      for (size_t i = 0; i < doc.size(); ++i) {
        const std::string msg = validate(doc[i], schema["items"],
                                         where + "[" + std::to_string(i) + "]");
        if (!msg.empty()) return msg;
      }
  }
  return "";
}

json load_schema() {
  std::ifstream in(std::string(SZETA_REPO_DIR) + "/schemas/szeta.v1.json");
  REQUIRE(in.good());
  json schema;
  in >> schema;
  return schema;
}

void check_valid_document(const std::string& text) {
  const json doc = json::parse(text);
  static const json schema = load_schema();
  const std::string msg = validate(doc, schema, "$");
  INFO(msg);
  CHECK(msg.empty());
}

}  // namespace

TEST_CASE("cli spectrum csv matches the minus-infinity lattice at g = 0") {
  const auto r =
      run_cli({"spectrum", "--g", "0", "--beta", "-inf", "--n-max", "5",
               "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  const auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "n,lambda,provenance");
  const double expected[6] = {3.0, 7.0, 11.0, 15.0, 19.0, 23.0};
  for (int n = 0; n < 6; ++n) {
    std::ostringstream want;
    want << n << "," << expected[n] << ",closed_form";
    CHECK(lines[static_cast<size_t>(n) + 1] == want.str());
  }
}

TEST_CASE("cli poles lists the expected positions for kappa = 0.8, beta = 1") {
  const auto r = run_cli({"poles", "--kappa", "0.8", "--beta", "1", "--N-max", "2",
                          "--n-pole-max", "1", "--format", "csv"});
  CHECK(r.code == 0);
  const auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "position,residue,contributors,vanishing,numeric_check");
  const double expected[5] = {1.0, -0.6, -1.2, -2.6, -3.2};
  for (int i = 0; i < 5; ++i) {
    const auto& line = lines[static_cast<size_t>(i) + 1];
    const double pos = std::stod(line.substr(0, line.find(',')));
    CHECK(pos == doctest::Approx(expected[i]).epsilon(1e-12));
  }
  CHECK(lines[1].find(",supported") != std::string::npos);   // Weyl pole at 1
  CHECK(lines[4].find(",outside_window") != std::string::npos);  // -2.6
}

TEST_CASE("cli zeta reproduces the beta = 0 closed form at s = 2") {
  const auto r = run_cli({"zeta", "--g", "0", "--beta", "0", "--s", "2"});
  CHECK(r.code == 0);
  check_valid_document(r.out);
  const json doc = json::parse(r.out);
  REQUIRE(doc["results"]["values"].size() == 1);
  const double got = doc["results"]["values"][0]["value"][0].get<double>();
  const double want =
      std::exp(-2.0 * std::log(4.0)) *
      szeta::specfun::hurwitz_zeta(std::complex<double>(2.0, 0.0), 0.25).real();
  CHECK(std::fabs(got - want) <= 1e-12 * std::fabs(want));
  CHECK(doc["results"]["values"][0]["region"] == "direct_sum");
  CHECK(doc["results"]["values"][0]["s"][1] == 0.0);
}

TEST_CASE("cli json documents validate against the schema for every command") {
  SUBCASE("spectrum, finite beta") {
    const auto r = run_cli({"spectrum", "--kappa", "0.8", "--beta", "1"});
    CHECK(r.code == 0);
    check_valid_document(r.out);
    const json doc = json::parse(r.out);
    CHECK(doc["params"]["extension"]["kind"] == "finite");
    CHECK(doc["results"]["levels"].size() == 11);
  }
  SUBCASE("spectrum, essentially self-adjoint") {
    const auto r = run_cli({"spectrum", "--g", "2", "--n-max", "3"});
    CHECK(r.code == 0);
    check_valid_document(r.out);
    const json doc = json::parse(r.out);
    CHECK(doc["params"]["regime"] == "essentially_self_adjoint");
    CHECK(doc["params"]["extension"]["kind"] == "unique");
  }
  SUBCASE("zeta, continued region with an excluded level") {
    const auto r = run_cli({"zeta", "--kappa", "0.8", "--beta", "1", "--s", "0",
                            "--s", "2,1", "--M", "400"});
    CHECK(r.code == 0);
    check_valid_document(r.out);
    const json doc = json::parse(r.out);
    CHECK(doc["results"]["values"][0]["region"] == "continued");
    CHECK(doc["results"]["values"][0]["excluded_count"] == 1);
    CHECK(doc["results"]["values"][1]["region"] == "direct_sum");
    CHECK(doc["results"]["values"][1]["s"][1] == 1.0);
  }
  SUBCASE("poles") {
    const auto r = run_cli({"poles", "--kappa", "0.75", "--beta", "1"});
    CHECK(r.code == 0);
    check_valid_document(r.out);
    const json doc = json::parse(r.out);
    CHECK(doc["results"]["entries"][0]["position"] == 1.0);
  }
  SUBCASE("heat with traces") {
    const auto r = run_cli({"heat", "--kappa", "0.75", "--beta", "1", "--t", "0.01",
                            "--t", "0.02", "--M", "500"});
    CHECK(r.code == 0);
    check_valid_document(r.out);
    const json doc = json::parse(r.out);
    CHECK(doc["results"]["coefficients"][0]["power"] == -1.0);
    CHECK(doc["results"]["trace"].size() == 2);
  }
  SUBCASE("verify specfun") {
    const auto r = run_cli({"verify", "specfun"});
    CHECK(r.code == 0);
    check_valid_document(r.out);
    const json doc = json::parse(r.out);
    CHECK(doc["suite"] == "specfun");
    CHECK(doc["results"]["failed"] == 0);
    for (const auto& c : doc["results"]["checks"]) CHECK(c["pass"] == true);
  }
}

TEST_CASE("cli jobspec round trip reproduces the command-line output") {
  const auto direct = run_cli({"zeta", "--kappa", "0.8", "--beta", "1", "--s",
                               "-0.3", "--M", "500"});
  CHECK(direct.code == 0);

  szeta::cli::JobSpec job;
  job.command = "zeta";
  job.kappa = 0.8;
  job.beta = "1";
  job.s_values = {"-0.3"};
  job.M = 500;
  const std::string text = szeta::cli::jobspec_to_json(job);
  const szeta::cli::JobSpec back = szeta::cli::jobspec_from_json(text);
  std::ostringstream out, err;
  CHECK(szeta::cli::run(back, out, err) == 0);
  CHECK(out.str() == direct.out);
}

TEST_CASE("cli jobspec rejects unknown fields and bad types") {
  CHECK_THROWS_AS(szeta::cli::jobspec_from_json("{\"commnd\":\"zeta\"}"),
                  szeta::validation_error);
  CHECK_THROWS_AS(szeta::cli::jobspec_from_json("{\"M\":\"many\"}"),
                  szeta::validation_error);
  CHECK_THROWS_AS(szeta::cli::jobspec_from_json("[1,2]"), szeta::validation_error);
  CHECK_THROWS_AS(szeta::cli::jobspec_from_json("not json"),
                  szeta::validation_error);
}

TEST_CASE("cli validation failures exit with code 2") {
  CHECK(run_cli({"spectrum"}).code == 2);  // no parameters at all
  CHECK(run_cli({"spectrum", "--g", "0", "--kappa", "0.8", "--beta", "1"}).code == 2);
  CHECK(run_cli({"spectrum", "--g", "2", "--beta", "1"}).code == 2);  // ESA + beta
  CHECK(run_cli({"spectrum", "--g", "0", "--beta", "1", "--gamma", "0.5"}).code == 2);
  CHECK(run_cli({"spectrum", "--g", "0"}).code == 2);  // extension choice missing
  CHECK(run_cli({"spectrum", "--g", "0", "--beta", "fast"}).code == 2);
  CHECK(run_cli({"spectrum", "--g", "0", "--beta", "inf"}).code == 2);
  CHECK(run_cli({"zeta", "--g", "0", "--beta", "0"}).code == 2);  // no s values
  CHECK(run_cli({"zeta", "--g", "0", "--beta", "0", "--s", "2;0"}).code == 2);
  CHECK(run_cli({"spectrum", "--g", "0", "--beta", "0", "--format", "yaml"}).code ==
        2);
  CHECK(run_cli({"heat", "--g", "0", "--beta", "0", "--t", "0"}).code == 2);
  CHECK(run_cli({"verify", "everything"}).code == 2);
  CHECK(run_cli({}).code == 2);  // no subcommand, no job file
  const auto unknown = run_cli({"explode"});
  CHECK(unknown.code == 2);
}

TEST_CASE("cli domain failures exit with code 3") {
  // s = -0.6 is a genuine catalog pole at kappa = 0.8, beta = 1.
  const auto r = run_cli({"zeta", "--kappa", "0.8", "--beta", "1", "--s", "-0.6"});
  CHECK(r.code == 3);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("cli accepts separate-token negative option values") {
  // CLI11 alone would read -inf / negative numbers as unknown flags; the argv
  // pre-pass glues them to the preceding option.
  CHECK(run_cli({"spectrum", "--g", "0", "--beta", "-inf", "--n-max", "2"}).code == 0);
  CHECK(run_cli({"spectrum", "--g", "0", "--beta", "-2.5", "--n-max", "2"}).code == 0);
  CHECK(run_cli({"zeta", "--g", "0", "--beta", "0", "--s", "-0.3"}).code == 0);
  CHECK(run_cli({"spectrum", "--g", "-0.1875", "--beta", "0"}).code == 0);
}

TEST_CASE("cli gamma parameterization selects the matching extension") {
  const auto by_gamma = run_cli({"spectrum", "--kappa", "0.8", "--gamma", "0.7",
                                 "--n-max", "4"});
  CHECK(by_gamma.code == 0);
  check_valid_document(by_gamma.out);
  const json doc = json::parse(by_gamma.out);
  CHECK(doc["params"]["extension"]["gamma"] == 0.7);
  REQUIRE(doc["params"]["extension"].contains("beta"));
  // Rerunning with the resolved beta must give the same eigenvalues.
  std::ostringstream beta_text;
  beta_text.precision(17);
  beta_text << doc["params"]["extension"]["beta"].get<double>();
  const auto by_beta = run_cli({"spectrum", "--kappa", "0.8", "--beta",
                                beta_text.str(), "--n-max", "4"});
  CHECK(by_beta.code == 0);
  const json doc2 = json::parse(by_beta.out);
  CHECK(doc["results"]["levels"] == doc2["results"]["levels"]);
}

TEST_CASE("cli help exits zero") {
  const auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("spectrum") != std::string::npos);
}
