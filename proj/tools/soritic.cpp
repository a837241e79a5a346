#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "soritic/soritic.hpp"

namespace {

using namespace soritic;
using ojson = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Arithmetic whose neutrix maximum picks the smaller neutrix. Used to confirm
// the law suite catches a broken nMax.
struct FaultyMaxArithmetic {
  static Neutrix faulty_max(std::initializer_list<Neutrix> ns) { return std::min(ns); }
  ExternalNumber add(const ExternalNumber& a, const ExternalNumber& b) const {
    return {a.rep() + b.rep(), faulty_max({a.neutrix(), b.neutrix()})};
  }
  ExternalNumber mul(const ExternalNumber& a, const ExternalNumber& b) const {
    return {a.rep() * b.rep(), faulty_max({n_scale(a.rep(), b.neutrix()), n_scale(b.rep(), a.neutrix()),
                                           n_mul(a.neutrix(), b.neutrix())})};
  }
  ExternalNumber neg(const ExternalNumber& a) const { return -a; }
};

ojson suite_to_json(const SuiteReport& r) {
  ojson j;
  j["tool"] = "soritic";
  j["version"] = std::string(kVersion);
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  ojson laws = ojson::array();
  for (const auto& l : r.laws) {
    ojson e;
    e["name"] = l.name;
    e["trials"] = l.trials;
    e["passed"] = l.passed;
    if (!l.ok()) {
      ojson ce = ojson::array();
      for (const auto& x : l.counterexample) ce.push_back(x.str());
      e["counterexample"] = ce;
      e["detail"] = l.detail;
    }
    laws.push_back(e);
  }
  j["laws"] = laws;
  j["distributivity_failures"] = r.distributivity_failures;
  j["result"] = r.ok() ? "PASS" : "FAIL";
  return j;
}

int cmd_numbers_eval(const std::string& expr, bool check, std::uint64_t seed, std::size_t samples,
                     const std::string& format) {
  ExternalNumber x;
  try {
    x = parse_external(expr);
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kUsage;
  }
  Classification c = classify(x);
  std::optional<MembershipCheck> mc;
  if (check) mc = check_members(expr, x, seed, samples);

  if (format == "json") {
    ojson j;
    j["value"] = x.str();
    j["class"] = to_string(c);
    j["limited"] = c.limited;
    j["infinitesimal"] = c.infinitesimal;
    if (mc) {
      j["check"] = {{"seed", seed}, {"samples", mc->samples}, {"ok", mc->ok}};
      if (mc->counterexample) j["check"]["counterexample"] = mc->counterexample->str();
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << x.str() << "\n";
    std::cout << "class: " << to_string(c) << "\n";
    if (mc) {
      std::cout << "check: " << (mc->ok ? "ok" : "FAIL") << " (" << mc->samples << " samples, seed " << seed << ")";
      if (mc->counterexample) std::cout << "; member " << mc->counterexample->str() << " lies outside";
      std::cout << "\n";
    }
  }
  return mc && !mc->ok ? kFailure : kOk;
}

int cmd_laws(std::uint64_t seed, std::size_t n, const std::string& format, const std::string& fault) {
  if (n == 0) {
    std::cerr << "laws: --n must be at least 1\n";
    return kUsage;
  }
  SuiteReport r = fault == "nmax" ? run_law_suite(seed, n, FaultyMaxArithmetic{}) : run_law_suite(seed, n);
  if (format == "json")
    std::cout << suite_to_json(r).dump(2) << "\n";
  else
    std::cout << suite_to_text(r);
  return r.ok() ? kOk : kFailure;
}

int cmd_sorites_run(const std::string& path, const std::string& format, const std::string& out,
                    std::uint64_t seed) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return kUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  SoritesReport report;
  try {
    report = run_scenario(scenario_from_text(buf.str()));
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsage;
  }
  std::string text = format == "json" ? report_to_json(report, seed).dump(2) + "\n" : report_to_text(report, seed);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream o(out, std::ios::binary);
    if (!o) {
      std::cerr << "cannot write " << out << "\n";
      return kUsage;
    }
    o << text;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"External numbers, three-valued logic and sorites scenarios"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto* numbers = app.add_subcommand("numbers", "External-number calculator");
  numbers->require_subcommand(1);
  auto* eval = numbers->add_subcommand("eval", "Evaluate an expression and classify it");
  std::string expr;
  bool check = false;
  std::uint64_t seed = 42;
  std::size_t samples = 50;
  std::string format = "text";
  eval->add_option("expr", expr, "Expression, e.g. '(2 + osl) * (3 + osl)'")->required();
  eval->add_flag("--check", check, "Verify the result on sampled members of each literal");
  eval->add_option("--seed", seed, "Seed for --check");
  eval->add_option("--samples", samples, "Member samples for --check");
  eval->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* tables = app.add_subcommand("tables", "Print the strong Kleene truth tables");

  auto* laws = app.add_subcommand("laws", "Run the algebraic law suites");
  std::size_t n = 1000;
  std::string fault;
  laws->add_option("--seed", seed, "64-bit seed");
  laws->add_option("--n", n, "Random instances per law");
  laws->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  laws->add_option("--inject-fault", fault, "Run against a deliberately broken arithmetic")
      ->check(CLI::IsMember({"nmax"}));

  auto* sorites = app.add_subcommand("sorites", "Sorites scenarios");
  sorites->require_subcommand(1);
  auto* run = sorites->add_subcommand("run", "Run a scenario config");
  std::string config, out;
  std::uint64_t run_seed = 0;
  run->add_option("config", config, "Scenario JSON file")->required();
  run->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  run->add_option("--out", out, "Write the report to a file");
  run->add_option("--seed", run_seed, "Seed recorded in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_numbers_eval(expr, check, seed, samples, format);
    if (*tables) {
      std::cout << kleene_tables_text();
      return kOk;
    }
    if (*laws) return cmd_laws(seed, n, format, fault);
    if (*run) return cmd_sorites_run(config, format, out, run_seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
