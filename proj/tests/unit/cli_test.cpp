#include <gtest/gtest.h>

#include <string>

#include "json.hpp"
#include "process.hpp"

namespace {

using CliResult = proc::Result;
using proc::slurp;

CliResult run(const std::string& args) { return proc::run(std::string(SORITIC_CLI) + " " + args); }

std::string fixture(const std::string& rel) { return std::string(SORITIC_FIXTURES_DIR) + "/" + rel; }

}  // namespace

TEST(Cli, TablesMatchGoldenFile) {
  CliResult r = run("tables");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, slurp(fixture("golden/tables.txt")));
}

TEST(Cli, NumbersEval) {
  CliResult r = run("numbers eval '(2 + osl) * (3 + osl)'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "6 + o(0)\nclass: Appreciable\n");
  EXPECT_EQ(run("numbers eval 'osl + osl'").out, "o(0)\nclass: NeutrixOnly(Osl)\n");
  EXPECT_EQ(run("numbers eval '3 * L(0)'").out, "L(0)\nclass: NeutrixOnly(Lim)\n");
}

TEST(Cli, NumbersEvalCheckAndJson) {
  CliResult r = run("numbers eval '(e^(-1) + L(0)) * (e + osl)' --check --format json");
  EXPECT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"], "o(-1)");
  EXPECT_EQ(j["check"]["ok"], true);
  EXPECT_EQ(j["check"]["samples"], 50);
}

TEST(Cli, NumbersEvalSyntaxError) {
  CliResult r = run("numbers eval '1 +'");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("syntax error"), std::string::npos);
}

TEST(Cli, LawsPassAndAreDeterministic) {
  CliResult a = run("laws --seed 7 --n 60");
  EXPECT_EQ(a.status, 0) << a.out;
  EXPECT_NE(a.out.find("result: PASS"), std::string::npos);
  EXPECT_EQ(run("laws --seed 7 --n 60").out, a.out);
}

TEST(Cli, LawsCatchInjectedFault) {
  CliResult r = run("laws --seed 42 --n 100 --inject-fault nmax");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("counterexample:"), std::string::npos);
  EXPECT_NE(r.out.find("result: FAIL"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("laws --seed 42 --n 0").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("laws --n many").status, 2);
  EXPECT_EQ(run("sorites run").status, 2);
  EXPECT_EQ(run("sorites run /nonexistent.json").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, SoritesClassicalFixture) {
  CliResult r = run("sorites run " + fixture("scenarios/classical_cutoff5.json") + " --format json");
  ASSERT_EQ(r.status, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["barnes"]["c3"]["holds"], false);
  EXPECT_EQ(j["barnes"]["c3"]["witness"], "4");
  EXPECT_EQ(j["induction"]["step"]["counterexample"], 4);
}

TEST(Cli, SoritesHeapFixture) {
  CliResult r = run("sorites run " + fixture("scenarios/nonstandard_heap.json") + " --format json");
  ASSERT_EQ(r.status, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  for (const char* c : {"c1", "c2", "c3"}) EXPECT_EQ(j["barnes"][c]["holds"], true) << c;
  EXPECT_EQ(j["induction"]["witnesses"][0]["witness"], "e^(-1)");
  EXPECT_EQ(j["induction"]["witnesses"][0]["notS"], true);
}

TEST(Cli, SoritesBadBackendType) {
  CliResult r = run("sorites run " + fixture("scenarios/bad_backend_type.json"));
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("/backend/type"), std::string::npos);
}

TEST(Cli, SoritesReportsAreByteIdentical) {
  for (const char* name : {"classical_cutoff5", "nonstandard_heap", "nonstandard_cut", "kleene_penumbra",
                           "fuzzy_linear", "supervaluation"}) {
    for (const char* fmt : {"text", "json"}) {
      std::string args = "sorites run " + fixture(std::string("scenarios/") + name + ".json") + " --seed 3 --format " + fmt;
      CliResult a = run(args), b = run(args);
      EXPECT_EQ(a.status, 0) << name;
      EXPECT_EQ(a.out, b.out) << name;
    }
  }
}

TEST(Cli, SoritesWritesOutFile) {
  std::string path = ::testing::TempDir() + "soritic_report.json";
  CliResult r = run("sorites run " + fixture("scenarios/kleene_penumbra.json") + " --format json --out " + path);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "");
  auto j = nlohmann::json::parse(slurp(path));
  EXPECT_EQ(j["backend"]["id"], "kleene_penumbra");
}
