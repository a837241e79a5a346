#include <gtest/gtest.h>

#include "soritic/soritic.hpp"

using namespace soritic;

namespace {

SoritesScenario scenario(Backend b, long long lo = 1, long long hi = 10) {
  SoritesScenario sc;
  sc.name = "test";
  sc.lo = lo;
  sc.hi = hi;
  sc.backend = std::move(b);
  sc.chain_length = ModelInteger::naive(static_cast<unsigned long long>(hi - lo));
  return sc;
}

SoritesScenario heap(std::optional<ExternalNumber> cut = std::nullopt) {
  SoritesScenario sc = scenario(Nonstandard{std::move(cut)}, 1, 1000);
  sc.witnesses = {EpsSeries::omega()};
  return sc;
}

FuzzyMembership linear() { return FuzzyMembership{{{1, 1}, {100, 0}}}; }

}  // namespace

TEST(ModelInteger, WitnessMustBeUnlimitedAndPositive) {
  EXPECT_NO_THROW(ModelInteger::witness(EpsSeries::omega()));
  EXPECT_THROW(ModelInteger::witness(EpsSeries(5)), std::invalid_argument);
  EXPECT_THROW(ModelInteger::witness(-EpsSeries::omega()), std::invalid_argument);
  EXPECT_TRUE(ModelInteger::naive(3).is_naive());
}

TEST(Barnes, ClassicalCutoffViolatesTolerance) {
  BarnesResult r = barnes_check(scenario(ClassicalCutoff{5}));
  EXPECT_TRUE(r.c1);
  EXPECT_TRUE(r.c2);
  EXPECT_FALSE(r.c3);
  ASSERT_TRUE(r.c3_witness);
  EXPECT_EQ(*r.c3_witness, "4");
}

TEST(Barnes, EveryInteriorCutoffViolatesTolerance) {
  for (long long k = 2; k <= 10; ++k) {
    BarnesResult r = barnes_check(scenario(ClassicalCutoff{k}));
    EXPECT_FALSE(r.c3) << k;
    EXPECT_EQ(*r.c3_witness, std::to_string(k - 1));
  }
}

TEST(Barnes, PenumbraHasNoDirectFlip) {
  BarnesResult r = barnes_check(scenario(KleenePenumbra{4, 7}));
  EXPECT_TRUE(r.c1 && r.c2 && r.c3);
}

TEST(Barnes, NonstandardLimitedPassesAll) {
  BarnesResult r = barnes_check(heap());
  EXPECT_TRUE(r.c1 && r.c2 && r.c3) << r.c3_evidence;
}

TEST(Barnes, NonstandardSharpCutFailsTolerance) {
  BarnesResult r = barnes_check(heap(ExternalNumber(EpsSeries::omega())));
  EXPECT_FALSE(r.c3);
}

TEST(Induction, ClassicalCutoff) {
  InductionResult r = run_induction(scenario(ClassicalCutoff{5}));
  EXPECT_TRUE(r.basis);
  EXPECT_FALSE(r.step);
  EXPECT_EQ(r.step_counterexample, 4);
}

TEST(Induction, NonstandardExternalInduction) {
  InductionResult r = run_induction(heap());
  EXPECT_TRUE(r.basis);
  EXPECT_TRUE(r.step);
  ASSERT_EQ(r.witness_negations.size(), 1u);
  EXPECT_EQ(r.witness_negations[0].first, "e^(-1)");
  EXPECT_TRUE(r.witness_negations[0].second);
}

TEST(Induction, FuzzyLinear) {
  InductionResult r = run_induction(scenario(linear(), 1, 100));
  EXPECT_EQ(r.basis_value, "1");
  // Step n has degree max((n-1)/99, (99-n)/99); the least is at n = 50.
  Rational least = 1;
  for (long long n = 1; n < 100; ++n) least = std::min(least, std::max(Rational(n - 1, 99), Rational(99 - n, 99)));
  EXPECT_EQ(parse_rational(r.weakest_step_value), least);
  EXPECT_EQ(least, Rational(49, 99));
  EXPECT_EQ(r.step_counterexample, 1);
  EXPECT_EQ(r.step_value_at_counterexample, "98/99");
}

TEST(Conditional, ClassicalStopsAtCutoff) {
  ConditionalResult r = run_conditional(scenario(ClassicalCutoff{5}), ModelInteger::naive(9));
  EXPECT_FALSE(r.completed);
  EXPECT_EQ(r.failing_link, 4);
}

TEST(Conditional, NonstandardNaiveChainCompletes) {
  ConditionalResult r = run_conditional(heap(), ModelInteger::naive(1000));
  EXPECT_TRUE(r.completed);
  EXPECT_EQ(r.conclusion, "S(a_1001)");
  EXPECT_EQ(r.conclusion_value, "true");
}

TEST(Conditional, WitnessChainIsRefused) {
  EXPECT_THROW(run_conditional(heap(), ModelInteger::witness(EpsSeries::omega())), ChainThroughWitness);
  SoritesScenario sc = heap();
  sc.chain_length = ModelInteger::witness(EpsSeries::omega());
  SoritesReport rep = run_scenario(sc);
  ASSERT_TRUE(rep.conditional.refused);
  EXPECT_FALSE(rep.conditional.completed);
}

TEST(Conditional, FuzzyConclusionNonIncreasingInChainLength) {
  SoritesScenario sc = scenario(linear(), 1, 100);
  Rational prev = 2;
  for (unsigned long long len = 0; len <= 99; ++len) {
    ConditionalResult r = run_conditional(sc, ModelInteger::naive(len));
    Rational d = parse_rational(r.conclusion_value);
    EXPECT_LE(d, prev) << len;
    prev = d;
  }
}

TEST(Conditional, SupervaluationMembers) {
  ConditionalResult r = run_conditional(scenario(Supervaluation{{{2, 3}}}), ModelInteger::naive(9));
  EXPECT_FALSE(r.completed);
  ASSERT_EQ(r.per_member.size(), 2u);
  EXPECT_EQ(r.per_member[0].failing_link, 1);
  EXPECT_EQ(r.per_member[1].failing_link, 2);
}

TEST(Doubling, LimitedIsInvariant) {
  DoublingResult r = doubling_analysis(heap());
  EXPECT_TRUE(r.applicable);
  EXPECT_EQ(r.invariance_holds, true);
  EXPECT_GT(r.samples, 1000u);
}

TEST(Doubling, SharpCutFailsAtHalfWitness) {
  SoritesScenario sc = heap(ExternalNumber(EpsSeries::omega()));
  DoublingResult r = doubling_analysis(sc);
  EXPECT_EQ(r.invariance_holds, false);
  ASSERT_TRUE(r.witness);
  EpsSeries x = parse_series(*r.witness);
  EXPECT_EQ(x, parse_series("1/2*e^(-1)"));
  auto& ns = std::get<Nonstandard>(sc.backend);
  EXPECT_TRUE(ns.holds(x));
  EXPECT_FALSE(ns.holds(x * EpsSeries(2)));
}

TEST(Doubling, OtherBackendsUnsupported) {
  EXPECT_THROW(doubling_analysis(scenario(ClassicalCutoff{5})), BackendUnsupported);
  EXPECT_FALSE(run_scenario(scenario(ClassicalCutoff{5})).doubling.applicable);
}

TEST(Scenario, SupervaluationSharpBoundaryNote) {
  SoritesReport rep = run_scenario(scenario(Supervaluation{{{2, 3}}}));
  bool found = false;
  for (const auto& n : rep.notes) found = found || n.find("Supertrue") != std::string::npos;
  EXPECT_TRUE(found);
  Formula sharp = parse_formula("exists n in 1..9. S(n) & ~S(n+1)");
  EXPECT_EQ(evaluate_under(Supervaluation{{{2, 3}}}, sharp).value, "Supertrue");
  for (long long n = 1; n < 10; ++n) {
    Verdict v = evaluate_under(Supervaluation{{{2, 3}}}, detail::step_formula(n));
    EXPECT_TRUE(v.value == "Supertrue" || v.value == "Indeterminate") << n;
  }
}

TEST(Scenario, Validation) {
  EXPECT_THROW(scenario(KleenePenumbra{7, 4}).validate(), std::invalid_argument);
  EXPECT_THROW(scenario(Supervaluation{}).validate(), EmptyFamily);
  EXPECT_THROW(scenario(Supervaluation{PrecisificationFamily{std::vector<long long>{0}}}).validate(), std::invalid_argument);
  EXPECT_NO_THROW(scenario(FuzzyMembership{{{1, 1}, {5, 0}}}, 1, 10).validate());
  EXPECT_THROW(scenario(FuzzyMembership{{{1, 1}, {20, 0}}}, 1, 10).validate(), std::invalid_argument);
  EXPECT_THROW(run_conditional(scenario(ClassicalCutoff{5}), ModelInteger::naive(20)), ConfigError);
}

TEST(ScenarioIo, ConfigErrorsCarryPointers) {
  auto pointer_of = [](const std::string& text) {
    try {
      scenario_from_text(text);
    } catch (const ConfigError& e) {
      return e.pointer();
    }
    return std::string("no error");
  };
  EXPECT_EQ(pointer_of(R"J({"name":"x","range":[1,10],"backend":{"type":"nope"}})J"), "/backend/type");
  EXPECT_EQ(pointer_of(R"J({"name":"x","range":[1],"backend":{"type":"classical_cutoff"}})J"), "/range");
  EXPECT_EQ(pointer_of(R"J({"name":"x","range":[1,10],"backend":{"type":"classical_cutoff","params":{}}})J"),
            "/backend/params/cutoff");
  EXPECT_EQ(pointer_of(R"J({"name":"x","range":[1,10],"backend":{"type":"kleene_penumbra","params":{"t1":"a","t2":3}}})J"),
            "/backend/params/t1");
  EXPECT_EQ(pointer_of(R"J({"name":"x","range":[1,10],"backend":{"type":"classical_cutoff","params":{"cutoff":5}},"witnesses":["3"]})J"),
            "/witnesses/0");
  EXPECT_EQ(pointer_of(R"J({"name":"x","range":[1,10],"backend":{"type":"classical_cutoff","params":{"cutoff":5}},"chainLength":50})J"),
            "/chainLength");
  EXPECT_EQ(pointer_of(R"J({"name":"x","range":[1,10],"backend":{"type":"classical_cutoff","params":{"cutoff":5}},"extra":1})J"),
            "/extra");
  EXPECT_EQ(pointer_of("{"), "");
}

TEST(ScenarioIo, ReadsEveryBackend) {
  SoritesScenario a = scenario_from_text(
      R"J({"name":"f","range":[1,4],"backend":{"type":"fuzzy_membership","params":{"points":[[1,1],["5/2","1/2"],[4,0]],"threshold":"3/4"}}})J");
  auto& f = std::get<FuzzyMembership>(a.backend);
  EXPECT_EQ(f.threshold, Rational(3, 4));
  EXPECT_EQ(f.degree(Rational(2)).value(), Rational(2, 3));
  SoritesScenario b = scenario_from_text(
      R"J({"name":"n","range":[1,5],"backend":{"type":"nonstandard","params":{"threshold":"2*e^(-1) + osl"}},"chainLength":"e^(-2)"})J");
  EXPECT_FALSE(b.chain_length.is_naive());
  EXPECT_EQ(std::get<Nonstandard>(b.backend).cut->str(), "2*e^(-1) + o(0)");
}

TEST(ScenarioIo, ReportsAreDeterministic) {
  SoritesScenario sc = heap();
  std::string a = report_to_json(run_scenario(sc), 5).dump(2);
  std::string b = report_to_json(run_scenario(sc), 5).dump(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(report_to_text(run_scenario(sc), 5), report_to_text(run_scenario(sc), 5));
  auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["seed"], 5);
  EXPECT_EQ(j["version"], kVersion);
}
