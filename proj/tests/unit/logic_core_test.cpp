#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>

#include "formula_gen.hpp"
#include "soritic/soritic.hpp"

using namespace soritic;
using T = TruthValue3;

namespace {

// Strong Kleene connectives on the numbers 0, 1/2, 1 (scaled by 2).
int num(T v) { return v == T::False ? 0 : v == T::Half ? 1 : 2; }
T val(int n) { return n == 0 ? T::False : n == 1 ? T::Half : T::True; }
T o_not(T p) { return val(2 - num(p)); }
T o_and(T p, T q) { return val(std::min(num(p), num(q))); }
T o_or(T p, T q) { return val(std::max(num(p), num(q))); }
T o_implies(T p, T q) { return o_or(o_not(p), q); }
T o_iff(T p, T q) { return o_and(o_implies(p, q), o_implies(q, p)); }

Model<T> props(std::map<std::string, T, std::less<>> m) {
  Model<T> model;
  model.props = std::move(m);
  return model;
}

}  // namespace

TEST(Kleene, ConnectivesMatchMinMaxDefinition) {
  for (T p : kTruthValues3) {
    EXPECT_EQ(k3_not(p), o_not(p));
    for (T q : kTruthValues3) {
      EXPECT_EQ(k3_and(p, q), o_and(p, q));
      EXPECT_EQ(k3_or(p, q), o_or(p, q));
      EXPECT_EQ(k3_implies(p, q), o_implies(p, q));
      EXPECT_EQ(k3_iff(p, q), o_iff(p, q));
    }
  }
}

TEST(Kleene, PublishedRows) {
  // Row (1, 1/2): or 1, and 1/2, implies 1/2, iff 1/2.
  EXPECT_EQ(k3_or(T::True, T::Half), T::True);
  EXPECT_EQ(k3_and(T::True, T::Half), T::Half);
  EXPECT_EQ(k3_implies(T::True, T::Half), T::Half);
  EXPECT_EQ(k3_iff(T::True, T::Half), T::Half);
  for (auto r : {k3_or(T::Half, T::Half), k3_and(T::Half, T::Half), k3_implies(T::Half, T::Half),
                 k3_iff(T::Half, T::Half)})
    EXPECT_EQ(r, T::Half);
  EXPECT_EQ(k3_not(T::Half), T::Half);
  EXPECT_EQ(k3_implies(T::False, T::Half), T::True);
  EXPECT_EQ(k3_iff(T::False, T::False), T::True);
}

TEST(Kleene, TablesTextRowOrder) {
  std::string text = kleene_tables_text();
  EXPECT_NE(text.find("1     1/2   1     1/2   1/2   1/2\n"), std::string::npos);
  EXPECT_NE(text.find("1/2   1/2\n"), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2 + 3 + 1 + 9);
}

TEST(Formula, ParsesExamples) {
  EXPECT_EQ(parse_formula("S(1) -> S(2)"), fx::implies(fx::S(1), fx::S(2)));
  EXPECT_EQ(parse_formula("forall n in D. S(n) -> S(n+1)"),
            fx::forall("n", Domain::named("D"), fx::implies(fx::S("n"), fx::S("n", 1))));
  EXPECT_EQ(parse_formula("exists k in 1..9. S(k) & ~S(k+1)"),
            fx::exists("k", Domain::range(1, 9), fx::land(fx::S("k"), fx::lnot(fx::S("k", 1)))));
  EXPECT_EQ(parse_formula("p -> q -> r"), fx::implies(fx::var("p"), fx::implies(fx::var("q"), fx::var("r"))));
  EXPECT_EQ(parse_formula("p | q & r"), fx::lor(fx::var("p"), fx::land(fx::var("q"), fx::var("r"))));
}

TEST(Formula, SyntaxErrors) {
  try {
    parse_formula("S(1");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
  EXPECT_THROW(parse_formula("forall n. S(n)"), SyntaxError);
  EXPECT_THROW(parse_formula("p &"), SyntaxError);
  EXPECT_THROW(parse_formula("p q"), SyntaxError);
}

TEST(Formula, PrintParseRoundTrip) {
  gen::FormulaGen g(31, 4);
  for (int i = 0; i < 2000; ++i) {
    Formula f = g.indexed(5);
    std::string text = to_string(f);
    EXPECT_EQ(parse_formula(text), f) << text;
    EXPECT_EQ(to_string(parse_formula(text)), text);
  }
}

TEST(EvalK3, Examples) {
  EXPECT_EQ(eval_k3(parse_formula("p -> q"), props({{"p", T::True}, {"q", T::Half}})), T::Half);
  EXPECT_EQ(eval_k3(parse_formula("p | q"), props({{"p", T::Half}, {"q", T::False}})), T::Half);
  EXPECT_EQ(eval_k3(parse_formula("p | ~p"), props({{"p", T::Half}})), T::Half);
  EXPECT_THROW(eval_k3(parse_formula("p & q"), props({{"p", T::True}})), UnboundAtom);
}

TEST(EvalK3, TautologyAndQuasiTautology) {
  Formula lem = parse_formula("p | ~p");
  EXPECT_FALSE(is_tautology_k3(lem));
  EXPECT_TRUE(is_quasi_tautology_k3(lem));
  EXPECT_TRUE(is_quasi_tautology_k3(parse_formula("p -> p")));
  EXPECT_FALSE(is_quasi_tautology_k3(parse_formula("p & ~p")));
  EXPECT_TRUE(is_tautology_classical(lem));
  // No formula without constants is a K3 tautology: all 1/2 gives 1/2.
  gen::FormulaGen g(32, 3);
  for (int i = 0; i < 300; ++i) EXPECT_FALSE(is_tautology_k3(g.formula(4)));
}

TEST(EvalK3, LetterBound) {
  std::string text = "p0";
  for (int i = 1; i < 13; ++i) text += " | p" + std::to_string(i);
  EXPECT_THROW(is_quasi_tautology_k3(parse_formula(text)), BoundExceeded);
  EXPECT_TRUE(is_quasi_tautology_k3(parse_formula("p0 | ~p0 | p1"), {}, 12));
}

TEST(EvalK3, ExpandsQuantifiedAtoms) {
  Formula f = parse_formula("forall n in 1..3. S(n) | ~S(n)");
  EXPECT_EQ(letters_of(f).size(), 3u);
  EXPECT_TRUE(is_quasi_tautology_k3(f));
  EXPECT_FALSE(is_tautology_k3(f));
}

TEST(EvalFuzzy, LinearMembership) {
  auto m = [](long long n) -> std::optional<FuzzyDegree> { return FuzzyDegree(Rational(100 - n, 99)); };
  EXPECT_EQ(eval_fuzzy(parse_formula("S(1)"), m).value(), 1);
  EXPECT_EQ(eval_fuzzy(parse_formula("S(50)"), m).value(), Rational(50, 99));
  EXPECT_EQ(eval_fuzzy(parse_formula("S(1) -> S(2)"), m).value(), Rational(98, 99));
  EXPECT_THROW(FuzzyDegree(Rational(3, 2)), std::domain_error);
}

TEST(EvalSuper, Examples) {
  PrecisificationFamily fam{{2, 3}};
  EXPECT_EQ(eval_super(fx::S(1), fam), SuperVerdict::Supertrue);
  EXPECT_EQ(eval_super(fx::S(2), fam), SuperVerdict::Indeterminate);
  EXPECT_EQ(eval_super(parse_formula("S(2) | ~S(2)"), fam), SuperVerdict::Supertrue);
  EXPECT_EQ(eval_super(parse_formula("S(2) | S(2)"), fam), SuperVerdict::Indeterminate);
  EXPECT_THROW(eval_super(fx::S(1), PrecisificationFamily{}), EmptyFamily);
}

TEST(EvalSuper, NotTruthFunctional) {
  // Both disjuncts of each pair are Indeterminate; the disjunctions differ.
  PrecisificationFamily fam{{2, 3}};
  Formula a = fx::S(2), na = fx::lnot(fx::S(2));
  EXPECT_EQ(eval_super(a, fam), SuperVerdict::Indeterminate);
  EXPECT_EQ(eval_super(na, fam), SuperVerdict::Indeterminate);
  EXPECT_NE(eval_super(fx::lor(a, na), fam), eval_super(fx::lor(a, a), fam));
}

TEST(EvalSuper, SharpBoundary) {
  PrecisificationFamily fam{{2, 3, 4, 5, 6}};
  EXPECT_EQ(eval_super(parse_formula("exists n in 1..9. S(n) & ~S(n+1)"), fam), SuperVerdict::Supertrue);
  for (long long n = 1; n <= 9; ++n)
    EXPECT_NE(eval_super(fx::land(fx::S(n), fx::lnot(fx::S(n + 1))), fam), SuperVerdict::Supertrue) << n;
}

TEST(EvalSuper, ClassicalTautologiesAreSupertrue) {
  gen::FormulaGen g(33, 3);
  DomainTable dom{{"R", {1, 3}}};
  int checked = 0;
  for (int i = 0; i < 3000 && checked < 100; ++i) {
    Formula f = g.indexed(4);
    if (!letters_of(f, dom).empty() && letters_of(f, dom).size() <= 8 && is_tautology_classical(f, dom)) {
      // Propositional variables are not touched by cutoffs; close them first.
      bool has_props = false;
      for (const auto& l : letters_of(f, dom)) has_props = has_props || !l.index;
      if (has_props) continue;
      ++checked;
      EXPECT_EQ(eval_super(f, PrecisificationFamily{{1, 4, 7, 12}}, dom), SuperVerdict::Supertrue) << f;
    }
  }
  EXPECT_GT(checked, 5);
}

TEST(EvalClassical, Examples) {
  EXPECT_TRUE(eval_classical(fx::S(4), 5));
  EXPECT_TRUE(eval_classical(parse_formula("S(4) & ~S(5)"), 5));
  EXPECT_FALSE(eval_classical(parse_formula("forall n in 1..9. S(n) -> S(n+1)"), 5));
}

TEST(Conservativity, KleeneOnBooleansIsClassicalAndFuzzyOnThreeValuesIsKleene) {
  gen::FormulaGen g(34, 4);
  const std::array<std::string, 4> names{"p0", "p1", "p2", "p3"};
  for (int i = 0; i < 300; ++i) {
    Formula f = g.formula(5);
    for (int code = 0; code < 81; ++code) {
      Model<T> mk;
      Model<FuzzyDegree> mf;
      Model<bool> mb;
      bool boolean = true;
      for (int v = 0, c = code; v < 4; ++v, c /= 3) {
        T t = kTruthValues3[c % 3];
        mk.props.emplace(names[v], t);
        mf.props.emplace(names[v], FuzzyDegree::from(t));
        mb.props.emplace(names[v], t == T::True);
        boolean = boolean && t != T::Half;
      }
      T k = eval_k3(f, mk);
      EXPECT_EQ(evaluate<FuzzyAlgebra>(f, mf), FuzzyDegree::from(k));
      if (boolean) EXPECT_EQ(k, k3_from_bool(eval_bool(f, mb)));
    }
  }
}
