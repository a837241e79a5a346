#include <gtest/gtest.h>

#include "oracle.hpp"
#include "soritic/soritic.hpp"

using namespace soritic;

namespace {

EpsSeries S(std::string_view text) { return parse_series(text); }

}  // namespace

TEST(Rational, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_EQ(denominator_of(parse_rational("3/6")), 2);
  EXPECT_THROW(parse_rational("3/-6"), SyntaxError);
  EXPECT_THROW(parse_rational("1/0"), SyntaxError);
  EXPECT_THROW(parse_rational("x"), SyntaxError);
}

TEST(Rational, BinomialCoefficients) {
  EXPECT_EQ(binomial_coefficient(8, 0), 1);
  EXPECT_EQ(binomial_coefficient(8, 4), 70);
  EXPECT_EQ(binomial_coefficient(5, 2), 10);
}

TEST(EpsSeries, AddCancelsAndMerges) {
  EXPECT_EQ(S("1 + e") + S("2 - e"), EpsSeries(3));
  EXPECT_EQ(S("e^(-1) + 3") + EpsSeries(), S("e^(-1) + 3"));
  EpsSeries x = EpsSeries::omega() + EpsSeries::epsilon();
  ASSERT_EQ(x.terms().size(), 2u);
  EXPECT_EQ(x.terms()[0], (Term{-1, 1}));
  EXPECT_EQ(x.terms()[1], (Term{1, 1}));
}

TEST(EpsSeries, Multiplies) {
  EXPECT_EQ(EpsSeries::omega() * EpsSeries::epsilon(), EpsSeries(1));
  EXPECT_EQ(S("1 + e") * S("1 - e"), S("1 - e^2"));
  EXPECT_TRUE((S("3 + e^(1/2)") * EpsSeries()).is_zero());
}

TEST(EpsSeries, CompareByLeadingTerm) {
  EXPECT_EQ(series_compare(EpsSeries::omega(), EpsSeries(1000000)), Ordering::Greater);
  EXPECT_EQ(series_compare(S("2 - e"), S("2 - e")), Ordering::Equal);
  EXPECT_EQ(series_compare(EpsSeries::epsilon(), EpsSeries()), Ordering::Greater);
  EXPECT_EQ(series_compare(S("1 - e^3"), EpsSeries(1)), Ordering::Less);
  EXPECT_LT(S("-e^(-2)"), S("-1000*e^(-1)"));
}

TEST(EpsSeries, Valuation) {
  EXPECT_EQ(S("e^(-1) + 3").valuation(), Valuation(-1));
  EXPECT_TRUE(EpsSeries().valuation().is_infinite());
  EXPECT_EQ(S("e^(1/2)").valuation(), Valuation(Rational(1, 2)));
  EXPECT_GT(Valuation::infinite(), Valuation(100));
  EXPECT_LT(Valuation(100), Valuation::infinite());
}

TEST(EpsSeries, CanonicalText) {
  EXPECT_EQ(S("3 - 2*e^(1/2) + e^(-1)").str(), "e^(-1) + 3 - 2*e^(1/2)");
  EXPECT_EQ(S("e*e").str(), "e^2");
  EXPECT_EQ(S("-e").str(), "-e");
  EXPECT_EQ(EpsSeries().str(), "0");
  EXPECT_EQ(S("1/2*e^(-1)").str(), "1/2*e^(-1)");
}

TEST(EpsSeries, TruncatedInverse) {
  EpsSeries x = S("1 + e");
  // 1/(1+e) = 1 - e + e^2 - e^3 + ...
  EXPECT_EQ(x.inverse_truncated(3, false), S("1 - e + e^2"));
  EXPECT_EQ(x.inverse_truncated(3, true), S("1 - e + e^2 - e^3"));
  EpsSeries y = S("e^(-1) + 2");
  EpsSeries w = y.inverse_truncated(3, false);
  // The error in w starts at e^3, so y*w - 1 starts at e^2.
  EXPECT_GE((y * w - EpsSeries(1)).valuation(), Valuation(2));
  EXPECT_EQ((y * w - EpsSeries(1)).truncated(2, false), EpsSeries());
}

TEST(EpsSeries, RingOperationsAgreeWithExactEvaluation) {
  oracle::Draw d(7);
  for (int i = 0; i < 500; ++i) {
    EpsSeries x = d.series(), y = d.series();
    for (long long k : {6LL, 12LL}) {
      EXPECT_EQ(oracle::value_at(x + y, k), oracle::value_at(x, k) + oracle::value_at(y, k));
      EXPECT_EQ(oracle::value_at(x * y, k), oracle::value_at(x, k) * oracle::value_at(y, k));
      EXPECT_EQ(oracle::value_at(-x, k), -oracle::value_at(x, k));
    }
  }
}

TEST(EpsSeries, OrderAgreesWithNumericEvaluation) {
  oracle::Draw d(8);
  for (int i = 0; i < 300; ++i) {
    EpsSeries x = d.series(), y = d.series();
    // Small e makes the leading term of x - y decide the sign.
    Rational diff = oracle::value_at(x, 210) - oracle::value_at(y, 210);
    Ordering want = diff < 0 ? Ordering::Less : diff > 0 ? Ordering::Greater : Ordering::Equal;
    EXPECT_EQ(series_compare(x, y), want) << x << " vs " << y;
  }
}

TEST(EpsSeries, OrderIsCompatibleWithAddition) {
  oracle::Draw d(9);
  for (int i = 0; i < 300; ++i) {
    EpsSeries x = d.series(), y = d.series(), z = d.series();
    if (x < y) EXPECT_LT(x + z, y + z);
    if (x < y && EpsSeries() < z) EXPECT_LT(x * z, y * z);
  }
}
