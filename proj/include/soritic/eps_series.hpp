#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "soritic/rational.hpp"

namespace soritic {

/// Least exponent of a series, or +infinity for the zero series.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(); }
  Valuation(Rational value) : value_(std::move(value)) {}

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const { return *value_; }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
    if (*a.value_ < *b.value_) return std::strong_ordering::less;
    if (*a.value_ > *b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Valuation& v) {
    return os << (v.is_infinite() ? std::string("+inf") : to_string(v.value()));
  }

 private:
  Valuation() = default;
  std::optional<Rational> value_;
};

struct Term {
  Rational exponent;
  Rational coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Finite formal sum  sum_i c_i * e^(q_i)  in a positive infinitesimal e.
///
/// Terms are kept with strictly increasing exponents and nonzero coefficients,
/// so structural equality is value equality. Lower exponents dominate: e^(-1)
/// is unlimited, e^0 appreciable, e^(1/2) infinitesimal.
class EpsSeries {
 public:
  EpsSeries() = default;
  EpsSeries(long long constant) : EpsSeries(Rational(constant)) {}
  EpsSeries(const Rational& constant) {
    if (constant != 0) terms_.push_back({Rational(0), constant});
  }

  static EpsSeries monomial(const Rational& coefficient, const Rational& exponent) {
    EpsSeries s;
    if (coefficient != 0) s.terms_.push_back({exponent, coefficient});
    return s;
  }
  static EpsSeries epsilon() { return monomial(1, 1); }
  static EpsSeries omega() { return monomial(1, -1); }

  /// Builds from arbitrary terms: sorts, merges equal exponents, drops zeros.
  static EpsSeries from_terms(std::vector<Term> terms) {
    std::map<Rational, Rational> merged;
    for (auto& t : terms) merged[t.exponent] += t.coefficient;
    EpsSeries s;
    for (auto& [e, c] : merged)
      if (c != 0) s.terms_.push_back({e, c});
    return s;
  }

  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  Valuation valuation() const {
    if (terms_.empty()) return Valuation::infinite();
    return Valuation(terms_.front().exponent);
  }

  /// Coefficient at the least exponent; zero for the zero series.
  Rational leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.front().coefficient;
  }

  int sign() const { return terms_.empty() ? 0 : terms_.front().coefficient.sign(); }

  /// Keeps terms with exponent < bound, or <= bound when `inclusive`.
  EpsSeries truncated(const Rational& bound, bool inclusive) const {
    EpsSeries s;
    for (const auto& t : terms_) {
      if (t.exponent < bound || (inclusive && t.exponent == bound))
        s.terms_.push_back(t);
      else
        break;
    }
    return s;
  }

  /// Exact inverse, available only for monomials.
  std::optional<EpsSeries> exact_inverse() const {
    if (!is_monomial()) return std::nullopt;
    return monomial(1 / terms_.front().coefficient, -terms_.front().exponent);
  }

  /// Terms of 1/x with exponent < bound (<= bound when `inclusive`).
  ///
  /// Newton iteration y <- y(2 - xy), truncated each round; the residual
  /// 1 - xy squares per step so the loop ends once (1/x)(1 - xy) lies past
  /// the bound. Requires x != 0.
  EpsSeries inverse_truncated(const Rational& bound, bool inclusive) const {
    if (is_zero()) throw std::domain_error("inverse of the zero series");
    const Rational v = terms_.front().exponent;
    EpsSeries y = monomial(1 / terms_.front().coefficient, -v).truncated(bound, inclusive);
    for (;;) {
      EpsSeries residual = EpsSeries(1) - *this * y;
      if (residual.is_zero()) return y;
      Rational err = residual.valuation().value() - v;
      if (err > bound || (!inclusive && err == bound)) return y;
      y = (y + y * residual).truncated(bound, inclusive);
    }
  }

  EpsSeries operator-() const {
    EpsSeries s = *this;
    for (auto& t : s.terms_) t.coefficient = -t.coefficient;
    return s;
  }

  friend EpsSeries operator+(const EpsSeries& x, const EpsSeries& y) {
    EpsSeries s;
    s.terms_.reserve(x.terms_.size() + y.terms_.size());
    auto i = x.terms_.begin(), j = y.terms_.begin();
    while (i != x.terms_.end() || j != y.terms_.end()) {
      if (j == y.terms_.end() || (i != x.terms_.end() && i->exponent < j->exponent)) {
        s.terms_.push_back(*i++);
      } else if (i == x.terms_.end() || j->exponent < i->exponent) {
        s.terms_.push_back(*j++);
      } else {
        Rational c = i->coefficient + j->coefficient;
        if (c != 0) s.terms_.push_back({i->exponent, std::move(c)});
        ++i;
        ++j;
      }
    }
    return s;
  }

  friend EpsSeries operator-(const EpsSeries& x, const EpsSeries& y) { return x + (-y); }

  friend EpsSeries operator*(const EpsSeries& x, const EpsSeries& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::map<Rational, Rational> acc;
    for (const auto& a : x.terms_)
      for (const auto& b : y.terms_) acc[a.exponent + b.exponent] += a.coefficient * b.coefficient;
    EpsSeries s;
    s.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
      if (c != 0) s.terms_.push_back({e, std::move(c)});
    return s;
  }

  EpsSeries& operator+=(const EpsSeries& o) { return *this = *this + o; }
  EpsSeries& operator-=(const EpsSeries& o) { return *this = *this - o; }
  EpsSeries& operator*=(const EpsSeries& o) { return *this = *this * o; }

  friend bool operator==(const EpsSeries&, const EpsSeries&) = default;

  /// Total order of the model: sign of the leading coefficient of x - y.
  friend std::strong_ordering operator<=>(const EpsSeries& x, const EpsSeries& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// Canonical text, ascending exponents: `e^(-1) + 3 - 2*e^(1/2)`.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      Rational mag = t.coefficient.sign() < 0 ? Rational(-t.coefficient) : t.coefficient;
      if (first)
        out += t.coefficient.sign() < 0 ? "-" : "";
      else
        out += t.coefficient.sign() < 0 ? " - " : " + ";
      first = false;
      if (t.exponent == 0) {
        out += to_string(mag);
        continue;
      }
      if (mag != 1) out += to_string(mag) + "*";
      out += "e";
      if (t.exponent == 1) continue;
      if (is_integer(t.exponent) && t.exponent > 0)
        out += "^" + to_string(t.exponent);
      else
        out += "^(" + to_string(t.exponent) + ")";
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const EpsSeries& s) { return os << s.str(); }

 private:
  std::vector<Term> terms_;
};

enum class Ordering { Less, Equal, Greater };

inline Ordering series_compare(const EpsSeries& x, const EpsSeries& y) {
  auto c = x <=> y;
  return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
}

inline EpsSeries pow(const EpsSeries& x, unsigned n) {
  EpsSeries r(1);
  for (unsigned i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace soritic
