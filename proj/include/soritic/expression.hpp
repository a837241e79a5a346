#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "soritic/external_number.hpp"
#include "soritic/random.hpp"

namespace soritic {

/// Evaluates expressions to external numbers.
struct ExternalSemantics {
  using value_type = ExternalNumber;
  ExternalNumber leaf(const ExternalNumber& x) { return x; }
  static ExternalNumber add(const ExternalNumber& a, const ExternalNumber& b) { return a + b; }
  static ExternalNumber sub(const ExternalNumber& a, const ExternalNumber& b) { return a - b; }
  static ExternalNumber mul(const ExternalNumber& a, const ExternalNumber& b) { return a * b; }
  static ExternalNumber neg(const ExternalNumber& a) { return -a; }
  static std::optional<ExternalNumber> divide(const ExternalNumber& a, const ExternalNumber& b) {
    auto inv = b.is_exact() ? b.rep().exact_inverse() : std::nullopt;
    if (!inv) return std::nullopt;
    return a * ExternalNumber(*inv);
  }
};

/// Evaluates expressions on one sampled member of every literal.
struct MemberSemantics {
  using value_type = EpsSeries;
  Sampler* sampler;
  EpsSeries leaf(const ExternalNumber& x) { return sampler->member(x); }
  static EpsSeries add(const EpsSeries& a, const EpsSeries& b) { return a + b; }
  static EpsSeries sub(const EpsSeries& a, const EpsSeries& b) { return a - b; }
  static EpsSeries mul(const EpsSeries& a, const EpsSeries& b) { return a * b; }
  static EpsSeries neg(const EpsSeries& a) { return -a; }
  static std::optional<EpsSeries> divide(const EpsSeries& a, const EpsSeries& b) {
    auto inv = b.exact_inverse();
    if (!inv) return std::nullopt;
    return a * *inv;
  }
};

namespace detail {

// expr    := term (('+' | '-') term)*
// term    := unary (('*' | '/') unary)*
// unary   := '-' unary | primary
// primary := number | 'e' ['^' power] | 'L(' q ')' | 'o(' q ')' | '£' | 'osl' | '(' expr ')'
// power   := ['-'] digits | '(' rational ')'
template <class Semantics>
class ExpressionParser {
 public:
  using V = typename Semantics::value_type;

  ExpressionParser(std::string_view text, Semantics sem) : text_(text), sem_(std::move(sem)) {}

  V parse() {
    V v = expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("unexpected character", pos_);
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) throw SyntaxError("expected '" + std::string(token) + "'", pos_);
  }

  bool at_identifier(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    std::size_t end = pos_ + word.size();
    return end == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[end]));
  }

  V expr() {
    V v = term();
    for (;;) {
      if (accept("+"))
        v = Semantics::add(v, term());
      else if (accept("-"))
        v = Semantics::sub(v, term());
      else
        return v;
    }
  }

  V term() {
    V v = unary();
    for (;;) {
      if (accept("*")) {
        v = Semantics::mul(v, unary());
      } else if (skip_ws(), pos_ < text_.size() && text_[pos_] == '/') {
        std::size_t at = pos_++;
        auto q = Semantics::divide(v, unary());
        if (!q) throw SyntaxError("division only by exact nonzero monomials", at);
        v = std::move(*q);
      } else {
        return v;
      }
    }
  }

  V unary() {
    if (accept("-")) return Semantics::neg(unary());
    return primary();
  }

  Rational unsigned_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected number", pos_);
    return Rational(Integer(std::string(text_.substr(start, pos_ - start))));
  }

  Rational signed_rational() {
    bool neg = accept("-");
    Rational r = unsigned_integer();
    if (accept("/")) {
      std::size_t at = pos_;
      Rational d = unsigned_integer();
      if (d == 0) throw SyntaxError("zero denominator", at);
      r /= d;
    }
    return neg ? Rational(-r) : r;
  }

  Rational group_exponent() {
    expect("(");
    Rational q = signed_rational();
    expect(")");
    return q;
  }

  V primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    if (accept("(")) {
      V v = expr();
      expect(")");
      return v;
    }
    if (accept("\xC2\xA3")) return sem_.leaf(ExternalNumber::of_neutrix(Neutrix::limited()));  // £
    if (at_identifier("osl")) {
      pos_ += 3;
      return sem_.leaf(ExternalNumber::of_neutrix(Neutrix::infinitesimal()));
    }
    if (at_identifier("L")) {
      ++pos_;
      return sem_.leaf(ExternalNumber::of_neutrix(Neutrix::limited(group_exponent())));
    }
    if (at_identifier("o")) {
      ++pos_;
      return sem_.leaf(ExternalNumber::of_neutrix(Neutrix::infinitesimal(group_exponent())));
    }
    if (at_identifier("e")) {
      ++pos_;
      Rational q = 1;
      if (accept("^")) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '(')
          q = group_exponent();
        else
          q = accept("-") ? Rational(-unsigned_integer()) : unsigned_integer();
      }
      return sem_.leaf(ExternalNumber(EpsSeries::monomial(1, q)));
    }
    if (std::isdigit(static_cast<unsigned char>(text_[pos_])))
      return sem_.leaf(ExternalNumber(EpsSeries(unsigned_integer())));
    throw SyntaxError("unexpected character", pos_);
  }

  std::string_view text_;
  Semantics sem_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Evaluates `text` under `sem` (see ExternalSemantics, MemberSemantics).
template <class Semantics>
typename Semantics::value_type evaluate_expression(std::string_view text, Semantics sem) {
  return detail::ExpressionParser<Semantics>(text, std::move(sem)).parse();
}

/// Parses an external-number expression such as `(2 + osl) * (3 + L(1))`.
inline ExternalNumber parse_external(std::string_view text) { return evaluate_expression(text, ExternalSemantics{}); }

/// Parses a plain series such as `3 - 2*e^(1/2) + e^(-1)`.
inline EpsSeries parse_series(std::string_view text) {
  ExternalNumber x = parse_external(text);
  if (!x.is_exact()) throw SyntaxError("series must not contain a neutrix", 0);
  return x.rep();
}

struct MembershipCheck {
  bool ok = true;
  std::size_t samples = 0;
  std::optional<EpsSeries> counterexample;
};

/// Re-evaluates `text` on sampled members of its literals and checks that
/// every result lies in the computed external number `value`.
inline MembershipCheck check_members(std::string_view text, const ExternalNumber& value, std::uint64_t seed,
                                     std::size_t samples) {
  MembershipCheck r;
  Sampler sampler(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    EpsSeries x = evaluate_expression(text, MemberSemantics{&sampler});
    ++r.samples;
    if (!value.contains(x)) {
      r.ok = false;
      r.counterexample = x;
      break;
    }
  }
  return r;
}

}  // namespace soritic
