#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "soritic/error.hpp"

namespace soritic {

/// Exact rational number, always reduced with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

inline int sign(const Rational& r) { return r.sign(); }

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  int c = a.compare(b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

// "3", "-2", "1/2"
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// Parses `[-]digits[/digits]`. Throws SyntaxError on anything else.
inline Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < text.size() && text[p] >= '0' && text[p] <= '9') ++p;
    if (p == start) throw SyntaxError("expected digits in rational", p);
    return Integer(std::string(text.substr(start, p - start)));
  };
  Integer num = digits(pos);
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = digits(pos);
    if (den == 0) throw SyntaxError("zero denominator", pos - 1);
  }
  if (pos != text.size()) throw SyntaxError("trailing characters in rational", pos);
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

inline Rational binomial_coefficient(unsigned n, unsigned k) {
  Integer c = 1;
  for (unsigned i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return Rational(c);
}

}  // namespace soritic
