#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "soritic/rational.hpp"

namespace soritic {

/// Strong Kleene truth values, ordered 0 < 1/2 < 1.
enum class TruthValue3 : std::uint8_t { False = 0, Half = 1, True = 2 };

inline constexpr std::array<TruthValue3, 3> kTruthValues3{TruthValue3::False, TruthValue3::Half, TruthValue3::True};

inline TruthValue3 k3_not(TruthValue3 p) { return static_cast<TruthValue3>(2 - static_cast<int>(p)); }
inline TruthValue3 k3_and(TruthValue3 p, TruthValue3 q) { return std::min(p, q); }
inline TruthValue3 k3_or(TruthValue3 p, TruthValue3 q) { return std::max(p, q); }
inline TruthValue3 k3_implies(TruthValue3 p, TruthValue3 q) { return k3_or(k3_not(p), q); }
inline TruthValue3 k3_iff(TruthValue3 p, TruthValue3 q) { return k3_and(k3_implies(p, q), k3_implies(q, p)); }

inline TruthValue3 k3_from_bool(bool b) { return b ? TruthValue3::True : TruthValue3::False; }

inline std::string to_string(TruthValue3 v) {
  switch (v) {
    case TruthValue3::False: return "0";
    case TruthValue3::Half: return "1/2";
    case TruthValue3::True: return "1";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, TruthValue3 v) { return os << to_string(v); }

/// Degree of truth in [0, 1].
class FuzzyDegree {
 public:
  FuzzyDegree() = default;
  explicit FuzzyDegree(Rational value) : value_(std::move(value)) {
    if (value_.sign() < 0 || compare(value_, unit()) > 0) throw std::domain_error("fuzzy degree outside [0,1]: " + soritic::to_string(value_));
  }
  static FuzzyDegree one() { return FuzzyDegree(Rational(1)); }
  static FuzzyDegree zero() { return FuzzyDegree(); }
  static FuzzyDegree from(TruthValue3 v) { return FuzzyDegree(Rational(static_cast<int>(v), 2)); }

  const Rational& value() const { return value_; }

  /// 1 - x; always in range, so skips the check.
  FuzzyDegree complement() const {
    FuzzyDegree r;
    r.value_ = 1 - value_;
    return r;
  }

  friend bool operator==(const FuzzyDegree&, const FuzzyDegree&) = default;
  friend std::strong_ordering operator<=>(const FuzzyDegree& a, const FuzzyDegree& b) {
    return compare(a.value_, b.value_);
  }

  friend std::ostream& operator<<(std::ostream& os, const FuzzyDegree& d) { return os << soritic::to_string(d.value_); }

 private:
  static const Rational& unit() {
    static const Rational one(1);
    return one;
  }

  Rational value_{0};
};

inline std::string to_string(const FuzzyDegree& d) { return to_string(d.value()); }

// Kleene-Zadeh connectives: 1 - x, min, max, max(1 - x, y).
inline FuzzyDegree fz_not(const FuzzyDegree& x) { return x.complement(); }
inline FuzzyDegree fz_and(FuzzyDegree x, FuzzyDegree y) { return y < x ? std::move(y) : std::move(x); }
inline FuzzyDegree fz_or(FuzzyDegree x, FuzzyDegree y) { return x < y ? std::move(y) : std::move(x); }
inline FuzzyDegree fz_implies(const FuzzyDegree& x, const FuzzyDegree& y) { return fz_or(fz_not(x), y); }
inline FuzzyDegree fz_iff(const FuzzyDegree& x, const FuzzyDegree& y) {
  return fz_and(fz_implies(x, y), fz_implies(y, x));
}

enum class SuperVerdict { Supertrue, Superfalse, Indeterminate };

inline std::string to_string(SuperVerdict v) {
  switch (v) {
    case SuperVerdict::Supertrue: return "Supertrue";
    case SuperVerdict::Superfalse: return "Superfalse";
    case SuperVerdict::Indeterminate: return "Indeterminate";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, SuperVerdict v) { return os << to_string(v); }

// Truth-value algebras used by the generic evaluator.

struct ClassicalAlgebra {
  using value_type = bool;
  static bool top() { return true; }
  static bool bottom() { return false; }
  static bool negate(bool p) { return !p; }
  static bool conj(bool p, bool q) { return p && q; }
  static bool disj(bool p, bool q) { return p || q; }
  static bool implies(bool p, bool q) { return !p || q; }
  static bool iff(bool p, bool q) { return p == q; }
};

struct KleeneAlgebra {
  using value_type = TruthValue3;
  static TruthValue3 top() { return TruthValue3::True; }
  static TruthValue3 bottom() { return TruthValue3::False; }
  static TruthValue3 negate(TruthValue3 p) { return k3_not(p); }
  static TruthValue3 conj(TruthValue3 p, TruthValue3 q) { return k3_and(p, q); }
  static TruthValue3 disj(TruthValue3 p, TruthValue3 q) { return k3_or(p, q); }
  static TruthValue3 implies(TruthValue3 p, TruthValue3 q) { return k3_implies(p, q); }
  static TruthValue3 iff(TruthValue3 p, TruthValue3 q) { return k3_iff(p, q); }
};

struct FuzzyAlgebra {
  using value_type = FuzzyDegree;
  static FuzzyDegree top() { return FuzzyDegree::one(); }
  static FuzzyDegree bottom() { return FuzzyDegree::zero(); }
  static FuzzyDegree negate(const FuzzyDegree& p) { return fz_not(p); }
  static FuzzyDegree conj(FuzzyDegree p, FuzzyDegree q) { return fz_and(std::move(p), std::move(q)); }
  static FuzzyDegree disj(FuzzyDegree p, FuzzyDegree q) { return fz_or(std::move(p), std::move(q)); }
  static FuzzyDegree implies(const FuzzyDegree& p, const FuzzyDegree& q) { return fz_implies(p, q); }
  static FuzzyDegree iff(const FuzzyDegree& p, const FuzzyDegree& q) { return fz_iff(p, q); }
};

}  // namespace soritic
