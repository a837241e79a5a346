#pragma once

#include <compare>
#include <initializer_list>
#include <ostream>
#include <string>

#include "soritic/eps_series.hpp"

namespace soritic {

enum class NeutrixKind {
  Lim,  ///< e^q * L  = { x : valuation(x) >= q }
  Osl,  ///< e^q * o  = { x : valuation(x) >  q }
};

/// A convex additive subgroup of the model: the zero group, or a scaled copy
/// of the limited numbers (Lim) or of the infinitesimals (Osl).
///
/// These are exactly the subgroups definable by a valuation bound, and they
/// are totally ordered by inclusion.
class Neutrix {
 public:
  /// The zero group.
  Neutrix() = default;

  static Neutrix zero() { return {}; }
  static Neutrix scaled(Rational exponent, NeutrixKind kind) {
    Neutrix n;
    n.zero_ = false;
    n.exponent_ = std::move(exponent);
    n.kind_ = kind;
    return n;
  }
  static Neutrix limited(Rational exponent = 0) { return scaled(std::move(exponent), NeutrixKind::Lim); }
  static Neutrix infinitesimal(Rational exponent = 0) { return scaled(std::move(exponent), NeutrixKind::Osl); }

  bool is_zero() const { return zero_; }
  const Rational& exponent() const { return exponent_; }
  NeutrixKind kind() const { return kind_; }

  bool contains_valuation(const Valuation& v) const {
    if (v.is_infinite()) return true;
    if (zero_) return false;
    return kind_ == NeutrixKind::Lim ? v.value() >= exponent_ : v.value() > exponent_;
  }

  bool contains(const EpsSeries& x) const { return contains_valuation(x.valuation()); }

  /// Drops the tail of `x` that lies inside this group.
  EpsSeries reduce(const EpsSeries& x) const {
    if (zero_) return x;
    return x.truncated(exponent_, kind_ == NeutrixKind::Osl);
  }

  friend bool operator==(const Neutrix& a, const Neutrix& b) {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    return a.exponent_ == b.exponent_ && a.kind_ == b.kind_;
  }

  /// Inclusion order: a < b iff a is a proper subset of b.
  friend std::strong_ordering operator<=>(const Neutrix& a, const Neutrix& b) {
    if (a.zero_ || b.zero_) return b.zero_ <=> a.zero_;
    if (a.exponent_ != b.exponent_)
      return a.exponent_ > b.exponent_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.kind_ == b.kind_) return std::strong_ordering::equal;
    return a.kind_ == NeutrixKind::Osl ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  bool subset_of(const Neutrix& other) const { return *this <= other; }

  /// `0`, `L(q)` or `o(q)`.
  std::string str() const {
    if (zero_) return "0";
    return std::string(kind_ == NeutrixKind::Lim ? "L(" : "o(") + to_string(exponent_) + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const Neutrix& n) { return os << n.str(); }

 private:
  bool zero_ = true;
  Rational exponent_;
  NeutrixKind kind_ = NeutrixKind::Lim;
};

inline Neutrix n_max(const Neutrix& a, const Neutrix& b) { return a < b ? b : a; }

inline Neutrix n_max(std::initializer_list<Neutrix> ns) {
  Neutrix m;
  for (const auto& n : ns) m = n_max(m, n);
  return m;
}

/// a * A, again a neutrix.
inline Neutrix n_scale(const EpsSeries& a, const Neutrix& group) {
  if (a.is_zero() || group.is_zero()) return Neutrix::zero();
  return Neutrix::scaled(group.exponent() + a.valuation().value(), group.kind());
}

/// Group product A * B.
inline Neutrix n_mul(const Neutrix& a, const Neutrix& b) {
  if (a.is_zero() || b.is_zero()) return Neutrix::zero();
  NeutrixKind kind =
      a.kind() == NeutrixKind::Lim && b.kind() == NeutrixKind::Lim ? NeutrixKind::Lim : NeutrixKind::Osl;
  return Neutrix::scaled(a.exponent() + b.exponent(), kind);
}

}  // namespace soritic
