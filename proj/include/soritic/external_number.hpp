#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "soritic/neutrix.hpp"

namespace soritic {

/// The external set  rep + neutrix.
///
/// Always canonical: no term of `rep` lies in `neutrix`, so two values denote
/// the same set exactly when their fields are equal.
class ExternalNumber {
 public:
  ExternalNumber() = default;
  ExternalNumber(long long constant) : rep_(constant) {}
  ExternalNumber(EpsSeries rep) : rep_(std::move(rep)) {}
  ExternalNumber(const EpsSeries& rep, Neutrix neutrix)
      : rep_(neutrix.reduce(rep)), neutrix_(std::move(neutrix)) {}

  static ExternalNumber of_neutrix(Neutrix n) { return ExternalNumber(EpsSeries{}, std::move(n)); }

  const EpsSeries& rep() const { return rep_; }
  const Neutrix& neutrix() const { return neutrix_; }

  /// True when the set is a neutrix (representative absorbed to zero).
  bool is_neutrix() const { return rep_.is_zero(); }
  bool is_exact() const { return neutrix_.is_zero(); }
  bool is_zero() const { return rep_.is_zero() && neutrix_.is_zero(); }

  bool contains(const EpsSeries& x) const { return neutrix_.contains(x - rep_); }

  friend bool operator==(const ExternalNumber&, const ExternalNumber&) = default;

  /// `rep + o(q)`, `L(q)`, or plain series text.
  std::string str() const {
    if (neutrix_.is_zero()) return rep_.str();
    if (rep_.is_zero()) return neutrix_.str();
    return rep_.str() + " + " + neutrix_.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const ExternalNumber& x) { return os << x.str(); }

 private:
  EpsSeries rep_;
  Neutrix neutrix_;
};

inline ExternalNumber canonicalize(const EpsSeries& rep, const Neutrix& n) { return {rep, n}; }

inline ExternalNumber operator+(const ExternalNumber& a, const ExternalNumber& b) {
  return {a.rep() + b.rep(), n_max(a.neutrix(), b.neutrix())};
}

inline ExternalNumber operator-(const ExternalNumber& a) { return {-a.rep(), a.neutrix()}; }

inline ExternalNumber operator-(const ExternalNumber& a, const ExternalNumber& b) { return a + (-b); }

inline ExternalNumber operator*(const ExternalNumber& a, const ExternalNumber& b) {
  return {a.rep() * b.rep(),
          n_max({n_scale(a.rep(), b.neutrix()), n_scale(b.rep(), a.neutrix()),
                 n_mul(a.neutrix(), b.neutrix())})};
}

inline ExternalNumber pow(const ExternalNumber& a, unsigned n) {
  ExternalNumber r(1);
  for (unsigned i = 0; i < n; ++i) r = r * a;
  return r;
}

// --- classification -------------------------------------------------------

enum class MagnitudeClass { Zeroish, Infinitesimal, Appreciable, Unlimited, NeutrixOnly };

struct Classification {
  MagnitudeClass magnitude;
  std::optional<NeutrixKind> kind;  ///< set for NeutrixOnly
  bool limited;                     ///< every member is limited
  bool infinitesimal;               ///< every member is infinitesimal
};

inline bool is_limited(const ExternalNumber& x) {
  return x.rep().valuation() >= Valuation(0) && x.neutrix().subset_of(Neutrix::limited());
}

inline bool is_infinitesimal(const ExternalNumber& x) {
  return x.rep().valuation() > Valuation(0) && x.neutrix().subset_of(Neutrix::infinitesimal());
}

/// Order-of-magnitude class shared by every member of the set.
///
/// A nonzero canonical representative fixes the valuation of every member,
/// so only pure neutrices can mix classes; those report NeutrixOnly.
inline Classification classify(const ExternalNumber& x) {
  Classification c{MagnitudeClass::Zeroish, std::nullopt, is_limited(x), is_infinitesimal(x)};
  if (x.rep().is_zero()) {
    if (!x.neutrix().is_zero()) {
      c.magnitude = MagnitudeClass::NeutrixOnly;
      c.kind = x.neutrix().kind();
    }
    return c;
  }
  const Rational& v = x.rep().valuation().value();
  c.magnitude = v < 0 ? MagnitudeClass::Unlimited : v == 0 ? MagnitudeClass::Appreciable : MagnitudeClass::Infinitesimal;
  return c;
}

inline std::string to_string(MagnitudeClass m) {
  switch (m) {
    case MagnitudeClass::Zeroish: return "Zero";
    case MagnitudeClass::Infinitesimal: return "Infinitesimal";
    case MagnitudeClass::Appreciable: return "Appreciable";
    case MagnitudeClass::Unlimited: return "Unlimited";
    case MagnitudeClass::NeutrixOnly: return "NeutrixOnly";
  }
  return "?";
}

inline std::string to_string(const Classification& c) {
  if (c.magnitude != MagnitudeClass::NeutrixOnly) return to_string(c.magnitude);
  return std::string("NeutrixOnly(") + (*c.kind == NeutrixKind::Lim ? "Lim" : "Osl") + ")";
}

// --- relations ------------------------------------------------------------

enum class SetRelation { Equal, ProperSub, ProperSup, DisjointLess, DisjointGreater };

inline std::string to_string(SetRelation r) {
  switch (r) {
    case SetRelation::Equal: return "Equal";
    case SetRelation::ProperSub: return "ProperSub";
    case SetRelation::ProperSup: return "ProperSup";
    case SetRelation::DisjointLess: return "DisjointLess";
    case SetRelation::DisjointGreater: return "DisjointGreater";
  }
  return "?";
}

/// How the set `a` sits relative to the set `b`.
///
/// Two external numbers either are disjoint (and then one lies wholly below
/// the other) or one contains the other.
inline SetRelation relate(const ExternalNumber& a, const ExternalNumber& b) {
  EpsSeries gap = b.rep() - a.rep();
  if (!n_max(a.neutrix(), b.neutrix()).contains(gap))
    return gap.sign() > 0 ? SetRelation::DisjointLess : SetRelation::DisjointGreater;
  if (a == b) return SetRelation::Equal;
  return a.neutrix() < b.neutrix() ? SetRelation::ProperSub : SetRelation::ProperSup;
}

/// Every member of `a` is below every member of `b`. Overlapping sets are
/// neither less nor greater.
inline bool definitely_less(const ExternalNumber& a, const ExternalNumber& b) {
  return relate(a, b) == SetRelation::DisjointLess;
}

inline bool infinitely_close(const EpsSeries& x, const EpsSeries& y) {
  return Neutrix::infinitesimal().contains(x - y);
}

// --- algebraic checks -----------------------------------------------------

struct LawCheck {
  bool holds;
  ExternalNumber lhs;
  ExternalNumber rhs;
};

/// a(b + c) against ab + ac.
inline LawCheck distributivity_holds(const ExternalNumber& a, const ExternalNumber& b, const ExternalNumber& c) {
  ExternalNumber lhs = a * (b + c);
  ExternalNumber rhs = a * b + a * c;
  return {lhs == rhs, lhs, rhs};
}

inline constexpr unsigned kDefaultBinomialBound = 8;

/// (a + b)^n by repeated products against sum_k C(n,k) a^k b^(n-k).
/// True when the leading terms of the representatives cancel in a + b.
inline bool sum_cancels(const ExternalNumber& a, const ExternalNumber& b) {
  const EpsSeries &x = a.rep(), &y = b.rep();
  if (x.is_zero() || y.is_zero()) return false;
  return (x + y).valuation() > std::min(x.valuation(), y.valuation());
}

inline LawCheck binomial_check(const ExternalNumber& a, const ExternalNumber& b, unsigned n,
                               unsigned bound = kDefaultBinomialBound) {
  if (n > bound)
    throw BoundExceeded("binomial exponent " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  ExternalNumber lhs = pow(a + b, n);
  std::vector<ExternalNumber> a_pow{ExternalNumber(1)}, b_pow{ExternalNumber(1)};
  for (unsigned k = 1; k <= n; ++k) {
    a_pow.push_back(a_pow.back() * a);
    b_pow.push_back(b_pow.back() * b);
  }
  ExternalNumber rhs;
  for (unsigned k = 0; k <= n; ++k)
    rhs = rhs + ExternalNumber(EpsSeries(binomial_coefficient(n, k))) * a_pow[k] * b_pow[n - k];
  return {lhs == rhs, lhs, rhs};
}

/// A witness b with a*b*a == a, for a not reduced to a neutrix.
///
/// Takes b = 1/rep + neutrix/rep^2 with 1/rep expanded by Newton iteration
/// and cut where that neutrix absorbs it. Returns nullopt when the model
/// cannot hold the witness: an exact value whose representative is not a
/// monomial has an inverse with infinite support.
inline std::optional<ExternalNumber> multiplicative_witness(const ExternalNumber& a) {
  if (a.is_neutrix()) return std::nullopt;
  if (a.is_exact()) {
    auto inv = a.rep().exact_inverse();
    if (!inv) return std::nullopt;
    return ExternalNumber(*inv);
  }
  const Rational v = a.rep().valuation().value();
  Neutrix error = Neutrix::scaled(a.neutrix().exponent() - 2 * v, a.neutrix().kind());
  EpsSeries inv = a.rep().inverse_truncated(error.exponent(), error.kind() == NeutrixKind::Osl);
  return ExternalNumber(inv, error);
}

/// Default order for checking an inverse that the model cannot hold exactly.
inline constexpr int kDefaultInverseOrder = 16;

struct RegularityCheck {
  bool holds = false;
  bool exact = false;  ///< witness held exactly; otherwise checked to `order`
  std::optional<ExternalNumber> witness;
  EpsSeries residual;  ///< a*b*a - a for the truncated witness
};

/// Checks a*b*a == a. When the witness needs infinite support, takes 1/rep
/// cut after `order` further powers of e past its leading term and requires
/// a*b*a - a to start at or beyond order + val(a).
inline RegularityCheck regularity_check(const ExternalNumber& a, int order = kDefaultInverseOrder) {
  RegularityCheck r;
  if (a.is_neutrix()) return r;
  if (auto w = multiplicative_witness(a)) {
    r.exact = true;
    r.witness = w;
    r.holds = a * *w * a == a;
    return r;
  }
  const Rational v = a.rep().valuation().value();
  EpsSeries inv = a.rep().inverse_truncated(order - v, false);
  r.witness = ExternalNumber(inv);
  r.residual = a.rep() * inv * a.rep() - a.rep();
  r.holds = r.residual.valuation() >= Valuation(order + v);
  return r;
}

}  // namespace soritic
