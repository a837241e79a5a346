#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "soritic/external_number.hpp"
#include "soritic/random.hpp"
#include "soritic/version.hpp"

namespace soritic {

/// Operations a law suite runs against. Swap in another policy to check a
/// modified arithmetic.
struct StandardArithmetic {
  ExternalNumber add(const ExternalNumber& a, const ExternalNumber& b) const { return a + b; }
  ExternalNumber mul(const ExternalNumber& a, const ExternalNumber& b) const { return a * b; }
  ExternalNumber neg(const ExternalNumber& a) const { return -a; }
};

struct LawResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::vector<ExternalNumber> counterexample;  ///< minimized
  std::string detail;
  bool ok() const { return passed == trials; }
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<LawResult> laws;
  std::size_t distributivity_failures = 0;
  std::vector<ExternalNumber> distributivity_example;
  bool ok() const {
    for (const auto& l : laws)
      if (!l.ok()) return false;
    return true;
  }
};

enum class LawDomain { Any, NonNeutrix, NeutrixOnly };

template <class Arith>
struct Law {
  std::string name;
  std::size_t arity;
  LawDomain domain;
  /// nullopt when the law holds on the tuple, else a description.
  std::function<std::optional<std::string>(const Arith&, const std::vector<ExternalNumber>&)> check;
  /// Tuples failing this are redrawn. Empty means every tuple qualifies.
  std::function<bool(const std::vector<ExternalNumber>&)> admits = {};
};

namespace detail {

inline bool in_domain(const ExternalNumber& x, LawDomain d) {
  switch (d) {
    case LawDomain::Any: return true;
    case LawDomain::NonNeutrix: return !x.is_neutrix();
    case LawDomain::NeutrixOnly: return x.is_neutrix();
  }
  return false;
}

inline ExternalNumber draw(Sampler& s, LawDomain d) {
  switch (d) {
    case LawDomain::Any: return s.external();
    case LawDomain::NonNeutrix: return s.non_neutrix();
    case LawDomain::NeutrixOnly: return ExternalNumber::of_neutrix(s.neutrix());
  }
  return {};
}

inline std::size_t rational_size(const Rational& r) {
  return static_cast<std::size_t>(boost::multiprecision::abs(numerator_of(r))) +
         static_cast<std::size_t>(denominator_of(r));
}

// Strictly decreases along every accepted shrink step.
inline std::size_t complexity(const ExternalNumber& x) {
  std::size_t c = 0;
  for (const auto& t : x.rep().terms()) c += 10 + rational_size(t.coefficient) + rational_size(t.exponent);
  if (!x.neutrix().is_zero()) c += 2 + rational_size(x.neutrix().exponent()) + (x.neutrix().kind() == NeutrixKind::Osl);
  return c;
}

inline std::vector<ExternalNumber> shrink_candidates(const ExternalNumber& x) {
  std::vector<ExternalNumber> out;
  const auto terms = x.rep().terms();
  const Neutrix& n = x.neutrix();
  if (!n.is_zero()) {
    out.emplace_back(x.rep());
    out.emplace_back(x.rep(), Neutrix::scaled(0, n.kind()));
    out.emplace_back(x.rep(), Neutrix::scaled(n.exponent(), NeutrixKind::Lim));
  }
  if (!terms.empty()) out.push_back(ExternalNumber::of_neutrix(n));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::vector<Term> without, only{terms[i]}, unit, flat;
    for (std::size_t j = 0; j < terms.size(); ++j) {
      if (j != i) without.push_back(terms[j]);
      Term u = terms[j], f = terms[j];
      if (j == i) {
        u.coefficient = u.coefficient.sign();
        f.exponent = 0;
      }
      unit.push_back(u);
      flat.push_back(f);
    }
    for (auto* v : {&without, &only, &unit, &flat}) out.emplace_back(EpsSeries::from_terms(*v), n);
  }
  return out;
}

template <class Arith>
std::vector<ExternalNumber> minimize(const Arith& arith, const Law<Arith>& law, std::vector<ExternalNumber> tuple) {
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t i = 0; i < tuple.size() && !progress; ++i) {
      for (const auto& cand : shrink_candidates(tuple[i])) {
        if (!in_domain(cand, law.domain) || complexity(cand) >= complexity(tuple[i])) continue;
        auto trial = tuple;
        trial[i] = cand;
        if ((!law.admits || law.admits(trial)) && law.check(arith, trial)) {
          tuple = std::move(trial);
          progress = true;
          break;
        }
      }
    }
  }
  return tuple;
}

inline std::string show(const char* what, const ExternalNumber& x) { return std::string(what) + " = " + x.str(); }

inline std::optional<std::string> unequal(const ExternalNumber& l, const ExternalNumber& r) {
  if (l == r) return std::nullopt;
  return show("lhs", l) + ", " + show("rhs", r);
}

}  // namespace detail

inline constexpr std::size_t kOracleSamplesPerTrial = 8;

/// The algebraic laws of external numbers checked by `run_law_suite`.
template <class Arith>
std::vector<Law<Arith>> standard_laws() {
  using V = std::vector<ExternalNumber>;
  using R = std::optional<std::string>;
  using detail::unequal;
  std::vector<Law<Arith>> laws;
  laws.push_back({"add_commutative", 2, LawDomain::Any,
                  [](const Arith& ar, const V& x) -> R { return unequal(ar.add(x[0], x[1]), ar.add(x[1], x[0])); }});
  laws.push_back({"add_associative", 3, LawDomain::Any, [](const Arith& ar, const V& x) -> R {
                    return unequal(ar.add(ar.add(x[0], x[1]), x[2]), ar.add(x[0], ar.add(x[1], x[2])));
                  }});
  laws.push_back({"add_regular", 1, LawDomain::Any, [](const Arith& ar, const V& x) -> R {
                    return unequal(ar.add(ar.add(x[0], ar.neg(x[0])), x[0]), x[0]);
                  }});
  laws.push_back({"mul_commutative", 2, LawDomain::NonNeutrix,
                  [](const Arith& ar, const V& x) -> R { return unequal(ar.mul(x[0], x[1]), ar.mul(x[1], x[0])); }});
  laws.push_back({"mul_associative", 3, LawDomain::NonNeutrix, [](const Arith& ar, const V& x) -> R {
                    return unequal(ar.mul(ar.mul(x[0], x[1]), x[2]), ar.mul(x[0], ar.mul(x[1], x[2])));
                  }});
  laws.push_back({"mul_regular", 1, LawDomain::NonNeutrix, [](const Arith& ar, const V& x) -> R {
                    if (auto w = multiplicative_witness(x[0])) {
                      auto r = unequal(ar.mul(ar.mul(x[0], *w), x[0]), x[0]);
                      if (r) *r += ", witness = " + w->str();
                      return r;
                    }
                    RegularityCheck c = regularity_check(x[0]);
                    if (c.holds) return std::nullopt;
                    return "truncated witness " + c.witness->str() + " leaves " + c.residual.str();
                  }});
  laws.push_back({"no_zero_divisors", 2, LawDomain::Any, [](const Arith& ar, const V& x) -> R {
                    if (ar.mul(x[0], x[1]).is_zero() && !x[0].is_zero() && !x[1].is_zero())
                      return std::string("product of nonzero factors is 0");
                    return std::nullopt;
                  }});
  laws.push_back({"scale_appreciable", 1, LawDomain::NeutrixOnly, [](const Arith&, const V& x) -> R {
                    Sampler s(0x5ca1e);
                    const Neutrix& a = x[0].neutrix();
                    for (int i = 0; i < 8; ++i) {
                      EpsSeries c = s.appreciable();
                      if (n_scale(c, a) != a) return "c = " + c.str() + " gives " + n_scale(c, a).str();
                    }
                    return std::nullopt;
                  }});
  laws.push_back({"scale_unlimited", 1, LawDomain::NeutrixOnly, [](const Arith&, const V& x) -> R {
                    const Neutrix& a = x[0].neutrix();
                    Neutrix big = n_scale(EpsSeries::omega(), a);
                    if (a.is_zero() ? big != a : !(a < big)) return "omega*A = " + big.str();
                    return std::nullopt;
                  }});
  laws.push_back({"subdistributive", 3, LawDomain::Any, [](const Arith& ar, const V& x) -> R {
                    ExternalNumber l = ar.mul(x[0], ar.add(x[1], x[2]));
                    ExternalNumber r = ar.add(ar.mul(x[0], x[1]), ar.mul(x[0], x[2]));
                    SetRelation rel = relate(l, r);
                    if (rel == SetRelation::Equal || rel == SetRelation::ProperSub) return std::nullopt;
                    return detail::show("lhs", l) + ", " + detail::show("rhs", r) + ", relation " + to_string(rel);
                  }});
  laws.push_back({"binomial_inclusion", 2, LawDomain::Any, [](const Arith&, const V& x) -> R {
                    for (unsigned n = 0; n <= kDefaultBinomialBound; ++n) {
                      LawCheck c = binomial_check(x[0], x[1], n);
                      SetRelation rel = relate(c.lhs, c.rhs);
                      if (rel != SetRelation::Equal && rel != SetRelation::ProperSub)
                        return "n = " + std::to_string(n) + ", " + detail::show("lhs", c.lhs) + ", " +
                               detail::show("rhs", c.rhs);
                    }
                    return std::nullopt;
                  }});
  // Equality needs a sum without leading cancellation: -5e^(-2) and
  // 5e^(-2) + L(0) give (a+b)^2 = L(0) against an expansion of L(-2).
  laws.push_back({"binomial", 2, LawDomain::Any,
                  [](const Arith&, const V& x) -> R {
                    for (unsigned n = 0; n <= kDefaultBinomialBound; ++n) {
                      LawCheck c = binomial_check(x[0], x[1], n);
                      if (!c.holds)
                        return "n = " + std::to_string(n) + ", " + detail::show("lhs", c.lhs) + ", " +
                               detail::show("rhs", c.rhs);
                    }
                    return std::nullopt;
                  },
                  [](const V& x) { return !sum_cancels(x[0], x[1]); }});
  laws.push_back({"sum_contains_members", 2, LawDomain::Any, [](const Arith& ar, const V& x) -> R {
                    Sampler s(0x0dd5);
                    ExternalNumber sum = ar.add(x[0], x[1]);
                    for (std::size_t i = 0; i < kOracleSamplesPerTrial; ++i) {
                      EpsSeries a = s.member(x[0]), b = s.member(x[1]);
                      if (!sum.contains(a + b)) return "member " + (a + b).str() + " outside " + sum.str();
                    }
                    return std::nullopt;
                  }});
  laws.push_back({"product_contains_members", 2, LawDomain::Any, [](const Arith& ar, const V& x) -> R {
                    Sampler s(0x0dd7);
                    ExternalNumber prod = ar.mul(x[0], x[1]);
                    for (std::size_t i = 0; i < kOracleSamplesPerTrial; ++i) {
                      EpsSeries a = s.member(x[0]), b = s.member(x[1]);
                      if (!prod.contains(a * b)) return "member " + (a * b).str() + " outside " + prod.str();
                    }
                    return std::nullopt;
                  }});
  return laws;
}

/// Checks every law on `samples` random tuples drawn from `seed`. Failing
/// tuples are shrunk before they are reported. Also counts how often the
/// distributive law fails on random triples.
template <class Arith = StandardArithmetic>
SuiteReport run_law_suite(std::uint64_t seed, std::size_t samples, const Arith& arith = {}) {
  SuiteReport report;
  report.seed = seed;
  report.samples = samples;
  Sampler sampler(seed);
  for (const auto& law : standard_laws<Arith>()) {
    LawResult res;
    res.name = law.name;
    for (std::size_t t = 0; t < samples; ++t) {
      std::vector<ExternalNumber> tuple;
      do {
        tuple.clear();
        for (std::size_t i = 0; i < law.arity; ++i) tuple.push_back(detail::draw(sampler, law.domain));
      } while (law.admits && !law.admits(tuple));
      ++res.trials;
      if (!law.check(arith, tuple)) {
        ++res.passed;
      } else if (res.counterexample.empty()) {
        res.counterexample = detail::minimize(arith, law, tuple);
        res.detail = *law.check(arith, res.counterexample);
      }
    }
    report.laws.push_back(std::move(res));
  }
  for (std::size_t t = 0; t < samples; ++t) {
    ExternalNumber a = sampler.external(), b = sampler.external(), c = sampler.external();
    if (!distributivity_holds(a, b, c).holds) {
      if (report.distributivity_failures++ == 0) report.distributivity_example = {a, b, c};
    }
  }
  return report;
}

inline std::string suite_to_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "soritic " << kVersion << " law suite (seed " << r.seed << ", n " << r.samples << ")\n";
  for (const auto& l : r.laws) {
    os << "  " << l.name << std::string(l.name.size() < 26 ? 26 - l.name.size() : 1, ' ') << l.passed << "/"
       << l.trials << "  " << (l.ok() ? "ok" : "FAIL") << "\n";
    if (!l.ok()) {
      os << "    counterexample:";
      const char* names[] = {"a", "b", "c"};
      for (std::size_t i = 0; i < l.counterexample.size(); ++i)
        os << (i ? "," : "") << " " << names[i] << " = " << l.counterexample[i].str();
      os << "\n    " << l.detail << "\n";
    }
  }
  os << "  distributivity (not a law) " << r.distributivity_failures << "/" << r.samples << " random triples fail";
  if (!r.distributivity_example.empty())
    os << "; e.g. a = " << r.distributivity_example[0] << ", b = " << r.distributivity_example[1]
       << ", c = " << r.distributivity_example[2];
  os << "\nresult: " << (r.ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace soritic
