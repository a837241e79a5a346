#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "soritic/evaluate.hpp"
#include "soritic/expression.hpp"
#include "soritic/external_number.hpp"
#include "soritic/formula_parser.hpp"

namespace soritic {

/// A natural number of the model: naive (reachable from 0 by adding 1) or an
/// unlimited witness.
class ModelInteger {
 public:
  static ModelInteger naive(unsigned long long n) { return ModelInteger(n); }
  static ModelInteger witness(EpsSeries w) {
    if (!(w.valuation() < Valuation(0)) || w.sign() <= 0)
      throw std::invalid_argument("witness must be positive and unlimited: " + w.str());
    return ModelInteger(std::move(w));
  }

  bool is_naive() const { return std::holds_alternative<unsigned long long>(value_); }
  unsigned long long naive_value() const { return std::get<unsigned long long>(value_); }
  EpsSeries as_series() const {
    return is_naive() ? EpsSeries(Rational(naive_value())) : std::get<EpsSeries>(value_);
  }
  std::string str() const { return is_naive() ? std::to_string(naive_value()) : std::get<EpsSeries>(value_).str(); }

  friend bool operator==(const ModelInteger&, const ModelInteger&) = default;

 private:
  explicit ModelInteger(unsigned long long n) : value_(n) {}
  explicit ModelInteger(EpsSeries w) : value_(std::move(w)) {}
  std::variant<unsigned long long, EpsSeries> value_;
};

inline std::vector<EpsSeries> default_witnesses() {
  return {EpsSeries::omega(), EpsSeries::monomial(1, -2), EpsSeries::omega() + EpsSeries(7)};
}

// --- backends ---------------------------------------------------------------

/// Hidden sharp boundary: S(a_n) iff n < cutoff.
struct ClassicalCutoff {
  long long cutoff;
};

/// S(a_n) = 1 below t1, 1/2 on [t1, t2], 0 above t2.
struct KleenePenumbra {
  long long t1, t2;
  TruthValue3 value(long long n) const {
    return n < t1 ? TruthValue3::True : n <= t2 ? TruthValue3::Half : TruthValue3::False;
  }
};

/// Piecewise-linear membership through rational breakpoints, constant
/// outside them. Degrees at or above `threshold` count as designated true,
/// at or below 1 - threshold as designated false.
struct FuzzyMembership {
  std::vector<std::pair<Rational, Rational>> points;
  Rational threshold = 1;

  FuzzyDegree degree(const Rational& x) const {
    if (x <= points.front().first) return FuzzyDegree(points.front().second);
    if (x >= points.back().first) return FuzzyDegree(points.back().second);
    auto hi = std::upper_bound(points.begin(), points.end(), x,
                               [](const Rational& v, const auto& p) { return v < p.first; });
    auto lo = std::prev(hi);
    Rational t = (x - lo->first) / (hi->first - lo->first);
    return FuzzyDegree(lo->second + t * (hi->second - lo->second));
  }
};

struct Supervaluation {
  PrecisificationFamily family;
};

/// S(x) iff x is limited (no cut), or iff x lies wholly below `cut`.
struct Nonstandard {
  std::optional<ExternalNumber> cut;

  bool holds(const EpsSeries& x) const {
    if (!cut) return Neutrix::limited().contains(x);
    return definitely_less(ExternalNumber(x), *cut);
  }
  std::string predicate_text() const { return cut ? "x < " + cut->str() : "x in L(0)"; }
};

using Backend = std::variant<ClassicalCutoff, KleenePenumbra, FuzzyMembership, Supervaluation, Nonstandard>;

inline std::string backend_id(const Backend& b) {
  return std::visit(overloaded{
                        [](const ClassicalCutoff&) { return std::string("classical_cutoff"); },
                        [](const KleenePenumbra&) { return std::string("kleene_penumbra"); },
                        [](const FuzzyMembership&) { return std::string("fuzzy_membership"); },
                        [](const Supervaluation&) { return std::string("supervaluation"); },
                        [](const Nonstandard&) { return std::string("nonstandard"); },
                    },
                    b);
}

inline std::string backend_description(const Backend& b) {
  return std::visit(
      overloaded{
          [](const ClassicalCutoff& c) { return "classical_cutoff(k=" + std::to_string(c.cutoff) + ")"; },
          [](const KleenePenumbra& k) {
            return "kleene_penumbra(t1=" + std::to_string(k.t1) + ", t2=" + std::to_string(k.t2) + ")";
          },
          [](const FuzzyMembership& f) {
            std::string s = "fuzzy_membership(";
            for (std::size_t i = 0; i < f.points.size(); ++i)
              s += (i ? ", " : "") + std::string("(") + to_string(f.points[i].first) + ", " +
                   to_string(f.points[i].second) + ")";
            return s + "; threshold=" + to_string(f.threshold) + ")";
          },
          [](const Supervaluation& s) {
            std::string out = "supervaluation(k in {";
            for (std::size_t i = 0; i < s.family.cutoffs.size(); ++i)
              out += (i ? "," : "") + std::to_string(s.family.cutoffs[i]);
            return out + "})";
          },
          [](const Nonstandard& n) { return "nonstandard(" + n.predicate_text() + ")"; },
      },
      b);
}

struct SoritesScenario {
  std::string name;
  long long lo = 1;
  long long hi = 10;
  std::vector<EpsSeries> witnesses = default_witnesses();
  Backend backend = ClassicalCutoff{5};
  ModelInteger chain_length = ModelInteger::naive(9);

  /// Throws std::invalid_argument when the scenario is not well-formed.
  void validate() const {
    if (lo > hi) throw std::invalid_argument("empty range");
    for (const auto& w : witnesses) ModelInteger::witness(w);
    std::visit(overloaded{
                   [](const ClassicalCutoff&) {},
                   [](const KleenePenumbra& k) {
                     if (k.t1 > k.t2) throw std::invalid_argument("penumbra needs t1 <= t2");
                   },
                   [this](const FuzzyMembership& f) {
                     if (f.points.empty()) throw std::invalid_argument("membership needs breakpoints");
                     for (std::size_t i = 0; i < f.points.size(); ++i) {
                       FuzzyDegree(f.points[i].second);
                       if (i && !(f.points[i - 1].first < f.points[i].first))
                         throw std::invalid_argument("breakpoints must be strictly increasing");
                     }
                     if (f.threshold <= Rational(1, 2) || f.threshold > 1)
                       throw std::invalid_argument("threshold must lie in (1/2, 1]");
                     if (f.degree(lo) != FuzzyDegree::one() || f.degree(hi) != FuzzyDegree::zero())
                       throw std::invalid_argument("membership must be 1 at the series start and 0 at its end");
                   },
                   [this](const Supervaluation& s) {
                     if (s.family.cutoffs.empty()) throw EmptyFamily();
                     for (long long k : s.family.cutoffs)
                       if (k < lo || k > hi) throw std::invalid_argument("cutoff outside the series range");
                   },
                   [](const Nonstandard&) {},
               },
               backend);
  }
};

// --- per-backend verdicts ---------------------------------------------------

/// Value of a ground formula under a backend, with its designated reading.
struct Verdict {
  std::string value;
  bool designated_true = false;
  bool designated_false = false;
};

inline bool is_nonstandard(const Backend& b) { return std::holds_alternative<Nonstandard>(b); }

/// Evaluates a formula whose atoms sit at naive indices.
inline Verdict evaluate_under(const Backend& backend, const Formula& f, const DomainTable& domains = {}) {
  return std::visit(
      overloaded{
          [&](const ClassicalCutoff& c) {
            bool v = eval_classical(f, c.cutoff, domains);
            return Verdict{v ? "true" : "false", v, !v};
          },
          [&](const KleenePenumbra& k) {
            Model<TruthValue3> m;
            m.domains = domains;
            m.atom = [&k](std::string_view p, long long n) -> std::optional<TruthValue3> {
              if (p != "S") return std::nullopt;
              return k.value(n);
            };
            TruthValue3 v = eval_k3(f, m);
            return Verdict{to_string(v), v == TruthValue3::True, v == TruthValue3::False};
          },
          [&](const FuzzyMembership& fm) {
            FuzzyDegree d = eval_fuzzy(f, [&fm](long long n) -> std::optional<FuzzyDegree> { return fm.degree(n); },
                                       domains);
            return Verdict{to_string(d), d.value() >= fm.threshold, d.value() <= 1 - fm.threshold};
          },
          [&](const Supervaluation& s) {
            SuperVerdict v = eval_super(f, s.family, domains);
            return Verdict{to_string(v), v == SuperVerdict::Supertrue, v == SuperVerdict::Superfalse};
          },
          [&](const Nonstandard& ns) {
            Model<bool> m;
            m.domains = domains;
            m.atom = [&ns](std::string_view p, long long n) -> std::optional<bool> {
              if (p != "S") return std::nullopt;
              return ns.holds(EpsSeries(n));
            };
            bool v = eval_bool(f, m);
            return Verdict{v ? "true" : "false", v, !v};
          },
      },
      backend);
}

/// S at an arbitrary point of the model; only the nonstandard backend is
/// defined beyond the naive indices.
inline Verdict evaluate_point(const Nonstandard& ns, const EpsSeries& x) {
  bool v = ns.holds(x);
  return Verdict{v ? "true" : "false", v, !v};
}

// --- report -----------------------------------------------------------------

struct BarnesResult {
  bool c1 = false, c2 = false, c3 = false;
  std::string c1_evidence, c2_evidence, c3_evidence;
  std::optional<std::string> c3_witness;
};

struct InductionResult {
  std::string basis_value;
  bool basis = false;
  bool step = false;
  std::optional<long long> step_counterexample;
  std::string step_value_at_counterexample;
  std::string weakest_step_value;  ///< least step value over the samples
  std::string premise_value;       ///< S(a_lo) & forall n. S(a_n) -> S(a_n+1)
  std::string conclusion_value;    ///< forall n. S(a_n) over the range
  std::vector<std::pair<std::string, bool>> witness_negations;  ///< (w, not S(w))
  std::string verdict;
};

struct MemberFailure {
  long long cutoff;
  std::optional<long long> failing_link;
};

struct ConditionalResult {
  std::string chain_length;
  bool completed = false;
  std::optional<long long> failing_link;  ///< link n -> n+1
  std::string failing_link_value;
  std::string conclusion;        ///< the atom concluded
  std::string conclusion_value;  ///< its value under the backend
  std::string premise_floor;     ///< weakest premise value
  std::vector<MemberFailure> per_member;
  std::optional<std::string> refused;
  std::string verdict;
};

struct DoublingResult {
  bool applicable = false;
  std::optional<bool> invariance_holds;
  std::optional<std::string> witness;
  std::size_t samples = 0;
  std::string verdict;
};

struct SoritesReport {
  std::string scenario;
  std::string backend;
  std::string backend_detail;
  long long lo = 0, hi = 0;
  BarnesResult barnes;
  InductionResult induction;
  ConditionalResult conditional;
  DoublingResult doubling;
  std::vector<std::string> notes;
};

// --- operations ---------------------------------------------------------------

namespace detail {

inline Formula step_formula(long long n) { return fx::implies(fx::S(n), fx::S(n + 1)); }

inline DomainTable range_domains(long long lo, long long hi) {
  return {{"R", {lo, hi}}, {"Steps", {lo, hi - 1}}};
}

}  // namespace detail

/// Barnes' three constraints: true at the first item, false at the last (or
/// at every unlimited witness), and no adjacent pair jumping straight from
/// designated true to designated false.
inline BarnesResult barnes_check(const SoritesScenario& sc) {
  BarnesResult r;
  Verdict first = evaluate_under(sc.backend, fx::S(sc.lo));
  r.c1 = first.designated_true;
  r.c1_evidence = "S(a_" + std::to_string(sc.lo) + ") = " + first.value;

  if (auto* ns = std::get_if<Nonstandard>(&sc.backend)) {
    r.c2 = !sc.witnesses.empty();
    r.c2_evidence.clear();
    for (const auto& w : sc.witnesses) {
      Verdict v = evaluate_point(*ns, w);
      r.c2 = r.c2 && v.designated_false;
      r.c2_evidence += (r.c2_evidence.empty() ? "" : "; ") + ("S(" + w.str() + ") = " + v.value);
    }
    if (sc.witnesses.empty()) r.c2_evidence = "no unlimited witness given";

    r.c3 = true;
    std::size_t pairs = 0;
    std::string next;
    auto check_pair = [&](const EpsSeries& x) {
      ++pairs;
      if (r.c3 && evaluate_point(*ns, x).designated_true && evaluate_point(*ns, x + EpsSeries(1)).designated_false) {
        r.c3 = false;
        r.c3_witness = x.str();
        next = (x + EpsSeries(1)).str();
      }
    };
    for (long long n = sc.lo; n < sc.hi; ++n) check_pair(EpsSeries(n));
    for (const auto& w : sc.witnesses) {
      check_pair(w - EpsSeries(1));
      check_pair(w);
    }
    r.c3_evidence = r.c3 ? "no adjacent flip among " + std::to_string(pairs) + " sampled pairs"
                         : "S(" + *r.c3_witness + ") true but S(" + next + ") false";
    return r;
  }

  Verdict last = evaluate_under(sc.backend, fx::S(sc.hi));
  r.c2 = last.designated_false;
  r.c2_evidence = "S(a_" + std::to_string(sc.hi) + ") = " + last.value;
  r.c3 = true;
  for (long long n = sc.lo; n < sc.hi && r.c3; ++n) {
    Verdict a = evaluate_under(sc.backend, fx::S(n));
    Verdict b = evaluate_under(sc.backend, fx::S(n + 1));
    if (a.designated_true && b.designated_false) {
      r.c3 = false;
      r.c3_witness = std::to_string(n);
      r.c3_evidence = "S(a_" + std::to_string(n) + ") = " + a.value + " but S(a_" + std::to_string(n + 1) +
                      ") = " + b.value;
    }
  }
  if (r.c3) r.c3_evidence = "no designated-true to designated-false step in " + std::to_string(sc.lo) + ".." +
                            std::to_string(sc.hi);
  return r;
}

namespace detail {

// Orders step values so the weakest one can be reported.
inline int strength(const Backend& b, const Verdict& v) {
  if (std::holds_alternative<FuzzyMembership>(b)) return 0;
  return v.designated_true ? 2 : v.designated_false ? 0 : 1;
}

}  // namespace detail

/// The induction schema: basis, the step over the naive samples and, for the
/// nonstandard backend, the negated predicate at every unlimited witness.
inline InductionResult run_induction(const SoritesScenario& sc) {
  InductionResult r;
  DomainTable domains = detail::range_domains(sc.lo, sc.hi);
  Verdict basis = evaluate_under(sc.backend, fx::S(sc.lo));
  r.basis = basis.designated_true;
  r.basis_value = basis.value;

  r.step = true;
  std::optional<Verdict> weakest;
  std::optional<FuzzyDegree> weakest_degree;
  for (long long n = sc.lo; n < sc.hi; ++n) {
    Verdict v = evaluate_under(sc.backend, detail::step_formula(n));
    if (auto* fm = std::get_if<FuzzyMembership>(&sc.backend)) {
      FuzzyDegree d = fz_implies(fm->degree(n), fm->degree(n + 1));
      if (!weakest_degree || d < *weakest_degree) {
        weakest_degree = d;
        weakest = v;
      }
    } else if (!weakest || detail::strength(sc.backend, v) < detail::strength(sc.backend, *weakest)) {
      weakest = v;
    }
    if (r.step && !v.designated_true) {
      r.step = false;
      r.step_counterexample = n;
      r.step_value_at_counterexample = v.value;
    }
  }
  r.weakest_step_value = weakest ? weakest->value : "n/a";
  r.premise_value = evaluate_under(sc.backend, parse_formula("S(" + std::to_string(sc.lo) +
                                                             ") & forall n in Steps. S(n) -> S(n+1)"),
                                   domains)
                        .value;
  r.conclusion_value = evaluate_under(sc.backend, parse_formula("forall n in R. S(n)"), domains).value;

  if (auto* ns = std::get_if<Nonstandard>(&sc.backend)) {
    bool all_negated = true;
    for (const auto& w : sc.witnesses) {
      bool negated = evaluate_point(*ns, w).designated_false;
      all_negated = all_negated && negated;
      r.witness_negations.emplace_back(w.str(), negated);
    }
    if (r.basis && r.step && all_negated)
      r.verdict = "external induction: basis and step demonstrated on samples " + std::to_string(sc.lo) + ".." +
                  std::to_string(sc.hi) + "; S holds of naive n only; not S(w) at every unlimited witness";
    else
      r.verdict = "nonstandard reading not confirmed on samples";
    return r;
  }

  if (r.step) {
    r.verdict = "no failing step; conclusion value " + r.conclusion_value;
  } else {
    std::string at = std::to_string(*r.step_counterexample);
    std::visit(overloaded{
                   [&](const ClassicalCutoff&) { r.verdict = "step fails at n=" + at + ": sharp cutoff dissolves the paradox"; },
                   [&](const KleenePenumbra&) {
                     r.verdict = "step not designated at n=" + at + " (value " + r.step_value_at_counterexample +
                                 "): penumbra blocks the induction";
                   },
                   [&](const FuzzyMembership&) {
                     r.verdict = "each step has degree at least " + r.weakest_step_value +
                                 " yet the conclusion has degree " + r.conclusion_value;
                   },
                   [&](const Supervaluation&) {
                     r.verdict = "step not supertrue at n=" + at + " (" + r.step_value_at_counterexample +
                                 "); the universal step is Superfalse";
                   },
                   [&](const Nonstandard&) {},
               },
               sc.backend);
  }
  return r;
}

/// The conditional schema: modus ponens link by link from S(a_lo).
///
/// Throws ChainThroughWitness for an unlimited chain length; the nonstandard
/// reading allows modus ponens only a naive number of times.
inline ConditionalResult run_conditional(const SoritesScenario& sc, const ModelInteger& chain_length) {
  ConditionalResult r;
  r.chain_length = chain_length.str();
  if (!chain_length.is_naive())
    throw ChainThroughWitness("modus ponens may be applied only a naive number of times; chain length " +
                              chain_length.str() + " is unlimited");
  long long links = static_cast<long long>(chain_length.naive_value());
  long long end = sc.lo + links;
  if (!is_nonstandard(sc.backend) && end > sc.hi)
    throw ConfigError("/chainLength", "chain of " + std::to_string(links) + " links leaves the range " +
                                          std::to_string(sc.lo) + ".." + std::to_string(sc.hi));

  Verdict basis = evaluate_under(sc.backend, fx::S(sc.lo));
  std::optional<FuzzyDegree> floor;
  auto* fm = std::get_if<FuzzyMembership>(&sc.backend);
  if (fm) floor = fm->degree(sc.lo);

  r.completed = basis.designated_true;
  for (long long n = sc.lo; n < end; ++n) {
    if (fm) floor = std::min(*floor, fz_implies(fm->degree(n), fm->degree(n + 1)));
    if (!r.completed) {
      if (!fm) break;
      continue;
    }
    Verdict link = evaluate_under(sc.backend, detail::step_formula(n));
    if (!link.designated_true) {
      r.completed = false;
      r.failing_link = n;
      r.failing_link_value = link.value;
    }
  }
  r.conclusion = "S(a_" + std::to_string(end) + ")";
  r.conclusion_value = evaluate_under(sc.backend, fx::S(end)).value;
  r.premise_floor = floor ? to_string(*floor) : (r.completed ? "designated" : "not designated");

  if (auto* sv = std::get_if<Supervaluation>(&sc.backend)) {
    for (long long k : sv->family.cutoffs) {
      MemberFailure mf{k, std::nullopt};
      if (!eval_classical(fx::S(sc.lo), k)) {
        r.per_member.push_back(mf);
        continue;
      }
      for (long long n = sc.lo; n < end; ++n)
        if (!eval_classical(detail::step_formula(n), k)) {
          mf.failing_link = n;
          break;
        }
      r.per_member.push_back(mf);
    }
  }

  if (!basis.designated_true)
    r.verdict = "basis S(a_" + std::to_string(sc.lo) + ") not designated; no chain starts";
  else if (r.completed)
    r.verdict = "chain of " + std::to_string(links) + " links completes; " + r.conclusion + " = " + r.conclusion_value;
  else
    r.verdict = "chain stops at link " + std::to_string(*r.failing_link) + "->" + std::to_string(*r.failing_link + 1) +
                " (value " + r.failing_link_value + ")";
  if (fm) r.verdict += "; premise floor " + r.premise_floor + ", conclusion degree " + r.conclusion_value;
  return r;
}

/// Invariance of S under doubling in the nonstandard model.
///
/// For the limited-number predicate (a group) S(x) -> S(2x) holds on every
/// sample; for a cut x < a the search returns some x with S(x) and not S(2x).
/// Throws BackendUnsupported for the other backends.
inline DoublingResult doubling_analysis(const SoritesScenario& sc) {
  auto* ns = std::get_if<Nonstandard>(&sc.backend);
  if (!ns) throw BackendUnsupported("doubling analysis is defined only for the nonstandard backend");
  DoublingResult r;
  r.applicable = true;

  std::vector<EpsSeries> samples;
  for (long long n = sc.lo; n <= sc.hi; ++n) samples.emplace_back(n);
  for (const auto& w : sc.witnesses) samples.push_back(w);
  const EpsSeries half(Rational(1, 2));
  if (ns->cut && !ns->cut->rep().is_zero()) samples.push_back(ns->cut->rep() * half);
  for (const auto& w : sc.witnesses) samples.push_back(w * half);

  for (const auto& x : samples) {
    ++r.samples;
    if (ns->holds(x) && !ns->holds(x * EpsSeries(2))) {
      r.invariance_holds = false;
      r.witness = x.str();
      break;
    }
  }
  if (!r.invariance_holds) r.invariance_holds = true;
  r.verdict = *r.invariance_holds
                  ? "invariance by doubling holds on all " + std::to_string(r.samples) + " samples"
                  : "doubling fails: S(" + *r.witness + ") but not S(2*(" + *r.witness + "))";
  return r;
}

/// Runs every schema and collects a deterministic report.
inline SoritesReport run_scenario(const SoritesScenario& sc) {
  sc.validate();
  SoritesReport rep;
  rep.scenario = sc.name;
  rep.backend = backend_id(sc.backend);
  rep.backend_detail = backend_description(sc.backend);
  rep.lo = sc.lo;
  rep.hi = sc.hi;
  rep.barnes = barnes_check(sc);
  rep.induction = run_induction(sc);
  try {
    rep.conditional = run_conditional(sc, sc.chain_length);
  } catch (const ChainThroughWitness& e) {
    rep.conditional.chain_length = sc.chain_length.str();
    rep.conditional.refused = e.what();
    rep.conditional.verdict = "refused: chain length is not naive";
  }
  if (is_nonstandard(sc.backend)) {
    rep.doubling = doubling_analysis(sc);
    rep.notes.push_back("nonstandard steps are demonstrated on samples, not proved");
  } else {
    rep.doubling.verdict = "not applicable: defined only for the nonstandard model";
  }
  if (auto* sv = std::get_if<Supervaluation>(&sc.backend)) {
    DomainTable d = detail::range_domains(sc.lo, sc.hi);
    SuperVerdict boundary = eval_super(parse_formula("exists n in Steps. S(n) & ~S(n+1)"), sv->family, d);
    rep.notes.push_back("sharp-boundary formula exists n. S(a_n) & ~S(a_n+1): " + to_string(boundary));
    std::string instances;
    bool none_supertrue = true;
    for (long long n = sc.lo; n < sc.hi; ++n) {
      SuperVerdict v = eval_super(fx::land(fx::S(n), fx::lnot(fx::S(n + 1))), sv->family);
      none_supertrue = none_supertrue && v != SuperVerdict::Supertrue;
      if (v != SuperVerdict::Superfalse) instances += (instances.empty() ? "" : ", ") + std::to_string(n) + ":" + to_string(v);
    }
    rep.notes.push_back(std::string("individual boundary instances supertrue: ") + (none_supertrue ? "none" : "some") +
                        (instances.empty() ? "" : " (non-superfalse: " + instances + ")"));
  }
  return rep;
}

}  // namespace soritic
