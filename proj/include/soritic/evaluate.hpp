#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "soritic/error.hpp"
#include "soritic/formula.hpp"
#include "soritic/truth.hpp"

namespace soritic {

using DomainTable = std::map<std::string, std::pair<long long, long long>, std::less<>>;

/// Interpretation of atoms, propositional variables and named domains over
/// truth values of type V. Missing entries raise UnboundAtom.
template <class V>
struct Model {
  std::function<std::optional<V>(std::string_view predicate, long long index)> atom;
  std::map<std::string, V, std::less<>> props;
  DomainTable domains;
};

namespace detail {

using IndexEnv = std::vector<std::pair<std::string, long long>>;

inline long long resolve_index(const IndexTerm& t, const IndexEnv& env) {
  if (!t.variable) return t.offset;
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->first == *t.variable) return it->second + t.offset;
  throw UnboundAtom("unbound index variable '" + *t.variable + "'");
}

inline std::pair<long long, long long> resolve_domain(const Domain& d, const DomainTable& table) {
  if (!d.name) return {d.lo, d.hi};
  auto it = table.find(*d.name);
  if (it == table.end()) throw UnboundAtom("unknown domain '" + *d.name + "'");
  return it->second;
}

template <class Algebra, class V = typename Algebra::value_type>
V evaluate(const Formula& f, const Model<V>& m, IndexEnv& env) {
  return std::visit(
      overloaded{
          [&](const Atom& a) -> V {
            long long idx = resolve_index(a.index, env);
            std::optional<V> v = m.atom ? m.atom(a.predicate, idx) : std::nullopt;
            if (!v) throw UnboundAtom("no value for " + a.predicate + "(" + std::to_string(idx) + ")");
            return *v;
          },
          [&](const PropVar& p) -> V {
            auto it = m.props.find(p.name);
            if (it == m.props.end()) throw UnboundAtom("no value for variable '" + p.name + "'");
            return it->second;
          },
          [&](const Negation& n) -> V { return Algebra::negate(evaluate<Algebra>(n.operand, m, env)); },
          [&](const Binary& b) -> V {
            V l = evaluate<Algebra>(b.lhs, m, env);
            V r = evaluate<Algebra>(b.rhs, m, env);
            switch (b.op) {
              case BinaryOp::And: return Algebra::conj(std::move(l), std::move(r));
              case BinaryOp::Or: return Algebra::disj(std::move(l), std::move(r));
              case BinaryOp::Implies: return Algebra::implies(l, r);
              case BinaryOp::Iff: return Algebra::iff(l, r);
            }
            return l;
          },
          [&](const Quantified& q) -> V {
            auto [lo, hi] = resolve_domain(q.domain, m.domains);
            bool all = q.quantifier == Quantifier::Forall;
            V acc = all ? Algebra::top() : Algebra::bottom();
            env.emplace_back(q.variable, 0);
            for (long long i = lo; i <= hi; ++i) {
              env.back().second = i;
              V v = evaluate<Algebra>(q.body, m, env);
              acc = all ? Algebra::conj(std::move(acc), std::move(v)) : Algebra::disj(std::move(acc), std::move(v));
            }
            env.pop_back();
            return acc;
          },
      },
      f.node().data);
}

}  // namespace detail

/// Evaluates `f` in the truth-value algebra `Algebra` (classical, Kleene or
/// fuzzy). Quantifiers fold with the algebra's conjunction/disjunction.
template <class Algebra>
typename Algebra::value_type evaluate(const Formula& f, const Model<typename Algebra::value_type>& m) {
  detail::IndexEnv env;
  return detail::evaluate<Algebra>(f, m, env);
}

inline TruthValue3 eval_k3(const Formula& f, const Model<TruthValue3>& m) { return evaluate<KleeneAlgebra>(f, m); }

inline bool eval_bool(const Formula& f, const Model<bool>& m) { return evaluate<ClassicalAlgebra>(f, m); }

/// Classical valuation with a sharp boundary: `predicate(n)` is true iff n < cutoff.
inline bool eval_classical(const Formula& f, long long cutoff, const DomainTable& domains = {},
                           std::string predicate = "S") {
  Model<bool> m;
  m.atom = [cutoff, predicate = std::move(predicate)](std::string_view p, long long n) -> std::optional<bool> {
    if (p != predicate) return std::nullopt;
    return n < cutoff;
  };
  m.domains = domains;
  return eval_bool(f, m);
}

/// Fuzzy evaluation with `membership` giving the degree of `predicate(n)`.
inline FuzzyDegree eval_fuzzy(const Formula& f, std::function<std::optional<FuzzyDegree>(long long)> membership,
                              const DomainTable& domains = {}, std::string predicate = "S") {
  Model<FuzzyDegree> m;
  m.atom = [membership = std::move(membership), predicate = std::move(predicate)](
               std::string_view p, long long n) -> std::optional<FuzzyDegree> {
    if (p != predicate) return std::nullopt;
    return membership(n);
  };
  m.domains = domains;
  return evaluate<FuzzyAlgebra>(f, m);
}

/// Classical sharpenings of the soritical predicate, one per cutoff.
struct PrecisificationFamily {
  std::vector<long long> cutoffs;
  std::string predicate = "S";
};

/// Supertrue iff true under every precisification, Superfalse iff false
/// under every one, Indeterminate otherwise.
inline SuperVerdict eval_super(const Formula& f, const PrecisificationFamily& family, const DomainTable& domains = {}) {
  if (family.cutoffs.empty()) throw EmptyFamily();
  bool any_true = false, any_false = false;
  for (long long k : family.cutoffs) {
    (eval_classical(f, k, domains, family.predicate) ? any_true : any_false) = true;
  }
  if (!any_false) return SuperVerdict::Supertrue;
  if (!any_true) return SuperVerdict::Superfalse;
  return SuperVerdict::Indeterminate;
}

// --- brute-force validity -------------------------------------------------

/// A sentence letter: a propositional variable or a ground atom.
struct Letter {
  std::string name;
  std::optional<long long> index;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

namespace detail {

inline void collect_letters(const Formula& f, const DomainTable& domains, IndexEnv& env, std::set<Letter>& out) {
  std::visit(overloaded{
                 [&](const Atom& a) { out.insert({a.predicate, resolve_index(a.index, env)}); },
                 [&](const PropVar& p) { out.insert({p.name, std::nullopt}); },
                 [&](const Negation& n) { collect_letters(n.operand, domains, env, out); },
                 [&](const Binary& b) {
                   collect_letters(b.lhs, domains, env, out);
                   collect_letters(b.rhs, domains, env, out);
                 },
                 [&](const Quantified& q) {
                   auto [lo, hi] = resolve_domain(q.domain, domains);
                   env.emplace_back(q.variable, 0);
                   for (long long i = lo; i <= hi; ++i) {
                     env.back().second = i;
                     collect_letters(q.body, domains, env, out);
                   }
                   env.pop_back();
                 },
             },
             f.node().data);
}

}  // namespace detail

/// Distinct sentence letters of `f` after expanding its finite quantifiers.
inline std::vector<Letter> letters_of(const Formula& f, const DomainTable& domains = {}) {
  std::set<Letter> out;
  detail::IndexEnv env;
  detail::collect_letters(f, domains, env, out);
  return {out.begin(), out.end()};
}

inline constexpr std::size_t kDefaultLetterBound = 12;

/// Calls `visit(value)` for `f` under every assignment of `values` to its
/// letters; stops early when `visit` returns false.
template <class Algebra, class Visit>
void for_each_assignment(const Formula& f, std::span<const typename Algebra::value_type> values, Visit&& visit,
                         const DomainTable& domains = {}, std::size_t bound = kDefaultLetterBound) {
  using V = typename Algebra::value_type;
  std::vector<Letter> letters = letters_of(f, domains);
  if (letters.size() > bound)
    throw BoundExceeded(std::to_string(letters.size()) + " sentence letters exceed bound " + std::to_string(bound));
  std::vector<std::size_t> digit(letters.size(), 0);
  std::map<Letter, V> current;
  for (const auto& l : letters) current.emplace(l, values[0]);
  Model<V> m;
  m.domains = domains;
  m.atom = [&current](std::string_view p, long long n) -> std::optional<V> {
    auto it = current.find(Letter{std::string(p), n});
    if (it == current.end()) return std::nullopt;
    return it->second;
  };
  for (;;) {
    m.props.clear();
    for (std::size_t i = 0; i < letters.size(); ++i) {
      current[letters[i]] = values[digit[i]];
      if (!letters[i].index) m.props.emplace(letters[i].name, values[digit[i]]);
    }
    if (!visit(evaluate<Algebra>(f, m))) return;
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == values.size()) digit[i++] = 0;
    if (i == digit.size()) return;
  }
}

/// Takes the value 1 under every three-valued assignment.
inline bool is_tautology_k3(const Formula& f, const DomainTable& domains = {}, std::size_t bound = kDefaultLetterBound) {
  bool ok = true;
  for_each_assignment<KleeneAlgebra>(
      f, std::span<const TruthValue3>(kTruthValues3), [&](TruthValue3 v) { return ok = (v == TruthValue3::True); },
      domains, bound);
  return ok;
}

/// Has no false substitution instance: never takes the value 0.
inline bool is_quasi_tautology_k3(const Formula& f, const DomainTable& domains = {},
                                  std::size_t bound = kDefaultLetterBound) {
  bool ok = true;
  for_each_assignment<KleeneAlgebra>(
      f, std::span<const TruthValue3>(kTruthValues3), [&](TruthValue3 v) { return ok = (v != TruthValue3::False); },
      domains, bound);
  return ok;
}

inline bool is_tautology_classical(const Formula& f, const DomainTable& domains = {},
                                   std::size_t bound = kDefaultLetterBound) {
  static constexpr std::array<bool, 2> kBools{false, true};
  bool ok = true;
  for_each_assignment<ClassicalAlgebra>(
      f, std::span<const bool>(kBools), [&](bool v) { return ok = v; }, domains, bound);
  return ok;
}

}  // namespace soritic
