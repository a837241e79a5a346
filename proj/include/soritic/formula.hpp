#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>

namespace soritic {

/// `n`, `n+1`, `n-2` (bound variable plus offset) or a literal index `7`.
struct IndexTerm {
  std::optional<std::string> variable;
  long long offset = 0;

  static IndexTerm literal(long long value) { return {std::nullopt, value}; }
  static IndexTerm bound(std::string var, long long offset = 0) { return {std::move(var), offset}; }

  friend bool operator==(const IndexTerm&, const IndexTerm&) = default;

  std::string str() const {
    if (!variable) return std::to_string(offset);
    if (offset == 0) return *variable;
    return *variable + (offset > 0 ? "+" : "-") + std::to_string(offset > 0 ? offset : -offset);
  }
};

/// A finite quantifier domain: a named range resolved at evaluation time, or
/// an explicit inclusive range `lo..hi`.
struct Domain {
  std::optional<std::string> name;
  long long lo = 0;
  long long hi = -1;

  static Domain named(std::string n) { return {std::move(n), 0, -1}; }
  static Domain range(long long lo, long long hi) { return {std::nullopt, lo, hi}; }

  friend bool operator==(const Domain&, const Domain&) = default;

  std::string str() const { return name ? *name : std::to_string(lo) + ".." + std::to_string(hi); }
};

enum class BinaryOp { And, Or, Implies, Iff };
enum class Quantifier { Forall, Exists };

struct FormulaNode;

/// Immutable formula tree; copies share structure.
class Formula {
 public:
  Formula() = default;
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  const FormulaNode& node() const { return *node_; }
  bool empty() const { return !node_; }

 private:
  std::shared_ptr<const FormulaNode> node_;
};

struct Atom {
  std::string predicate;
  IndexTerm index;
};
struct PropVar {
  std::string name;
};
struct Negation {
  Formula operand;
};
struct Binary {
  BinaryOp op;
  Formula lhs, rhs;
};
struct Quantified {
  Quantifier quantifier;
  std::string variable;
  Domain domain;
  Formula body;
};

struct FormulaNode {
  std::variant<Atom, PropVar, Negation, Binary, Quantified> data;
};

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

namespace fx {

inline Formula make(FormulaNode n) { return Formula(std::make_shared<const FormulaNode>(std::move(n))); }

inline Formula atom(std::string predicate, IndexTerm index) { return make({Atom{std::move(predicate), std::move(index)}}); }
inline Formula atom(std::string predicate, long long index) { return atom(std::move(predicate), IndexTerm::literal(index)); }
inline Formula S(long long index) { return atom("S", index); }
inline Formula S(std::string var, long long offset = 0) { return atom("S", IndexTerm::bound(std::move(var), offset)); }
inline Formula var(std::string name) { return make({PropVar{std::move(name)}}); }
inline Formula lnot(Formula f) { return make({Negation{std::move(f)}}); }
inline Formula land(Formula a, Formula b) { return make({Binary{BinaryOp::And, std::move(a), std::move(b)}}); }
inline Formula lor(Formula a, Formula b) { return make({Binary{BinaryOp::Or, std::move(a), std::move(b)}}); }
inline Formula implies(Formula a, Formula b) { return make({Binary{BinaryOp::Implies, std::move(a), std::move(b)}}); }
inline Formula iff(Formula a, Formula b) { return make({Binary{BinaryOp::Iff, std::move(a), std::move(b)}}); }
inline Formula forall(std::string v, Domain d, Formula body) {
  return make({Quantified{Quantifier::Forall, std::move(v), std::move(d), std::move(body)}});
}
inline Formula exists(std::string v, Domain d, Formula body) {
  return make({Quantified{Quantifier::Exists, std::move(v), std::move(d), std::move(body)}});
}

}  // namespace fx

inline bool operator==(const Formula& a, const Formula& b) {
  if (&a.node() == &b.node()) return true;
  return std::visit(
      overloaded{
          [&](const Atom& x) {
            auto* y = std::get_if<Atom>(&b.node().data);
            return y && x.predicate == y->predicate && x.index == y->index;
          },
          [&](const PropVar& x) {
            auto* y = std::get_if<PropVar>(&b.node().data);
            return y && x.name == y->name;
          },
          [&](const Negation& x) {
            auto* y = std::get_if<Negation>(&b.node().data);
            return y && x.operand == y->operand;
          },
          [&](const Binary& x) {
            auto* y = std::get_if<Binary>(&b.node().data);
            return y && x.op == y->op && x.lhs == y->lhs && x.rhs == y->rhs;
          },
          [&](const Quantified& x) {
            auto* y = std::get_if<Quantified>(&b.node().data);
            return y && x.quantifier == y->quantifier && x.variable == y->variable && x.domain == y->domain &&
                   x.body == y->body;
          },
      },
      a.node().data);
}

namespace detail {

// Binding strength; quantifiers bind loosest.
inline int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::Iff: return 1;
    case BinaryOp::Implies: return 2;
    case BinaryOp::Or: return 3;
    case BinaryOp::And: return 4;
  }
  return 0;
}

inline const char* symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::And: return " & ";
    case BinaryOp::Or: return " | ";
    case BinaryOp::Implies: return " -> ";
    case BinaryOp::Iff: return " <-> ";
  }
  return "?";
}

inline void print(std::string& out, const Formula& f, int context) {
  std::visit(overloaded{
                 [&](const Atom& a) { out += a.predicate + "(" + a.index.str() + ")"; },
                 [&](const PropVar& p) { out += p.name; },
                 [&](const Negation& n) {
                   out += "~";
                   print(out, n.operand, 5);
                 },
                 [&](const Binary& b) {
                   int p = precedence(b.op);
                   bool parens = p < context;
                   if (parens) out += "(";
                   // -> associates right, the rest left
                   bool right_assoc = b.op == BinaryOp::Implies;
                   print(out, b.lhs, right_assoc ? p + 1 : p);
                   out += symbol(b.op);
                   print(out, b.rhs, right_assoc ? p : p + 1);
                   if (parens) out += ")";
                 },
                 [&](const Quantified& q) {
                   bool parens = context > 0;
                   if (parens) out += "(";
                   out += q.quantifier == Quantifier::Forall ? "forall " : "exists ";
                   out += q.variable + " in " + q.domain.str() + ". ";
                   print(out, q.body, 0);
                   if (parens) out += ")";
                 },
             },
             f.node().data);
}

}  // namespace detail

/// Normalized ASCII form with minimal parentheses.
inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print(out, f, 0);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }

}  // namespace soritic
