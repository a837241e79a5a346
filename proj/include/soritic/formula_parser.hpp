#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "soritic/error.hpp"
#include "soritic/formula.hpp"

namespace soritic {

namespace detail {

// formula := quant | iff
// quant   := ('forall' | 'exists') ident 'in' domain '.' formula
// iff     := imp ('<->' imp)*
// imp     := or ('->' imp)?
// or      := and ('|' and)*
// and     := unary ('&' unary)*
// unary   := '~' unary | quant | primary
// primary := '(' formula ')' | ident '(' index ')' | ident
// domain  := ident | int '..' int
// index   := int | ident [('+' | '-') int]
class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = formula();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("unexpected input", pos_);
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(std::string_view token) {
    skip_ws();
    return text_.substr(pos_, token.size()) == token;
  }

  bool accept(std::string_view token) {
    if (!peek(token)) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) throw SyntaxError("expected '" + std::string(token) + "'", pos_);
  }

  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  bool peek_keyword(std::string_view word) {
    if (!peek(word)) return false;
    std::size_t end = pos_ + word.size();
    return end == text_.size() || !ident_char(text_[end]);
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    }
    if (start == pos_) throw SyntaxError("expected identifier", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = pos_ < text_.size() && text_[pos_] == '-';
    if (neg) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      throw SyntaxError("expected integer", start);
    }
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-');
  }

  Formula formula() {
    if (peek_keyword("forall") || peek_keyword("exists")) return quantified();
    return iff();
  }

  Formula quantified() {
    Quantifier q = peek_keyword("forall") ? Quantifier::Forall : Quantifier::Exists;
    pos_ += 6;
    std::string var = identifier();
    if (!peek_keyword("in")) throw SyntaxError("unbounded quantifier; expected 'in <domain>'", pos_);
    pos_ += 2;
    Domain d;
    if (at_digit()) {
      long long lo = integer();
      expect("..");
      long long hi = integer();
      d = Domain::range(lo, hi);
    } else {
      d = Domain::named(identifier());
    }
    expect(".");
    Formula body = formula();
    return q == Quantifier::Forall ? fx::forall(std::move(var), std::move(d), std::move(body))
                                   : fx::exists(std::move(var), std::move(d), std::move(body));
  }

  Formula iff() {
    Formula f = implication();
    while (accept("<->")) f = fx::iff(std::move(f), implication());
    return f;
  }

  Formula implication() {
    Formula f = disjunction();
    if (accept("->")) return fx::implies(std::move(f), implication());
    return f;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept("|")) f = fx::lor(std::move(f), conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept("&")) f = fx::land(std::move(f), unary());
    return f;
  }

  Formula unary() {
    if (accept("~")) return fx::lnot(unary());
    if (peek_keyword("forall") || peek_keyword("exists")) return quantified();
    return primary();
  }

  Formula primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    if (accept("(")) {
      Formula f = formula();
      expect(")");
      return f;
    }
    std::string name = identifier();
    if (!accept("(")) return fx::var(std::move(name));
    IndexTerm index;
    if (at_digit()) {
      index = IndexTerm::literal(integer());
    } else {
      index.variable = identifier();
      if (accept("+"))
        index.offset = integer();
      else if (accept("-"))
        index.offset = -integer();
    }
    expect(")");
    return fx::atom(std::move(name), std::move(index));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the ASCII formula syntax: `~ & | -> <->`, `forall n in D.`,
/// `exists n in 1..9.`, atoms `S(n)`, `S(n+1)`, `S(3)` and propositional
/// variables. Throws SyntaxError carrying the failing offset.
inline Formula parse_formula(std::string_view text) { return detail::FormulaParser(text).parse(); }

}  // namespace soritic
