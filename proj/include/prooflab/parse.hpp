#pragma once

// ── parse.hpp ───────────────────────────────────────────────────────────────
// Concrete syntax, ASCII:
//
//   variables   p1 p2 p3 ...
//   falsum      #
//   negation    ~a
//   binaries    a & b    a | b    a -> b    a <-> b
//
// Precedence, tightest first:  ~  &  |  ->  <->
// "&" and "|" associate left, "->" and "<->" associate right.
// render_formula emits minimal parentheses under these rules, so
// parse(render(f)) == f for every formula.
// ────────────────────────────────────────────────────────────────────────────

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "prooflab/formula.hpp"

namespace prooflab {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
        position(position) {}
  std::size_t position;
};

namespace detail {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "trailing input");
    return f;
  }

 private:
  // iff := imp ('<->' iff)?          (right associative)
  Formula parse_iff() {
    Formula left = parse_imp();
    skip_ws();
    if (match("<->")) return Formula::binary(Connective::Iff, left, parse_iff());
    return left;
  }

  // imp := or ('->' imp)?
  Formula parse_imp() {
    Formula left = parse_or();
    skip_ws();
    if (peek("->") && !peek("<->")) {
      pos_ += 2;
      return Formula::binary(Connective::Implies, left, parse_imp());
    }
    return left;
  }

  // or := and ('|' and)*             (left associative)
  Formula parse_or() {
    Formula left = parse_and();
    for (;;) {
      skip_ws();
      if (!match("|")) return left;
      left = Formula::binary(Connective::Or, left, parse_and());
    }
  }

  Formula parse_and() {
    Formula left = parse_unary();
    for (;;) {
      skip_ws();
      if (!match("&")) return left;
      left = Formula::binary(Connective::And, left, parse_unary());
    }
  }

  Formula parse_unary() {
    skip_ws();
    if (match("~")) return Formula::negation(parse_unary());
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      std::size_t open = pos_++;
      Formula f = parse_iff();
      skip_ws();
      if (!match(")")) throw ParseError(open, "unbalanced parenthesis");
      return f;
    }
    if (c == '#') {
      ++pos_;
      return Formula::falsum();
    }
    if (c == 'p') {
      std::size_t start = ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) throw ParseError(start - 1, "variable needs a numeric index");
      int idx = 0;
      for (std::size_t i = start; i < pos_; ++i) {
        idx = idx * 10 + (text_[i] - '0');
        if (idx > 1'000'000) throw ParseError(start, "variable index too large");
      }
      if (idx == 0) throw ParseError(start, "variable indices start at 1");
      return Formula::variable(idx);
    }
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(std::string_view tok) const {
    return text_.substr(pos_, tok.size()) == tok;
  }
  bool match(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline int precedence_of(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Var:
    case Formula::Kind::Falsum: return 6;
    case Formula::Kind::Not: return 5;
    case Formula::Kind::Binary:
      switch (f.op()) {
        case Connective::And: return 4;
        case Connective::Or: return 3;
        case Connective::Implies: return 2;
        case Connective::Iff: return 1;
      }
  }
  return 6;
}

inline void render_into(const Formula& f, std::string& out, int context, bool tight_side) {
  int prec = precedence_of(f);
  bool parens = prec < context || (prec == context && tight_side);
  if (parens) out.push_back('(');
  switch (f.kind()) {
    case Formula::Kind::Var:
      out.push_back('p');
      out += std::to_string(f.var_index());
      break;
    case Formula::Kind::Falsum:
      out.push_back('#');
      break;
    case Formula::Kind::Not:
      out.push_back('~');
      render_into(f.child(), out, 5, false);
      break;
    case Formula::Kind::Binary: {
      const char* tok = "?";
      bool right_assoc = false;
      switch (f.op()) {
        case Connective::And: tok = "&"; break;
        case Connective::Or: tok = "|"; break;
        case Connective::Implies: tok = "->"; right_assoc = true; break;
        case Connective::Iff: tok = "<->"; right_assoc = true; break;
      }
      render_into(f.lhs(), out, prec, right_assoc);
      out.push_back(' ');
      out += tok;
      out.push_back(' ');
      render_into(f.rhs(), out, prec, !right_assoc);
      break;
    }
  }
  if (parens) out.push_back(')');
}

} // namespace detail

inline Formula parse_formula(std::string_view text) {
  return detail::FormulaParser(text).parse();
}

inline std::string render_formula(const Formula& f) {
  std::string out;
  detail::render_into(f, out, 0, false);
  return out;
}

// Comma-separated list; a blank string yields the empty list.
inline std::vector<Formula> parse_formula_list(std::string_view text) {
  std::vector<Formula> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i != text.size() && text[i] != ',') continue;
    std::string_view piece = text.substr(start, i - start);
    if (piece.find_first_not_of(" \t") == std::string_view::npos)
      throw ParseError(start, "empty formula in list");
    out.push_back(parse_formula(piece));
    start = i + 1;
  }
  return out;
}

} // namespace prooflab
