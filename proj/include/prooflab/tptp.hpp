#pragma once

// TPTP export: each theory member becomes a fof axiom, the objective the
// conjecture. Propositional atoms p1, p2, ... are emitted as 0-ary
// predicates; formula bodies are fully parenthesized, so no assumptions
// about TPTP operator binding are needed.

#include <span>
#include <sstream>
#include <string>

#include "prooflab/formula.hpp"

namespace prooflab {

inline std::string tptp_formula(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Var: return "p" + std::to_string(f.var_index());
    case Formula::Kind::Falsum: return "$false";
    case Formula::Kind::Not: return "~ " + tptp_formula(f.child());
    case Formula::Kind::Binary: {
      const char* op = "?";
      switch (f.op()) {
        case Connective::Iff: op = "<=>"; break;
        case Connective::Implies: op = "=>"; break;
        case Connective::And: op = "&"; break;
        case Connective::Or: op = "|"; break;
      }
      return "( " + tptp_formula(f.lhs()) + " " + op + " " + tptp_formula(f.rhs()) + " )";
    }
  }
  return "$false";
}

inline std::string export_tptp(std::span<const Formula> theory, const Formula& goal,
                               std::string_view name = "case") {
  std::ostringstream os;
  os << "% prooflab export: " << name << "\n";
  for (std::size_t i = 0; i < theory.size(); ++i)
    os << "fof(axiom_" << i + 1 << ", axiom, " << tptp_formula(theory[i]) << ").\n";
  os << "fof(goal, conjecture, " << tptp_formula(goal) << ").\n";
  return os.str();
}

} // namespace prooflab
