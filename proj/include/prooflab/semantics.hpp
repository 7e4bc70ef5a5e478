#pragma once

// Truth-table semantics. A valuation assigns a truth value to each of the
// first m variables; bit i-1 of the word holds the value of p_i. Entailment
// and satisfiability scan all 2^m rows, which is the intended method at the
// variable counts this toolkit targets (m small, well under 20).

#include <span>
#include <stdexcept>
#include <vector>

#include "prooflab/formula.hpp"

namespace prooflab {

struct Valuation {
  std::uint32_t bits = 0;

  bool value(int var_index) const {
    return (bits >> (var_index - 1)) & 1u;
  }
};

inline bool evaluate(const Formula& f, Valuation v) {
  switch (f.kind()) {
    case Formula::Kind::Var: return v.value(f.var_index());
    case Formula::Kind::Falsum: return false;
    case Formula::Kind::Not: return !evaluate(f.child(), v);
    case Formula::Kind::Binary: {
      bool a = evaluate(f.lhs(), v);
      bool b = evaluate(f.rhs(), v);
      switch (f.op()) {
        case Connective::Iff: return a == b;
        case Connective::Implies: return !a || b;
        case Connective::And: return a && b;
        case Connective::Or: return a || b;
      }
      return false;
    }
  }
  return false;
}

inline int max_variable(std::span<const Formula> set, const Formula* extra = nullptr) {
  int m = extra ? extra->max_variable() : 0;
  for (const Formula& f : set) m = std::max(m, f.max_variable());
  return m;
}

// True iff every valuation over var_count variables satisfying all of
// `theory` also satisfies `goal`.
inline bool entails(std::span<const Formula> theory, const Formula& goal, int var_count) {
  if (var_count < 0 || var_count > 20)
    throw std::invalid_argument("entails: var_count out of supported range");
  const std::uint32_t rows = 1u << var_count;
  for (std::uint32_t bits = 0; bits < rows; ++bits) {
    Valuation v{bits};
    bool all = true;
    for (const Formula& f : theory) {
      if (!evaluate(f, v)) {
        all = false;
        break;
      }
    }
    if (all && !evaluate(goal, v)) return false;
  }
  return true;
}

inline bool entails(std::span<const Formula> theory, const Formula& goal) {
  return entails(theory, goal, max_variable(theory, &goal));
}

inline bool is_satisfiable(std::span<const Formula> set, int var_count) {
  if (var_count < 0 || var_count > 20)
    throw std::invalid_argument("is_satisfiable: var_count out of supported range");
  const std::uint32_t rows = 1u << var_count;
  for (std::uint32_t bits = 0; bits < rows; ++bits) {
    Valuation v{bits};
    bool all = true;
    for (const Formula& f : set) {
      if (!evaluate(f, v)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

inline bool is_satisfiable(std::span<const Formula> set) {
  return is_satisfiable(set, max_variable(set));
}

} // namespace prooflab
