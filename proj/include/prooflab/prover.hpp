#pragma once

// Shared prover plumbing: budgets, outcomes, and the speed-up delta.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "prooflab/numeric.hpp"
#include "prooflab/proof.hpp"

namespace prooflab {

struct ProverBudget {
  int max_lines = 12;                   // largest proof length tried
  int max_formula_depth = 0;            // intermediate-formula cap; 0 = inputs' max depth + 1
  std::uint64_t max_states = 1'000'000; // search nodes / generated clauses
  std::int64_t time_limit_ms = 10'000;

  bool operator==(const ProverBudget&) const = default;
};

inline void validate(const ProverBudget& b) {
  if (b.max_lines < 1) throw std::invalid_argument("max_lines must be >= 1");
  if (b.max_formula_depth < 0) throw std::invalid_argument("max_formula_depth must be >= 0");
  if (b.max_states < 1) throw std::invalid_argument("max_states must be >= 1");
  if (b.time_limit_ms < 1) throw std::invalid_argument("time_limit_ms must be >= 1");
}

struct SearchStats {
  std::uint64_t states = 0;  // applied search steps or generated clauses
  int line_target = 0;       // deepest iterative-deepening target reached
  std::int64_t elapsed_ms = 0;
};

enum class OutcomeStatus : std::uint8_t { Proved, NotEntailed, BudgetExhausted };

inline const char* outcome_status_name(OutcomeStatus s) {
  switch (s) {
    case OutcomeStatus::Proved: return "proved";
    case OutcomeStatus::NotEntailed: return "not-entailed";
    case OutcomeStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

struct ProverOutcome {
  OutcomeStatus status = OutcomeStatus::NotEntailed;
  std::optional<Proof> proof;      // natural-deduction engine only
  std::string refutation_text;     // resolution engine only
  std::int64_t length = 0;         // D: lines of the found proof / refutation
  bool minimal = false;            // exact engine, cap audit passed
  SearchStats stats;
  std::string diagnostics;
};

// 1 - D_aug / D_base, exact.
inline Rational speedup_delta(std::int64_t d_base, std::int64_t d_aug) {
  if (d_base < 1) throw std::invalid_argument("speedup_delta: base length must be >= 1");
  if (d_aug < 1) throw std::invalid_argument("speedup_delta: augmented length must be >= 1");
  return Rational(1) - Rational(d_aug, d_base);
}

} // namespace prooflab
