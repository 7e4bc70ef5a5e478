#pragma once

// Test oracle: exhaustive search over raw proof objects. Lines are generated
// from (formula x justification x references x depth) tuples, filtered only
// by the proof checker, so the space is exactly "everything the checker
// accepts over the given formula universe". Deliberately brutal; keep the
// universes tiny.

#include <optional>
#include <vector>

#include "prooflab/proof.hpp"

namespace prooflab::testing {

class ProofEnumOracle {
 public:
  ProofEnumOracle(std::vector<Formula> theory, Formula goal, DeductionMode mode,
                  std::vector<Formula> universe)
      : theory_(std::move(theory)), goal_(std::move(goal)), mode_(mode),
        universe_(std::move(universe)) {}

  // Least line count of any checker-valid proof with at most max_lines lines.
  std::optional<int> min_proof_length(int max_lines) {
    for (int target = 1; target <= max_lines; ++target) {
      proof_.lines.clear();
      if (extend(target)) return target;
    }
    return std::nullopt;
  }

  std::uint64_t checks() const { return checks_; }

 private:
  bool complete() const {
    return proof_.lines.back().depth == 0 && proof_.lines.back().formula == goal_;
  }

  bool extend(int target) {
    const int len = static_cast<int>(proof_.lines.size());
    if (len == target) return complete();
    const int prev_depth = len == 0 ? 0 : proof_.lines.back().depth;

    static constexpr Justification kAll[] = {
        Justification::Premise,       Justification::Assumption,
        Justification::Reiteration,   Justification::AndIntro,
        Justification::AndElimLeft,   Justification::AndElimRight,
        Justification::OrIntroLeft,   Justification::OrIntroRight,
        Justification::OrElim,        Justification::ImpliesIntro,
        Justification::ImpliesElim,   Justification::IffIntro,
        Justification::IffElimLeft,   Justification::IffElimRight,
        Justification::NotIntro,      Justification::NotElim,
        Justification::FalsumElim,    Justification::DoubleNegElim,
    };

    for (int depth = 0; depth <= prev_depth + 1; ++depth)
      for (Justification j : kAll)
        for (const Formula& f : universe_) {
          ProofLine ln{f, j, {}, depth};
          if (!try_refs(ln, arity(j), len, target)) continue;
          return true;
        }
    return false;
  }

  static int arity(Justification j) {
    switch (j) {
      case Justification::Premise:
      case Justification::Assumption: return 0;
      case Justification::Reiteration:
      case Justification::AndElimLeft:
      case Justification::AndElimRight:
      case Justification::OrIntroLeft:
      case Justification::OrIntroRight:
      case Justification::FalsumElim:
      case Justification::DoubleNegElim: return 1;
      case Justification::AndIntro:
      case Justification::ImpliesElim:
      case Justification::IffElimLeft:
      case Justification::IffElimRight:
      case Justification::NotElim:
      case Justification::ImpliesIntro:
      case Justification::NotIntro: return 2;
      case Justification::IffIntro: return 4;
      case Justification::OrElim: return 5;
    }
    return 0;
  }

  // Enumerates every refs tuple of the given arity over [1..len] and recurses
  // on checker-approved lines. Returns true once a full proof is found.
  bool try_refs(ProofLine& ln, int todo, int len, int target) {
    if (todo == 0) {
      proof_.lines.push_back(ln);
      ++checks_;
      bool ok = check_proof_lines(proof_, theory_, mode_);
      bool found = ok && extend(target);
      proof_.lines.pop_back();
      return found;
    }
    for (int r = 1; r <= len; ++r) {
      ln.refs.push_back(r);
      if (try_refs(ln, todo - 1, len, target)) return true;
      ln.refs.pop_back();
    }
    return false;
  }

  std::vector<Formula> theory_;
  Formula goal_;
  DeductionMode mode_;
  std::vector<Formula> universe_;
  Proof proof_;
  std::uint64_t checks_ = 0;
};

} // namespace prooflab::testing
