#pragma once

// ── oracle_search.hpp ───────────────────────────────────────────────────────
// Speed-up-oracle-guided proof construction.
//
// Starting from the axiom list, each round enumerates every formula derivable
// by one forward rule application from the list (conjunction/biconditional/
// implication eliminations, double negation elimination in classical mode,
// and introductions whose conclusion lies in the candidate universe), keeps
// the candidates whose addition as an axiom strictly shortens the exact
// prover's minimal proof of the goal, picks one by pairwise comparison
// (adding j on top of i still helps while the reverse does not => j wins;
// both help => either is on a shortest path, keep the incumbent), appends it,
// and stops once the goal itself is appended. The chosen derivation steps
// then assemble into an ordinary forward proof whose length is reported.
//
// The delta oracle is exact: two calls to min_proof_bfs per question. Rounds
// in which no candidate tests positive stop the procedure with a diagnostic;
// the goal may genuinely need subproof-introducing rules that one-step
// forward derivation cannot reach.
// ────────────────────────────────────────────────────────────────────────────

#include <map>
#include <span>
#include <vector>

#include "prooflab/prover_bfs.hpp"

namespace prooflab {

struct OracleSearchResult {
  enum class Status { Completed, NoPositiveCandidate, BudgetExhausted };
  Status status = Status::Completed;
  std::vector<Formula> derived;  // appended formulas, in order
  std::optional<Proof> proof;    // reconstructed forward proof
  std::int64_t length = 0;       // lines of the reconstructed proof
  std::uint64_t oracle_calls = 0;
  std::string diagnostics;
};

namespace detail {

struct DerivationStep {
  Formula conclusion;
  Justification rule = Justification::ImpliesElim;
  std::vector<Formula> operands;  // cited formulas, checker reference order
};

inline std::vector<DerivationStep> one_step_derivations(const std::vector<Formula>& list,
                                                        const std::vector<Formula>& universe) {
  std::vector<DerivationStep> steps;
  auto in_list = [&](const Formula& f) {
    for (const Formula& g : list)
      if (g == f) return true;
    return false;
  };
  auto add = [&](DerivationStep s) {
    if (in_list(s.conclusion)) return;
    for (const DerivationStep& t : steps)
      if (t.conclusion == s.conclusion) return;
    steps.push_back(std::move(s));
  };

  for (const Formula& f : list) {
    if (f.is_binary_op(Connective::And)) {
      add({f.lhs(), Justification::AndElimLeft, {f}});
      add({f.rhs(), Justification::AndElimRight, {f}});
    } else if (f.is_binary_op(Connective::Implies)) {
      if (in_list(f.lhs())) add({f.rhs(), Justification::ImpliesElim, {f, f.lhs()}});
    } else if (f.is_binary_op(Connective::Iff)) {
      if (in_list(f.lhs())) add({f.rhs(), Justification::IffElimLeft, {f, f.lhs()}});
      if (in_list(f.rhs())) add({f.lhs(), Justification::IffElimRight, {f, f.rhs()}});
    } else if (f.is_negation() && f.child().is_negation()) {
      add({f.child().child(), Justification::DoubleNegElim, {f}});
    }
  }
  for (const Formula& u : universe) {
    if (u.is_binary_op(Connective::And)) {
      if (in_list(u.lhs()) && in_list(u.rhs()))
        add({u, Justification::AndIntro, {u.lhs(), u.rhs()}});
    } else if (u.is_binary_op(Connective::Or)) {
      if (in_list(u.lhs()))
        add({u, Justification::OrIntroLeft, {u.lhs()}});
      else if (in_list(u.rhs()))
        add({u, Justification::OrIntroRight, {u.rhs()}});
    }
  }
  return steps;
}

} // namespace detail

inline OracleSearchResult oracle_guided_search(std::span<const Formula> theory,
                                               const Formula& goal, DeductionMode mode,
                                               const ProverBudget& per_call_budget,
                                               int max_rounds = 32) {
  OracleSearchResult res;
  std::vector<Formula> axioms(theory.begin(), theory.end());
  if (!entails(axioms, goal, max_variable(axioms, &goal)))
    throw std::invalid_argument("oracle_guided_search requires an entailed goal");

  auto prove_length = [&](const std::vector<Formula>& t) -> std::optional<std::int64_t> {
    ++res.oracle_calls;
    ProverOutcome out = min_proof_bfs(t, goal, mode, per_call_budget);
    if (out.status != OutcomeStatus::Proved) return std::nullopt;
    return out.length;
  };

  // Candidate universe, as for the exact prover.
  std::vector<Formula> universe;
  for (const Formula& f : axioms) collect_subformulas(f, universe);
  collect_subformulas(goal, universe);
  {
    std::vector<Formula> closure = universe;
    auto add = [&](const Formula& f) {
      for (const Formula& g : universe)
        if (g == f) return;
      universe.push_back(f);
    };
    for (const Formula& f : closure) add(Formula::negation(f));
    if (mode == DeductionMode::Classical)
      for (const Formula& f : closure) add(Formula::negation(Formula::negation(f)));
  }

  std::vector<Formula> list = axioms;
  std::vector<detail::DerivationStep> chosen;

  auto finish_trivial = [&]() {
    Proof p;
    p.lines.push_back(ProofLine{goal, Justification::Premise, {}, 0});
    res.proof = std::move(p);
    res.length = 1;
    res.status = OracleSearchResult::Status::Completed;
    return res;
  };
  for (const Formula& f : axioms)
    if (f == goal) return finish_trivial();

  std::optional<std::int64_t> current = prove_length(list);
  if (!current) {
    res.status = OracleSearchResult::Status::BudgetExhausted;
    res.diagnostics = "prover budget exhausted on the starting list";
    return res;
  }

  for (int round = 0; round < max_rounds; ++round) {
    auto candidates = detail::one_step_derivations(list, universe);

    struct Positive {
      detail::DerivationStep step;
      std::int64_t with_length;
    };
    std::vector<Positive> positives;
    for (const auto& cand : candidates) {
      std::vector<Formula> with = list;
      with.push_back(cand.conclusion);
      auto len = prove_length(with);
      if (!len) {
        res.status = OracleSearchResult::Status::BudgetExhausted;
        res.diagnostics = "prover budget exhausted while scoring candidates";
        return res;
      }
      if (*len < *current) positives.push_back({cand, *len});
    }
    if (positives.empty()) {
      res.status = OracleSearchResult::Status::NoPositiveCandidate;
      res.diagnostics = "round " + std::to_string(round + 1) + ": " +
                        std::to_string(candidates.size()) +
                        " one-step derivations, none with positive speed-up";
      return res;
    }

    // Pairwise selection over the positively flagged candidates.
    Positive best = positives[0];
    for (std::size_t i = 1; i < positives.size(); ++i) {
      const Positive& challenger = positives[i];
      std::vector<Formula> both = list;
      both.push_back(best.step.conclusion);
      both.push_back(challenger.step.conclusion);
      auto len_both = prove_length(both);
      if (!len_both) {
        res.status = OracleSearchResult::Status::BudgetExhausted;
        res.diagnostics = "prover budget exhausted during pairwise comparison";
        return res;
      }
      bool challenger_helps = *len_both < best.with_length;
      bool best_helps = *len_both < challenger.with_length;
      if (challenger_helps && !best_helps) best = challenger;
    }

    list.push_back(best.step.conclusion);
    chosen.push_back(best.step);
    res.derived.push_back(best.step.conclusion);
    current = best.with_length;
    if (best.step.conclusion == goal) break;
  }

  if (res.derived.empty() || res.derived.back() != goal) {
    res.status = OracleSearchResult::Status::BudgetExhausted;
    res.diagnostics = "round limit reached before the goal was derived";
    return res;
  }

  // Assemble the forward proof: cited premises first, then the needed
  // derivation steps in order.
  std::vector<Formula> needed;
  auto mark = [&](const Formula& f, auto&& self) -> void {
    for (const Formula& g : needed)
      if (g == f) return;
    needed.push_back(f);
    for (const auto& step : chosen)
      if (step.conclusion == f)
        for (const Formula& op : step.operands) self(op, self);
  };
  mark(goal, mark);

  Proof p;
  std::vector<Formula> emitted;
  auto line_of = [&](const Formula& f) {
    for (std::size_t i = 0; i < emitted.size(); ++i)
      if (emitted[i] == f) return static_cast<int>(i) + 1;
    throw std::logic_error("oracle reconstruction lost an operand");
  };
  auto is_needed = [&](const Formula& f) {
    for (const Formula& g : needed)
      if (g == f) return true;
    return false;
  };
  for (const Formula& ax : axioms) {
    if (!is_needed(ax)) continue;
    bool dup = false;
    for (const Formula& e : emitted) dup = dup || e == ax;
    if (dup) continue;
    p.lines.push_back(ProofLine{ax, Justification::Premise, {}, 0});
    emitted.push_back(ax);
  }
  for (const auto& step : chosen) {
    if (!is_needed(step.conclusion)) continue;
    ProofLine ln{step.conclusion, step.rule, {}, 0};
    for (const Formula& op : step.operands) ln.refs.push_back(line_of(op));
    p.lines.push_back(std::move(ln));
    emitted.push_back(step.conclusion);
  }

  std::string why;
  if (!check_proof(p, axioms, goal, mode, &why))
    throw std::logic_error("oracle reconstruction produced an invalid proof: " + why);
  res.length = p.length();
  res.proof = std::move(p);
  res.status = OracleSearchResult::Status::Completed;
  return res;
}

} // namespace prooflab
