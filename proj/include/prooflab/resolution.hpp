#pragma once

// ── resolution.hpp ──────────────────────────────────────────────────────────
// Propositional refutation prover: clausify the theory plus the negated goal
// (plain distributive CNF, no definitional variables at these sizes), then run a
// given-clause loop with binary resolution; factoring is implicit in the
// set representation of clauses. Smallest clauses are processed first, ties
// by insertion order, so runs are deterministic.
//
// On deriving the empty clause the refutation object is the parent DAG of
// the empty clause; its length D counts the used input clauses plus all
// resolvents, the empty clause included. Saturation without the empty
// clause decides NotEntailed. No minimality is claimed anywhere.
// ────────────────────────────────────────────────────────────────────────────

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <vector>

#include "prooflab/prover.hpp"
#include "prooflab/semantics.hpp"

namespace prooflab {

// A clause is a sorted, duplicate-free set of literals; +v / -v encode p_v
// and its negation. The empty clause is the contradiction.
struct Clause {
  std::vector<int> lits;

  bool empty() const { return lits.empty(); }
  int size() const { return static_cast<int>(lits.size()); }
  bool operator<(const Clause& o) const { return lits < o.lits; }
  bool operator==(const Clause& o) const { return lits == o.lits; }
};

namespace detail {

inline Clause normalize_clause(std::vector<int> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return Clause{std::move(lits)};
}

inline bool tautological(const Clause& c) {
  for (int l : c.lits)
    if (l > 0 && std::binary_search(c.lits.begin(), c.lits.end(), -l)) return true;
  return false;
}

inline std::vector<Clause> merge_clause_sets(std::vector<Clause> a, const std::vector<Clause>& b) {
  for (const Clause& c : b) a.push_back(c);
  return a;
}

// Clauses of (A or B) from the clauses of A and B: pairwise unions.
inline std::vector<Clause> distribute(const std::vector<Clause>& a, const std::vector<Clause>& b) {
  std::vector<Clause> out;
  for (const Clause& ca : a)
    for (const Clause& cb : b) {
      std::vector<int> lits = ca.lits;
      lits.insert(lits.end(), cb.lits.begin(), cb.lits.end());
      out.push_back(normalize_clause(std::move(lits)));
    }
  return out;
}

inline std::vector<Clause> cnf_pos(const Formula& f);

inline std::vector<Clause> cnf_neg(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Var: return {Clause{{-f.var_index()}}};
    case Formula::Kind::Falsum: return {};  // ~# is valid
    case Formula::Kind::Not: return cnf_pos(f.child());
    case Formula::Kind::Binary:
      switch (f.op()) {
        case Connective::And: return distribute(cnf_neg(f.lhs()), cnf_neg(f.rhs()));
        case Connective::Or: return merge_clause_sets(cnf_neg(f.lhs()), cnf_neg(f.rhs()));
        case Connective::Implies: return merge_clause_sets(cnf_pos(f.lhs()), cnf_neg(f.rhs()));
        case Connective::Iff:
          // ~(a<->b) = (a | b) & (~a | ~b)
          return merge_clause_sets(distribute(cnf_pos(f.lhs()), cnf_pos(f.rhs())),
                                   distribute(cnf_neg(f.lhs()), cnf_neg(f.rhs())));
      }
  }
  return {};
}

inline std::vector<Clause> cnf_pos(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Var: return {Clause{{f.var_index()}}};
    case Formula::Kind::Falsum: return {Clause{}};
    case Formula::Kind::Not: return cnf_neg(f.child());
    case Formula::Kind::Binary:
      switch (f.op()) {
        case Connective::And: return merge_clause_sets(cnf_pos(f.lhs()), cnf_pos(f.rhs()));
        case Connective::Or: return distribute(cnf_pos(f.lhs()), cnf_pos(f.rhs()));
        case Connective::Implies: return distribute(cnf_neg(f.lhs()), cnf_pos(f.rhs()));
        case Connective::Iff:
          return merge_clause_sets(distribute(cnf_neg(f.lhs()), cnf_pos(f.rhs())),
                                   distribute(cnf_neg(f.rhs()), cnf_pos(f.lhs())));
      }
  }
  return {};
}

} // namespace detail

// CNF of one formula: tautology-free, duplicate-free, deterministic order.
inline std::vector<Clause> clausify(const Formula& f) {
  std::vector<Clause> raw = detail::cnf_pos(f);
  std::vector<Clause> out;
  for (Clause& c : raw) {
    if (detail::tautological(c)) continue;
    bool dup = false;
    for (const Clause& d : out) dup = dup || d == c;
    if (!dup) out.push_back(std::move(c));
  }
  return out;
}

struct RefutationStep {
  Clause clause;
  int parent_a = 0, parent_b = 0;  // 1-based step ids; 0 = input clause
  int axiom_index = 0;             // 1-based theory member, -1 = negated goal
};

struct Refutation {
  std::vector<RefutationStep> steps;  // the used DAG, derivation order
  int length() const { return static_cast<int>(steps.size()); }
};

inline std::string render_clause(const Clause& c) {
  if (c.empty()) return "#";
  std::string out;
  for (std::size_t i = 0; i < c.lits.size(); ++i) {
    if (i) out += " | ";
    int l = c.lits[i];
    if (l < 0) out += "~";
    out += "p" + std::to_string(l < 0 ? -l : l);
  }
  return out;
}

inline std::string render_refutation(const Refutation& r) {
  std::ostringstream os;
  std::size_t width = std::to_string(r.steps.size()).size();
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const RefutationStep& s = r.steps[i];
    std::string num = std::to_string(i + 1);
    os << std::string(width - num.size(), ' ') << num << ' ' << render_clause(s.clause);
    if (s.parent_a > 0)
      os << "   [resolve " << s.parent_a << "," << s.parent_b << "]";
    else if (s.axiom_index == -1)
      os << "   [negated goal]";
    else
      os << "   [axiom " << s.axiom_index << "]";
    os << "\n";
  }
  return os.str();
}

inline ProverOutcome resolution_prove(std::span<const Formula> theory, const Formula& goal,
                                      const ProverBudget& budget,
                                      Refutation* refutation_out = nullptr) {
  validate(budget);
  const auto start = std::chrono::steady_clock::now();
  const auto deadline = start + std::chrono::milliseconds(budget.time_limit_ms);

  struct Entry {
    Clause clause;
    int parent_a = 0, parent_b = 0;
    int axiom_index = 0;
  };
  std::vector<Entry> arena;
  std::set<Clause> seen;
  std::set<std::pair<int, int>> queue;  // (clause size, id)
  std::vector<int> kept;

  ProverOutcome out;
  int empty_id = 0;

  auto add = [&](Clause c, int pa, int pb, int axiom) {
    if (detail::tautological(c)) return;
    if (!seen.insert(c).second) return;
    arena.push_back(Entry{std::move(c), pa, pb, axiom});
    int id = static_cast<int>(arena.size());
    queue.insert({arena.back().clause.size(), id});
    ++out.stats.states;
    if (arena.back().clause.empty() && empty_id == 0) empty_id = id;
  };

  for (std::size_t i = 0; i < theory.size(); ++i)
    for (Clause& c : clausify(theory[i])) add(std::move(c), 0, 0, static_cast<int>(i) + 1);
  for (Clause& c : clausify(Formula::negation(goal))) add(std::move(c), 0, 0, -1);

  bool budget_hit = false;
  while (empty_id == 0 && !queue.empty()) {
    if (out.stats.states >= budget.max_states ||
        std::chrono::steady_clock::now() > deadline) {
      budget_hit = true;
      break;
    }
    auto it = queue.begin();
    int given = it->second;
    queue.erase(it);
    const Clause g = arena[given - 1].clause;  // arena may grow below
    for (int k : kept) {
      const Clause c = arena[k - 1].clause;
      for (int l : g.lits) {
        if (!std::binary_search(c.lits.begin(), c.lits.end(), -l)) continue;
        std::vector<int> lits;
        for (int x : g.lits)
          if (x != l) lits.push_back(x);
        for (int x : c.lits)
          if (x != -l) lits.push_back(x);
        add(detail::normalize_clause(std::move(lits)), given, k, 0);
        if (empty_id != 0) break;
      }
      if (empty_id != 0) break;
    }
    kept.push_back(given);
  }

  out.stats.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();

  if (empty_id != 0) {
    // Extract the parent DAG of the empty clause, in derivation order.
    std::set<int> used;
    std::vector<int> stack{empty_id};
    while (!stack.empty()) {
      int id = stack.back();
      stack.pop_back();
      if (!used.insert(id).second) continue;
      if (arena[id - 1].parent_a > 0) {
        stack.push_back(arena[id - 1].parent_a);
        stack.push_back(arena[id - 1].parent_b);
      }
    }
    Refutation ref;
    std::map<int, int> renumber;
    for (int id = 1; id <= static_cast<int>(arena.size()); ++id) {
      if (!used.count(id)) continue;
      const Entry& e = arena[id - 1];
      RefutationStep step;
      step.clause = e.clause;
      step.axiom_index = e.axiom_index;
      if (e.parent_a > 0) {
        step.parent_a = renumber.at(e.parent_a);
        step.parent_b = renumber.at(e.parent_b);
      }
      renumber[id] = static_cast<int>(ref.steps.size()) + 1;
      ref.steps.push_back(std::move(step));
    }
    out.status = OutcomeStatus::Proved;
    out.length = ref.length();
    out.refutation_text = render_refutation(ref);
    if (refutation_out) *refutation_out = std::move(ref);
    return out;
  }

  if (budget_hit) {
    out.status = OutcomeStatus::BudgetExhausted;
    out.diagnostics = "given-clause loop stopped (clauses=" +
                      std::to_string(out.stats.states) + ", queue=" +
                      std::to_string(queue.size()) + ")";
    return out;
  }
  out.status = OutcomeStatus::NotEntailed;
  out.diagnostics = "saturated without the empty clause";
  return out;
}

} // namespace prooflab
