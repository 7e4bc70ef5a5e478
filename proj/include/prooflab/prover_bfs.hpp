#pragma once

// ── prover_bfs.hpp ──────────────────────────────────────────────────────────
// Exact shortest-proof search for the Fitch system in proof.hpp.
//
// The search explores proof prefixes in strictly increasing total line count
// L = 1, 2, ...; the first completed proof therefore has minimal length
// within the searched space, and D equals its line count, premises included.
// Entailment is decided by truth tables up front: non-entailed goals return
// NotEntailed without search.
//
// Candidate formulas (assumptions, disjunction arms, falsum-elimination
// conclusions, introduction targets) come from the subformula closure of the
// premises and the goal, extended with single negations of closure members,
// double negations (classical mode, for proof by contradiction) and falsum.
// The intermediate-formula depth cap from the budget filters this universe;
// when the cap removed anything, a Proved result is re-run with cap+1 and
// flagged minimal only if the length agrees. When the cap removed nothing
// the re-run would be identical, so the flag is set directly.
//
// Beyond the universe restriction, the search prunes only proof shapes that
// are always avoidable in some equally short proof:
//   - premises form a prefix of the proof, cited ones only, in theory order;
//   - no line repeats a formula already accessible at the same depth
//     (re-use in shallower scopes is covered by reiteration moves);
//   - a line below the current depth must discharge (or case-split on) a
//     subproof; abandoning an open subproof without citing it would leave
//     dead lines;
//   - adjacent independent same-depth lines appear in one canonical order.
// The test suite cross-checks these prunes against a prune-free mode and an
// enumeration oracle over raw proof objects.
// ────────────────────────────────────────────────────────────────────────────

#include <algorithm>
#include <chrono>
#include <span>
#include <unordered_set>
#include <vector>

#include "prooflab/prover.hpp"
#include "prooflab/semantics.hpp"

namespace prooflab {

struct SearchTuning {
  bool dedup_prune = true;
  bool ordering_prune = true;
  bool premises_first = true;
};

namespace detail {

class MinProofSearch {
 public:
  MinProofSearch(std::span<const Formula> theory, const Formula& goal, DeductionMode mode,
                 const ProverBudget& budget, const SearchTuning& tuning)
      : goal_(goal), mode_(mode), budget_(budget), tuning_(tuning) {
    for (const Formula& t : theory) {
      bool dup = false;
      for (const Formula& u : theory_) dup = dup || u == t;
      if (!dup) theory_.push_back(t);
    }
    int d = goal.depth();
    for (const Formula& t : theory_) d = std::max(d, t.depth());
    default_cap_ = d + 1;
  }

  ProverOutcome run() {
    validate(budget_);
    const auto start = std::chrono::steady_clock::now();
    deadline_ = start + std::chrono::milliseconds(budget_.time_limit_ms);

    ProverOutcome out;
    int var_count = max_variable(theory_, &goal_);
    if (!entails(theory_, goal_, var_count)) {
      out.status = OutcomeStatus::NotEntailed;
      out.diagnostics = "refuted by truth tables";
      return out;
    }

    const bool auto_cap = budget_.max_formula_depth == 0;
    int cap = auto_cap ? default_cap_ : budget_.max_formula_depth;
    out = search_with_cap(cap);
    bool filtered = cap_filtered_;

    // The line budget can run out merely because the cap pruned a needed
    // candidate. In auto mode, widen the cap and retry; the candidate
    // universe stops growing two levels above the inputs, so this ends.
    while (auto_cap && out.status == OutcomeStatus::BudgetExhausted && filtered &&
           !budget_hit_) {
      ++cap;
      out = search_with_cap(cap);
      filtered = cap_filtered_;
    }

    if (out.status == OutcomeStatus::Proved) {
      // Minimality audit: a result at an unfiltered cap is exact over the
      // universe; otherwise re-run one cap wider and compare lengths,
      // adopting any shorter proof it finds.
      if (!filtered) {
        out.minimal = true;
      } else {
        for (;;) {
          ProverOutcome redo = search_with_cap(cap + 1);
          bool redo_filtered = cap_filtered_;
          if (redo.status == OutcomeStatus::Proved && redo.length < out.length) {
            out = redo;
            ++cap;
            if (!redo_filtered) {
              out.minimal = true;
              break;
            }
            continue;
          }
          out.minimal = redo.status == OutcomeStatus::Proved && redo.length == out.length;
          if (!out.minimal)
            out.diagnostics = "depth-cap audit inconclusive (" +
                              std::string(outcome_status_name(redo.status)) + ")";
          break;
        }
      }
    }
    out.stats.states = states_;
    out.stats.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    return out;
  }

 private:
  struct Line {
    Formula f;
    Justification j = Justification::Premise;
    std::array<int, 5> refs{};
    int nrefs = 0;
    int depth = 0;
  };
  struct Move {
    Formula f;
    Justification j = Justification::Premise;
    std::array<int, 5> refs{};
    int nrefs = 0;
    int depth = 0;
  };

  // ── universe ──────────────────────────────────────────────────────────────

  void build_universe(int cap) {
    cap_ = cap;
    cap_filtered_ = false;
    universe_.clear();
    universe_set_.clear();
    conjunctions_.clear();
    disjunctions_.clear();
    implications_.clear();
    iffs_.clear();
    asm_cands_.clear();

    std::vector<Formula> closure;
    for (const Formula& t : theory_) collect_subformulas(t, closure);
    collect_subformulas(goal_, closure);

    auto add = [&](const Formula& f) {
      if (f.depth() > cap_) {
        cap_filtered_ = true;
        return;
      }
      if (universe_set_.insert(f).second) universe_.push_back(f);
    };
    for (const Formula& f : closure) add(f);
    for (const Formula& f : closure) add(Formula::negation(f));
    if (mode_ == DeductionMode::Classical)
      for (const Formula& f : closure) add(Formula::negation(Formula::negation(f)));
    add(Formula::falsum());

    for (const Formula& u : universe_) {
      if (u.is_binary_op(Connective::And)) conjunctions_.push_back(u);
      if (u.is_binary_op(Connective::Or)) disjunctions_.push_back(u);
      if (u.is_binary_op(Connective::Implies)) implications_.push_back(u);
      if (u.is_binary_op(Connective::Iff)) iffs_.push_back(u);
    }
    auto cand = [&](const Formula& f) {
      if (f.depth() > cap_) {
        cap_filtered_ = true;
        return;
      }
      for (const Formula& g : asm_cands_)
        if (g == f) return;
      asm_cands_.push_back(f);
    };
    for (const Formula& u : implications_) cand(u.lhs());
    for (const Formula& u : iffs_) {
      cand(u.lhs());
      cand(u.rhs());
    }
    for (const Formula& u : disjunctions_) {
      cand(u.lhs());
      cand(u.rhs());
    }
    for (const Formula& u : universe_)
      if (u.is_negation()) cand(u.child());
  }

  bool in_universe(const Formula& f) const { return universe_set_.count(f) > 0; }

  // ── state inspection ──────────────────────────────────────────────────────

  int line_count() const { return static_cast<int>(lines_.size()); }
  int current_depth() const { return static_cast<int>(scope_.size()); }

  bool accessible(int j, int target_depth) const {
    const Line& lj = lines_[j - 1];
    if (lj.depth > target_depth) return false;
    for (int k = j + 1; k <= line_count(); ++k) {
      const Line& lk = lines_[k - 1];
      if (lk.depth < lj.depth) return false;
      if (lk.j == Justification::Assumption && lk.depth <= lj.depth) return false;
    }
    return true;
  }

  int find_accessible(const Formula& f, int target_depth) const {
    for (int j = 1; j <= line_count(); ++j)
      if (lines_[j - 1].f == f && accessible(j, target_depth)) return j;
    return 0;
  }

  bool dup_at_depth(const Formula& f, int target_depth) const {
    if (!tuning_.dedup_prune) return false;
    for (int j = 1; j <= line_count(); ++j)
      if (lines_[j - 1].depth == target_depth && lines_[j - 1].f == f &&
          accessible(j, target_depth))
        return true;
    return false;
  }

  // Subproof blocks at depth target_depth+1 citable by a new line appended at
  // target_depth. fn(first, last, hypothesis, conclusion), 1-based.
  template <class Fn>
  void for_each_block(int target_depth, Fn&& fn) const {
    const int db = target_depth + 1;
    for (int f = 1; f <= line_count(); ++f) {
      const Line& head = lines_[f - 1];
      if (head.j != Justification::Assumption || head.depth != db) continue;
      for (int l = f; l <= line_count(); ++l) {
        if (l > f) {
          const Line& lk = lines_[l - 1];
          if (lk.depth < db || (lk.j == Justification::Assumption && lk.depth <= db)) break;
        }
        if (lines_[l - 1].depth != db) continue;
        bool open = true;
        for (int k = l + 1; k <= line_count() && open; ++k) {
          const Line& lk = lines_[k - 1];
          if (lk.depth < target_depth) open = false;
          if (lk.j == Justification::Assumption && lk.depth <= target_depth) open = false;
        }
        if (open) fn(f, l, head.f, lines_[l - 1].f);
      }
    }
  }

  // ── move generation ───────────────────────────────────────────────────────

  void push_move(std::vector<Move>& out, Move m) {
    if (m.f.depth() > cap_ && m.f != goal_) {
      cap_filtered_ = true;
      return;
    }
    const bool is_asm = m.j == Justification::Assumption;
    for (const Move& seen : out)
      if (seen.depth == m.depth && (seen.j == Justification::Assumption) == is_asm &&
          seen.f == m.f)
        return;
    if (!order_ok(m)) return;
    out.push_back(std::move(m));
  }

  bool order_ok(const Move& m) const {
    if (!tuning_.ordering_prune || lines_.empty()) return true;
    const Line& last = lines_.back();
    if (last.j == Justification::Assumption || m.j == Justification::Assumption) return true;
    // Premises already follow the canonical theory order.
    if (last.j == Justification::Premise || m.j == Justification::Premise) return true;
    if (m.depth != last.depth) return true;
    for (int i = 0; i < m.nrefs; ++i)
      if (m.refs[i] == line_count()) return true;
    // Canonical order for adjacent independent lines.
    if (static_cast<int>(m.j) != static_cast<int>(last.j))
      return static_cast<int>(m.j) >= static_cast<int>(last.j);
    for (int i = 0; i < std::min(m.nrefs, last.nrefs); ++i)
      if (m.refs[i] != last.refs[i]) return m.refs[i] >= last.refs[i];
    if (m.nrefs != last.nrefs) return m.nrefs >= last.nrefs;
    if (m.f.hash() != last.f.hash()) return m.f.hash() >= last.f.hash();
    return true;
  }

  static Move make(const Formula& f, Justification j, std::initializer_list<int> refs, int depth) {
    Move m;
    m.f = f;
    m.j = j;
    m.depth = depth;
    for (int r : refs) m.refs[m.nrefs++] = r;
    return m;
  }

  void generate(std::vector<Move>& out) {
    out.clear();
    const int d = current_depth();
    const bool phase = premise_count_ == line_count();

    // Premises: a canonical prefix in theory order.
    if (phase || (!tuning_.premises_first && d == 0)) {
      std::size_t start = 0;
      if (tuning_.premises_first && premise_count_ > 0) {
        const Formula& last = lines_[premise_count_ - 1].f;
        for (std::size_t i = 0; i < theory_.size(); ++i)
          if (theory_[i] == last) start = i + 1;
      }
      for (std::size_t i = start; i < theory_.size(); ++i)
        if (!dup_at_depth(theory_[i], 0))
          push_move(out, make(theory_[i], Justification::Premise, {}, 0));
    }
    if (lines_.empty()) {
      for (const Formula& a : asm_cands_)
        push_move(out, make(a, Justification::Assumption, {}, 1));
      return;
    }

    // Discharges that close the innermost open subproof (depth d-1) and
    // discharges citing already-closed subproofs (depth d).
    if (d >= 1) gen_discharges(out, d - 1);
    gen_discharges(out, d);

    gen_forward(out, d);

    // Open a nested subproof, or a sibling one after closing the current.
    for (const Formula& a : asm_cands_)
      push_move(out, make(a, Justification::Assumption, {}, d + 1));
    if (d >= 1) {
      const Formula hyp = lines_[scope_.back() - 1].f;
      const Formula concl = lines_.back().f;
      for (const Formula& disj : disjunctions_) {
        if (disj.lhs() == hyp) push_move(out, make(disj.rhs(), Justification::Assumption, {}, d));
        if (disj.rhs() == hyp) push_move(out, make(disj.lhs(), Justification::Assumption, {}, d));
      }
      for (const Formula& iff : iffs_)
        if ((iff.lhs() == hyp && iff.rhs() == concl) || (iff.rhs() == hyp && iff.lhs() == concl))
          push_move(out, make(concl, Justification::Assumption, {}, d));
    }
  }

  void gen_forward(std::vector<Move>& out, int d) {
    std::vector<int> acc;
    for (int j = 1; j <= line_count(); ++j)
      if (accessible(j, d)) acc.push_back(j);

    auto fresh = [&](const Formula& f) { return find_accessible(f, d) == 0; };

    for (int j : acc) {
      const Formula& f = lines_[j - 1].f;
      if (lines_[j - 1].depth < d && !dup_at_depth(f, d))
        push_move(out, make(f, Justification::Reiteration, {j}, d));

      if (f.is_binary_op(Connective::And)) {
        if (fresh(f.lhs())) push_move(out, make(f.lhs(), Justification::AndElimLeft, {j}, d));
        if (fresh(f.rhs())) push_move(out, make(f.rhs(), Justification::AndElimRight, {j}, d));
      } else if (f.is_binary_op(Connective::Implies)) {
        int k = find_accessible(f.lhs(), d);
        if (k && fresh(f.rhs()))
          push_move(out, make(f.rhs(), Justification::ImpliesElim, {j, k}, d));
      } else if (f.is_binary_op(Connective::Iff)) {
        int k = find_accessible(f.lhs(), d);
        if (k && fresh(f.rhs()))
          push_move(out, make(f.rhs(), Justification::IffElimLeft, {j, k}, d));
        k = find_accessible(f.rhs(), d);
        if (k && fresh(f.lhs()))
          push_move(out, make(f.lhs(), Justification::IffElimRight, {j, k}, d));
      } else if (f.is_negation()) {
        if (mode_ == DeductionMode::Classical && f.child().is_negation() &&
            fresh(f.child().child()))
          push_move(out, make(f.child().child(), Justification::DoubleNegElim, {j}, d));
        int k = find_accessible(f.child(), d);
        if (k && fresh(Formula::falsum()))
          push_move(out, make(Formula::falsum(), Justification::NotElim, {k, j}, d));
      } else if (f.is_falsum()) {
        for (const Formula& c : universe_)
          if (!c.is_falsum() && fresh(c))
            push_move(out, make(c, Justification::FalsumElim, {j}, d));
      }
    }

    for (const Formula& c : conjunctions_) {
      if (!fresh(c)) continue;
      int a = find_accessible(c.lhs(), d);
      int b = a ? find_accessible(c.rhs(), d) : 0;
      if (a && b) push_move(out, make(c, Justification::AndIntro, {a, b}, d));
    }
    for (const Formula& c : disjunctions_) {
      if (!fresh(c)) continue;
      if (int a = find_accessible(c.lhs(), d))
        push_move(out, make(c, Justification::OrIntroLeft, {a}, d));
      else if (int b = find_accessible(c.rhs(), d))
        push_move(out, make(c, Justification::OrIntroRight, {b}, d));
    }
  }

  void gen_discharges(std::vector<Move>& out, int dt) {
    struct Block {
      int first, last;
      Formula hyp, concl;
    };
    std::vector<Block> blocks;
    for_each_block(dt, [&](int f, int l, const Formula& hyp, const Formula& concl) {
      blocks.push_back({f, l, hyp, concl});
    });
    if (blocks.empty()) return;

    for (const Block& b : blocks) {
      Formula imp = Formula::binary(Connective::Implies, b.hyp, b.concl);
      if (in_universe(imp) && !dup_at_depth(imp, dt))
        push_move(out, make(imp, Justification::ImpliesIntro, {b.first, b.last}, dt));
      if (b.concl.is_falsum()) {
        Formula neg = Formula::negation(b.hyp);
        if (in_universe(neg) && !dup_at_depth(neg, dt))
          push_move(out, make(neg, Justification::NotIntro, {b.first, b.last}, dt));
      }
    }

    for (const Block& b1 : blocks)
      for (const Block& b2 : blocks) {
        if (b1.concl == b2.hyp && b2.concl == b1.hyp) {
          Formula iff = Formula::binary(Connective::Iff, b1.hyp, b1.concl);
          if (in_universe(iff) && !dup_at_depth(iff, dt))
            push_move(out,
                      make(iff, Justification::IffIntro, {b1.first, b1.last, b2.first, b2.last},
                           dt));
        }
        if (b1.concl == b2.concl) {
          for (const Formula& disj : disjunctions_) {
            if (disj.lhs() != b1.hyp || disj.rhs() != b2.hyp) continue;
            int dj = find_accessible(disj, dt);
            if (dj && !dup_at_depth(b1.concl, dt))
              push_move(out, make(b1.concl, Justification::OrElim,
                                  {dj, b1.first, b1.last, b2.first, b2.last}, dt));
          }
        }
      }
  }

  // ── search ────────────────────────────────────────────────────────────────

  bool over_budget() {
    if (budget_hit_) return true;
    if (states_ >= budget_.max_states) {
      budget_hit_ = true;
      budget_reason_ = "state budget";
      return true;
    }
    if ((states_ & 0x7ff) == 0 && std::chrono::steady_clock::now() > deadline_) {
      budget_hit_ = true;
      budget_reason_ = "time limit";
      return true;
    }
    return false;
  }

  void apply(const Move& m) {
    Line ln;
    ln.f = m.f;
    ln.j = m.j;
    ln.refs = m.refs;
    ln.nrefs = m.nrefs;
    ln.depth = m.depth;
    lines_.push_back(ln);
    if (m.j == Justification::Assumption) {
      while (static_cast<int>(scope_.size()) >= m.depth) scope_.pop_back();
      scope_.push_back(line_count());
    } else {
      while (static_cast<int>(scope_.size()) > m.depth) scope_.pop_back();
    }
    if (m.j == Justification::Premise) ++premise_count_;
  }

  bool dfs() {
    if (over_budget()) return false;
    std::vector<Move> moves;
    generate(moves);

    for (const Move& m : moves)
      if (m.depth == 0 && m.f == goal_) {
        apply(m);
        ++states_;
        return true;
      }

    for (const Move& m : moves) {
      if (over_budget()) return false;
      std::vector<int> saved_scope = scope_;
      apply(m);
      ++states_;
      int lb = std::max(1, current_depth());
      if (line_count() + lb <= limit_ && dfs()) return true;
      lines_.pop_back();
      if (m.j == Justification::Premise) --premise_count_;
      scope_ = std::move(saved_scope);
    }
    return false;
  }

  ProverOutcome search_with_cap(int cap) {
    build_universe(cap);
    ProverOutcome out;
    for (int limit = 1; limit <= budget_.max_lines; ++limit) {
      limit_ = limit;
      lines_.clear();
      scope_.clear();
      premise_count_ = 0;
      out.stats.line_target = limit;
      if (dfs()) {
        out.status = OutcomeStatus::Proved;
        out.proof = to_proof();
        out.length = line_count();
        out.stats.states = states_;
        std::string why;
        if (!check_proof(*out.proof, theory_, goal_, mode_, &why))
          throw std::logic_error("search produced an invalid proof: " + why);
        return out;
      }
      if (budget_hit_) break;
    }
    out.status = OutcomeStatus::BudgetExhausted;
    out.stats.states = states_;
    out.diagnostics = budget_hit_ ? budget_reason_
                                  : "no proof within " + std::to_string(budget_.max_lines) +
                                        " lines at depth cap " + std::to_string(cap);
    out.diagnostics += " (states=" + std::to_string(states_) +
                       ", line target=" + std::to_string(out.stats.line_target) + ")";
    return out;
  }

  Proof to_proof() const {
    Proof p;
    for (const Line& ln : lines_) {
      ProofLine pl;
      pl.formula = ln.f;
      pl.just = ln.j;
      pl.depth = ln.depth;
      for (int i = 0; i < ln.nrefs; ++i) pl.refs.push_back(ln.refs[i]);
      p.lines.push_back(std::move(pl));
    }
    return p;
  }

  std::vector<Formula> theory_;
  Formula goal_;
  DeductionMode mode_;
  ProverBudget budget_;
  SearchTuning tuning_;
  int default_cap_ = 1;

  int cap_ = 1;
  bool cap_filtered_ = false;
  std::vector<Formula> universe_;
  std::unordered_set<Formula, FormulaHash> universe_set_;
  std::vector<Formula> conjunctions_, disjunctions_, implications_, iffs_;
  std::vector<Formula> asm_cands_;

  std::vector<Line> lines_;
  std::vector<int> scope_;
  int premise_count_ = 0;
  int limit_ = 0;
  std::uint64_t states_ = 0;
  bool budget_hit_ = false;
  std::string budget_reason_;
  std::chrono::steady_clock::time_point deadline_;
};

} // namespace detail

// Shortest-proof search: strictly increasing line counts, truth-table
// pre-filtering, depth-cap audit for the minimal flag.
inline ProverOutcome min_proof_bfs(std::span<const Formula> theory, const Formula& goal,
                                   DeductionMode mode, const ProverBudget& budget,
                                   const SearchTuning& tuning = {}) {
  detail::MinProofSearch search(theory, goal, mode, budget, tuning);
  return search.run();
}

} // namespace prooflab
