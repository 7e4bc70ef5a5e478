#pragma once

// ── experiment.hpp ──────────────────────────────────────────────────────────
// The sampling-to-results pipeline. A run samples x base theories and a list
// of objectives, extends every base with the objective-list prefixes
// (derived theories), pairs all resulting theories (matrix columns, grouped
// by family: base first, then increasing prefix) with all objectives (rows),
// filters out non-entailed cases by truth table, and hands the rest to the
// configured engine. Results are keyed by (column, row), so execution order
// (including the worker pool) never changes the output.
// ────────────────────────────────────────────────────────────────────────────

#include <atomic>
#include <chrono>
#include <istream>
#include <ostream>
#include <thread>

#include "prooflab/prover_bfs.hpp"
#include "prooflab/resolution.hpp"
#include "prooflab/sampling.hpp"

namespace prooflab {

enum class Engine : std::uint8_t { Exact, Resolution };

inline const char* engine_name(Engine e) {
  return e == Engine::Exact ? "exact" : "resolution";
}

struct ExperimentConfig {
  GenerationParams params;
  int theory_size = 2;       // j
  int theory_count = 3;      // x
  int objective_count = 4;   // o
  int derived_prefixes = 0;  // 0 = one prefix per retained objective
  DeductionMode mode = DeductionMode::Classical;
  Engine engine = Engine::Exact;
  ProverBudget budget;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string experiment_id = "1";

  bool operator==(const ExperimentConfig&) const = default;
};

inline void validate(const ExperimentConfig& c) {
  validate(c.params);
  validate(c.budget);
  if (c.theory_size < 1 || c.theory_count < 1 || c.objective_count < 1)
    throw std::invalid_argument("theory_size, theory_count, objective_count must be positive");
  if (c.derived_prefixes < 0 || c.derived_prefixes > c.objective_count)
    throw std::invalid_argument("derived_prefixes must lie in [0, objective_count]");
  if (c.threads < 1) throw std::invalid_argument("threads must be >= 1");
}

struct TheoryFamily {
  Theory base;
  std::vector<Theory> derived;  // derived[q-1] = base plus the first q objectives
  int first_column = 0;

  int width() const { return 1 + static_cast<int>(derived.size()); }
};

enum class CaseStatus : std::uint8_t { Pending, SkippedUnprovable };

struct Case {
  int column = 0;
  int row = 0;
  CaseStatus status = CaseStatus::Pending;
};

struct CaseGrid {
  std::vector<TheoryFamily> families;
  std::vector<Formula> objectives;
  std::vector<BigInt> objective_indices;
  std::vector<std::vector<Formula>> column_formulas;
  std::vector<Case> cases;  // column-major
  SamplingReport sampling;

  int columns() const { return static_cast<int>(column_formulas.size()); }
  int rows() const { return static_cast<int>(objectives.size()); }
  const Case& at(int col, int row) const { return cases[col * rows() + row]; }

  const Theory& theory_at(int col) const {
    for (const TheoryFamily& fam : families) {
      if (col == fam.first_column) return fam.base;
      if (col > fam.first_column && col < fam.first_column + fam.width())
        return fam.derived[col - fam.first_column - 1];
    }
    throw std::out_of_range("column out of range");
  }
  int family_of(int col) const {
    for (std::size_t i = 0; i < families.size(); ++i)
      if (col >= families[i].first_column && col < families[i].first_column + families[i].width())
        return static_cast<int>(i);
    throw std::out_of_range("column out of range");
  }
  int prefix_of(int col) const {
    return col - families[family_of(col)].first_column;
  }
  bool trivial_cell(int col, int row) const {
    // Constructed trivial instance: the row objective is part of the prefix
    // this derived column added.
    return row < prefix_of(col);
  }
};

inline CaseGrid build_cases(const FormulaSpace& space, const ExperimentConfig& cfg) {
  validate(cfg);
  CaseGrid grid;
  SampleSpec spec{cfg.theory_size, cfg.theory_count, cfg.objective_count, cfg.seed};
  auto theories = sample_theories(space, spec, &grid.sampling);
  grid.objectives = sample_objectives(space, spec, &grid.sampling, &grid.objective_indices);

  const int retained = static_cast<int>(grid.objectives.size());
  const int prefixes =
      cfg.derived_prefixes == 0 ? retained : std::min(cfg.derived_prefixes, retained);

  int col = 0;
  for (std::size_t i = 0; i < theories.size(); ++i) {
    TheoryFamily fam;
    fam.base = theories[i];
    fam.first_column = col;
    for (int q = 1; q <= prefixes; ++q) {
      std::vector<BigInt> members = fam.base.members;
      for (int k = 0; k < q; ++k) members.push_back(grid.objective_indices[k]);
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      fam.derived.push_back(
          Theory{space.params(), std::move(members), TheoryRole::derived(static_cast<int>(i), q)});
    }
    col += fam.width();
    grid.families.push_back(std::move(fam));
  }

  for (const TheoryFamily& fam : grid.families) {
    grid.column_formulas.push_back(fam.base.formulas(space));
    for (const Theory& d : fam.derived) grid.column_formulas.push_back(d.formulas(space));
  }

  const int m = space.params().var_count;
  for (int c = 0; c < grid.columns(); ++c)
    for (int r = 0; r < grid.rows(); ++r) {
      Case cell{c, r, CaseStatus::Pending};
      if (!entails(grid.column_formulas[c], grid.objectives[r], m))
        cell.status = CaseStatus::SkippedUnprovable;
      grid.cases.push_back(cell);
    }
  return grid;
}

enum class CaseOutcome : std::uint8_t { Proved, Unprovable, Budget };

inline const char* case_outcome_name(CaseOutcome o) {
  switch (o) {
    case CaseOutcome::Proved: return "proved";
    case CaseOutcome::Unprovable: return "unprovable";
    case CaseOutcome::Budget: return "budget";
  }
  return "?";
}

struct CaseResult {
  int column = 0;
  int row = 0;
  CaseOutcome outcome = CaseOutcome::Unprovable;
  std::int64_t proof_length = 0;  // valid when proved
  bool minimal = false;
  std::uint64_t states = 0;
  std::int64_t millis = 0;
};

struct RunResults {
  std::vector<CaseResult> results;  // column-major, same keying as the grid
};

inline RunResults run_cases(const CaseGrid& grid, const ExperimentConfig& cfg) {
  RunResults out;
  out.results.resize(grid.cases.size());
  for (const Case& c : grid.cases) {
    CaseResult& r = out.results[c.column * grid.rows() + c.row];
    r.column = c.column;
    r.row = c.row;
    r.outcome = CaseOutcome::Unprovable;
  }

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < grid.cases.size(); ++i)
    if (grid.cases[i].status == CaseStatus::Pending) pending.push_back(i);

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t slot = next.fetch_add(1);
      if (slot >= pending.size()) return;
      const Case& c = grid.cases[pending[slot]];
      CaseResult& r = out.results[c.column * grid.rows() + c.row];
      const auto& theory = grid.column_formulas[c.column];
      const Formula& goal = grid.objectives[c.row];
      ProverOutcome res = cfg.engine == Engine::Exact
                              ? min_proof_bfs(theory, goal, cfg.mode, cfg.budget)
                              : resolution_prove(theory, goal, cfg.budget);
      switch (res.status) {
        case OutcomeStatus::Proved:
          r.outcome = CaseOutcome::Proved;
          r.proof_length = res.length;
          r.minimal = res.minimal;
          break;
        case OutcomeStatus::NotEntailed: r.outcome = CaseOutcome::Unprovable; break;
        case OutcomeStatus::BudgetExhausted: r.outcome = CaseOutcome::Budget; break;
      }
      r.states = res.stats.states;
      r.millis = res.stats.elapsed_ms;
    }
  };

  int n = std::max(1, cfg.threads);
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return out;
}

} // namespace prooflab
