// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Each criterion carries its tolerance in code; nothing is tuned
// at run time.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "prooflab/prooflab.hpp"
#include "support/enumeration_oracle.hpp"

using namespace prooflab;

namespace {

struct Harness {
  int failures = 0;

  void report(int number, const std::string& name, bool ok, const std::string& detail,
              double seconds) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name << " ("
              << std::fixed << std::setprecision(1) << seconds << "s)";
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
  }

  template <class Fn>
  void run(int number, const std::string& name, Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      ok = fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(number, name, ok, detail, seconds);
  }
};

std::string mask_millis(const std::string& results_csv) {
  std::istringstream is(results_csv);
  std::ostringstream os;
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("#", 0) == 0 || line.rfind("family,", 0) == 0) {
      os << line << "\n";
      continue;
    }
    auto fields = prooflab::detail::split(line, ',');
    if (fields.size() == 9) fields[7] = "-";
    for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << fields[i];
    os << "\n";
  }
  return os.str();
}

// ── criterion 1 ─────────────────────────────────────────────────────────────

bool criterion1(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;

  GenerationParams p11{1, 1, OpsSet::all()};
  GenerationParams p12{1, 2, OpsSet::all()};
  ok = ok && count_formulas(p11) == 18 && testing::oracle_enumerate(p11).size() == 18;
  ok = ok && count_formulas(p12) == 68 && testing::oracle_enumerate(p12).size() == 68;

  FormulaSpace p21({2, 1, OpsSet::all()});
  BigInt k = 1;
  auto e = p21.enumerate();
  while (!e.done()) {
    if (p21.index_of(e.next()) != k) {
      ok = false;
      detail = "roundtrip failed at index " + k.str();
      break;
    }
    ++k;
  }
  ok = ok && k == p21.size() + 1;

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 10.0) {
    ok = false;
    detail += " exceeded 10s";
  }
  if (detail.empty())
    detail = "count(1,1)=18, count(1,2)=68, roundtrip over " + p21.size().str() + " formulas";
  return ok;
}

// ── criterion 2 ─────────────────────────────────────────────────────────────

bool criterion2(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  FormulaSpace big({2, 2, OpsSet::all()});
  FormulaSpace small({1, 2, OpsSet::all()});

  int last_depth = 0;
  std::size_t scanned = 0;
  auto e = big.enumerate();
  auto se = small.enumerate();
  while (!e.done()) {
    Formula f = e.next();
    if (f.depth() < last_depth) {
      detail = "depth decreased at position " + std::to_string(scanned + 1);
      return false;
    }
    last_depth = f.depth();
    if (!se.done() && f != se.next()) {
      detail = "prefix mismatch at position " + std::to_string(scanned + 1);
      return false;
    }
    ++scanned;
  }
  if (!se.done()) {
    detail = "smaller space not exhausted by the prefix";
    return false;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  detail = "scanned " + std::to_string(scanned) + " formulas of P(2,2)";
  if (secs >= 60.0) {
    detail += ", exceeded 60s";
    return false;
  }
  return true;
}

// ── criterion 3 ─────────────────────────────────────────────────────────────

bool criterion3(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  int cases = 0, proved = 0, refuted = 0, budget = 0;
  ProverBudget budget_cfg;  // defaults

  struct Combo {
    int n, m, j;
  };
  const Combo combos[] = {{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2},
                          {2, 1, 1}, {2, 1, 2}, {2, 2, 1}, {2, 2, 2}};
  for (const Combo& c : combos) {
    FormulaSpace space({c.n, c.m, OpsSet::all()});
    int combo_cases = 0;
    // The consistency filter may shrink an objective draw; sample further
    // seeded rounds until this combo has contributed its quota.
    for (std::uint64_t round = 0; combo_cases < 25 && round < 10; ++round) {
      SampleSpec spec{c.j, 5, 5, 0xC0FFEEull + c.n * 1000 + c.m * 100 + c.j * 10 + round};
      auto theories = sample_theories(space, spec);
      auto objectives = sample_objectives(space, spec);
      for (const Theory& t : theories) {
        auto formulas = t.formulas(space);
        for (const Formula& goal : objectives) {
          if (combo_cases == 25) break;
          ++combo_cases;
          ++cases;
        bool expected = entails(formulas, goal, c.m);
        ProverOutcome out = min_proof_bfs(formulas, goal, DeductionMode::Classical, budget_cfg);
        switch (out.status) {
          case OutcomeStatus::Proved: {
            ++proved;
            std::string why;
            if (!check_proof(*out.proof, formulas, goal, DeductionMode::Classical, &why)) {
              detail = "invalid proof: " + why;
              return false;
            }
            if (!expected) {
              detail = "proved a non-entailed case";
              return false;
            }
            break;
          }
          case OutcomeStatus::NotEntailed:
            ++refuted;
            if (expected) {
              detail = "refuted an entailed case";
              return false;
            }
            break;
          case OutcomeStatus::BudgetExhausted: ++budget; break;
        }
        }
      }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os << cases << " cases: " << proved << " proved, " << refuted << " refuted, " << budget
     << " budget-exhausted";
  detail = os.str();
  if (cases < 200) {
    detail += "; corpus smaller than 200";
    return false;
  }
  if (secs >= 600.0) {
    detail += "; exceeded 10min";
    return false;
  }
  return true;
}

// ── criterion 4 ─────────────────────────────────────────────────────────────

bool criterion4(std::string& detail) {
  int compared = 0;

  struct Corpus {
    int n, m, j, x, o;
    std::uint64_t seed;
  };
  const Corpus corpora[] = {
      {1, 2, 2, 16, 4, 777}, {1, 1, 1, 10, 4, 4242}, {1, 2, 1, 14, 4, 90210}};
  for (const Corpus& c : corpora) {
    if (compared >= 100) break;
    FormulaSpace space({c.n, c.m, OpsSet::all()});
    SampleSpec spec{c.j, c.x, c.o, c.seed};
    auto theories = sample_theories(space, spec);
    auto objectives = sample_objectives(space, spec);
    for (const Theory& t : theories) {
      auto base = t.formulas(space);
      for (const Formula& goal : objectives) {
        auto before = min_proof_bfs(base, goal, DeductionMode::Classical, {});
        if (before.status != OutcomeStatus::Proved || !before.minimal) continue;
        for (const Formula& extra : objectives) {
          if (compared >= 100) break;
          std::vector<Formula> aug = base;
          aug.push_back(extra);
          if (!is_satisfiable(aug, c.m)) continue;
          auto after = min_proof_bfs(aug, goal, DeductionMode::Classical, {});
          if (after.status != OutcomeStatus::Proved || !after.minimal) continue;
          ++compared;
          if (after.length > before.length) {
            detail = "negative speed-up: " + render_formula(goal) + " with " +
                     render_formula(extra) + " went " + std::to_string(before.length) + " -> " +
                     std::to_string(after.length);
            return false;
          }
        }
      }
    }
  }
  if (compared < 100) {
    detail = "only " + std::to_string(compared) + " comparable pairs";
    return false;
  }

  // The same fact at the matrix level: an exact-engine run has no negative
  // entry and audits possibly-normal.
  ExperimentConfig cfg;
  cfg.params = {1, 2, OpsSet::all()};
  cfg.theory_size = 2;
  cfg.theory_count = 4;
  cfg.objective_count = 4;
  cfg.seed = 20250809;
  FormulaSpace space(cfg.params);
  CaseGrid grid = build_cases(space, cfg);
  RunResults results = run_cases(grid, cfg);
  SpeedupMatrix m = build_speedup_matrix(grid, results, cfg);
  for (const MatrixCell& cell : m.cells)
    if (cell.defined() && cell.delta < 0) {
      detail = "negative entry in the exact-engine matrix";
      return false;
    }
  NormalityAudit audit = audit_matrix(m);
  if (!audit.possibly_normal) {
    detail = "exact-engine audit verdict is not possibly-normal";
    return false;
  }
  detail = std::to_string(compared) + " comparable pairs, matrix clean, verdict possibly-normal";
  return true;
}

// ── criterion 5 ─────────────────────────────────────────────────────────────

bool criterion5(std::string& detail) {
  ExperimentConfig cfg;
  cfg.params = {1, 2, OpsSet::all()};
  cfg.theory_size = 1;
  cfg.theory_count = 3;
  cfg.objective_count = 4;
  cfg.seed = 40;
  FormulaSpace space(cfg.params);
  CaseGrid grid = build_cases(space, cfg);
  if (grid.rows() != 4) {
    detail = "seed retained " + std::to_string(grid.rows()) + " objectives, need 4";
    return false;
  }
  RunResults results = run_cases(grid, cfg);
  SpeedupMatrix m = build_speedup_matrix(grid, results, cfg);

  int positives = 0, degenerate = 0, no_reference = 0;
  for (int col = 0; col < m.column_count(); ++col)
    for (int row = 0; row < m.row_count(); ++row) {
      const MatrixCell& cell = m.at(col, row);
      if (!cell.trivial) continue;
      if (cell.status == CellStatus::UndefNoReference) {
        // The objective is an axiom here but no earlier family member proves
        // it at all; there is nothing to compare against.
        ++no_reference;
        continue;
      }
      if (!cell.defined()) {
        detail = "trivial cell not proved at col " + std::to_string(col);
        return false;
      }
      if (*cell.d_case != 1) {
        detail = "trivial case did not prove in one line";
        return false;
      }
      if (cell.d_ref && *cell.d_ref == 1) {
        ++degenerate;
        if (cell.delta != 0) {
          detail = "degenerate trivial cell not zero";
          return false;
        }
      } else {
        ++positives;
        if (!(cell.delta > 0)) {
          detail = "non-degenerate trivial cell not positive at col " + std::to_string(col) +
                   " row " + std::to_string(row);
          return false;
        }
      }
    }
  if (positives < 2 * grid.rows()) {
    detail = "too few non-degenerate trivial cells: " + std::to_string(positives);
    return false;
  }

  // Period-|O| diagonal: within each family the first trivial cell of row r
  // sits r+1 columns after the base, every family repeating the pattern.
  int diagonal_hits = 0;
  for (const TheoryFamily& fam : grid.families)
    for (int r = 0; r < grid.rows(); ++r) {
      int col = fam.first_column + r + 1;
      if (col >= fam.first_column + fam.width()) continue;
      const MatrixCell& cell = m.at(col, r);
      if (cell.defined() && cell.delta > 0) ++diagonal_hits;
    }
  if (diagonal_hits < 2 * grid.rows()) {
    detail = "diagonal too sparse: " + std::to_string(diagonal_hits) + " positive cells";
    return false;
  }
  detail = std::to_string(positives) + " positive trivial cells, " + std::to_string(degenerate) +
           " degenerate zeros, diagonal hits " + std::to_string(diagonal_hits);
  return true;
}

// ── criterion 6 ─────────────────────────────────────────────────────────────

bool criterion6(std::string& detail) {
  std::vector<ColumnMeta> columns{{0, 0, 2}, {0, 1, 3}, {0, 2, 4}};
  std::vector<std::string> rows{"1"};
  std::vector<std::int64_t> lengths{5, 4, 6};
  SpeedupMatrix m = build_speedup_matrix(
      columns, rows, [](int, int) { return CaseOutcome::Proved; },
      [&](int c, int) { return lengths[c]; }, [](int, int) { return false; });
  if (m.at(1, 0).delta != Rational(1, 5)) {
    detail = "derived_1 delta is not exactly 1/5";
    return false;
  }
  if (m.at(2, 0).delta != Rational(-1, 2)) {
    detail = "derived_2 delta is not exactly -1/2";
    return false;
  }
  IncidenceMatrix inc = classify_incidence(m);
  if (inc.at(1, 0) != IncidenceClass::Positive || inc.at(2, 0) != IncidenceClass::Negative) {
    detail = "incidence classes wrong";
    return false;
  }
  detail = "delta = 1/5 then -1/2, classified +/-";
  return true;
}

// ── criterion 7 ─────────────────────────────────────────────────────────────

bool criterion7(std::string& detail) {
  SpeedupMatrix m;
  m.columns = {{0, 0, 2}};
  for (int i = 0; i < 5400; ++i) m.row_labels.push_back(std::to_string(i));
  m.cells.resize(5400);
  for (int i = 0; i < 5400; ++i) {
    m.cells[i].status = CellStatus::Value;
    m.cells[i].delta = i < 606 ? Rational(1, 2) : (i < 700 ? Rational(-1, 2) : Rational(0));
  }
  NormalityAudit a = audit_matrix(m, "11");
  std::string table = summarize(a);

  auto row_pos = table.find("11 | 5400 | 606 | ");
  if (row_pos == std::string::npos) {
    detail = "summary row not in the column layout";
    return false;
  }
  std::string data_row = table.substr(row_pos, table.find('\n', row_pos) - row_pos);
  std::istringstream row(data_row);
  std::string tok;
  double pct = -1, ratio = -1;
  while (row >> tok) {
    if (tok.size() > 1 && tok.back() == '%') pct = std::stod(tok.substr(0, tok.size() - 1));
  }
  ratio = std::stod(data_row.substr(data_row.rfind('|') + 1));
  if (std::abs(pct - 11.2) > 0.05) {
    detail = "percentage " + std::to_string(pct) + " off 11.2 by more than 0.05";
    return false;
  }
  if (std::abs(ratio - 6.44) > 0.005) {
    detail = "ratio " + std::to_string(ratio) + " off 6.44 by more than 0.005";
    return false;
  }
  detail = "rendered 11.2% and 6.44 from (5400, 606, 94)";
  return true;
}

// ── criterion 8 ─────────────────────────────────────────────────────────────

bool criterion8(std::string& detail) {
  FormulaSpace space({1, 2, OpsSet::all()});
  SplitMix64 rng(0xFACADE);
  const BigInt f = space.size();

  auto random_formula = [&]() { return space.at(uniform_below(rng, f) + 1); };

  int built = 0, matched = 0, excluded = 0;
  std::ostringstream log;
  while (built < 30) {
    int kind = built % 5;
    std::vector<Formula> theory;
    Formula goal = Formula::variable(1);
    switch (kind) {
      case 0: {  // trivial
        theory = {random_formula(), random_formula()};
        goal = theory[0];
        break;
      }
      case 1: {  // one-step ladder
        Formula a = random_formula(), b = random_formula();
        theory = {a, Formula::binary(Connective::Implies, a, b)};
        goal = b;
        break;
      }
      case 2: {  // two-step ladder
        Formula a = random_formula(), b = random_formula(), c = random_formula();
        theory = {a, Formula::binary(Connective::Implies, a, b),
                  Formula::binary(Connective::Implies, b, c)};
        goal = c;
        break;
      }
      case 3: {  // conjunction introduction
        Formula a = random_formula(), b = random_formula();
        theory = {a, b};
        goal = Formula::binary(Connective::And, a, b);
        break;
      }
      case 4: {  // disjunction introduction
        Formula a = random_formula(), b = random_formula();
        theory = {a};
        goal = Formula::binary(Connective::Or, a, b);
        break;
      }
    }
    if (!is_satisfiable(theory, 2) || !entails(theory, goal, 2)) continue;
    ProverOutcome exact = min_proof_bfs(theory, goal, DeductionMode::Classical, {});
    if (exact.status != OutcomeStatus::Proved || !exact.minimal) continue;
    bool forward = true;
    for (const ProofLine& ln : exact.proof->lines)
      forward = forward && ln.just != Justification::Assumption;
    if (!forward) continue;  // outside the procedure's forward reach
    ++built;

    OracleSearchResult res = oracle_guided_search(theory, goal, DeductionMode::Classical, {});
    if (res.status == OracleSearchResult::Status::NoPositiveCandidate) {
      ++excluded;
      log << " [excluded #" << built << ": " << res.diagnostics << "]";
      continue;
    }
    if (res.status != OracleSearchResult::Status::Completed) {
      detail = "instance " + std::to_string(built) + ": " + res.diagnostics;
      return false;
    }
    if (res.length != exact.length) {
      detail = "instance " + std::to_string(built) + ": oracle-guided " +
               std::to_string(res.length) + " vs exact " + std::to_string(exact.length);
      return false;
    }
    ++matched;
  }
  if (excluded * 10 > built) {
    detail = std::to_string(excluded) + " exclusions of " + std::to_string(built) +
             " exceed 10%" + log.str();
    return false;
  }
  detail = std::to_string(matched) + "/30 matched, " + std::to_string(excluded) + " excluded" +
           log.str();
  return true;
}

// ── criterion 9 ─────────────────────────────────────────────────────────────

bool criterion9(std::string& detail) {
  ExperimentConfig cfg;
  cfg.params = {2, 3, OpsSet::all()};
  cfg.theory_size = 2;
  cfg.theory_count = 10;
  cfg.objective_count = 6;
  cfg.engine = Engine::Resolution;
  cfg.seed = 11;
  cfg.experiment_id = "resolution-demo";
  FormulaSpace space(cfg.params);
  CaseGrid grid = build_cases(space, cfg);
  RunResults results = run_cases(grid, cfg);
  SpeedupMatrix m = build_speedup_matrix(grid, results, cfg);
  IncidenceMatrix inc = classify_incidence(m);

  std::int64_t counts[4] = {0, 0, 0, 0};
  for (IncidenceClass c : inc.cells) ++counts[static_cast<int>(c)];
  std::int64_t positive = counts[0], zero = counts[1], negative = counts[2],
               undefined = counts[3];
  std::ostringstream os;
  os << "x=" << cfg.theory_count << " o=" << grid.rows() << "; +" << positive << " 0:" << zero
     << " -" << negative << " U:" << undefined;
  detail = os.str();
  if (positive == 0 || zero == 0 || negative == 0 || undefined == 0) {
    detail += "; missing an incidence class";
    return false;
  }
  NormalityAudit audit = audit_matrix(m, cfg.experiment_id);
  if (negative > 0 && audit.possibly_normal) {
    detail += "; verdict failed to flag negative speed-up";
    return false;
  }
  std::int64_t provable = audit.provable_cases;
  double rate = provable == 0 ? 0 : 100.0 * static_cast<double>(positive) / provable;
  std::ostringstream r;
  r << std::fixed << std::setprecision(1) << rate;
  detail += "; positive rate " + r.str() + "% of " + std::to_string(provable) + " provable";
  if (rate < 1.0 || rate > 40.0) {
    detail += " (outside the 1-40% band)";
    return false;
  }
  detail += "; verdict not-normal";
  return true;
}

// ── criterion 10 ────────────────────────────────────────────────────────────

bool criterion10(std::string& detail) {
  auto run_once = [&](const ExperimentConfig& cfg) {
    FormulaSpace space(cfg.params);
    CaseGrid grid = build_cases(space, cfg);
    RunResults results = run_cases(grid, cfg);
    auto cfg_lines = config_header_lines(cfg);
    SpeedupMatrix m = build_speedup_matrix(grid, results, cfg, cfg_lines);
    IncidenceMatrix inc = classify_incidence(m);
    std::ostringstream rs, ms, is;
    write_results_csv(rs, grid, results, cfg, cfg_lines);
    write_speedup_csv(ms, m);
    write_incidence_csv(is, inc);
    std::string audit_text = summarize(audit_matrix(m, cfg.experiment_id));
    std::string speedup_ppm = render_speedup(m, RenderSpec{}).ppm();
    std::string incidence_ppm = render_incidence(inc, RenderSpec{}).ppm();
    return std::tuple{mask_millis(rs.str()), ms.str(), is.str(), audit_text, speedup_ppm,
                      incidence_ppm};
  };

  ExperimentConfig exact;
  exact.params = {1, 2, OpsSet::all()};
  exact.theory_size = 1;
  exact.theory_count = 3;
  exact.objective_count = 4;
  exact.seed = 6;

  ExperimentConfig resolution;
  resolution.params = {2, 3, OpsSet::all()};
  resolution.theory_size = 2;
  resolution.theory_count = 4;
  resolution.objective_count = 4;
  resolution.engine = Engine::Resolution;
  resolution.seed = 11;
  resolution.threads = 3;  // keyed results: threading must not matter

  for (const ExperimentConfig& cfg : {exact, resolution}) {
    auto a = run_once(cfg);
    auto b = run_once(cfg);
    if (a != b) {
      detail = std::string("rerun differed for the ") + engine_name(cfg.engine) + " experiment";
      return false;
    }
  }
  detail = "results/matrix/incidence CSVs, audit and both PPMs byte-identical on rerun";
  return true;
}

} // namespace

int main() {
  Harness h;
  h.run(1, "enumeration counts and index roundtrip", criterion1);
  h.run(2, "depth monotonicity and prefix consistency over P(2,2)", criterion2);
  h.run(3, "exact prover agrees with truth tables on 200 seeded cases", criterion3);
  h.run(4, "exact prover never shows negative speed-up", criterion4);
  h.run(5, "trivial diagonal in an exact-engine experiment", criterion5);
  h.run(6, "matrix rule on hand-fed lengths", criterion6);
  h.run(7, "audit arithmetic reproduces the published row", criterion7);
  h.run(8, "oracle-guided lengths equal exact lengths", criterion8);
  h.run(9, "resolution experiment exhibits all incidence classes", criterion9);
  h.run(10, "seeded experiments are byte-deterministic", criterion10);

  std::cout << (h.failures == 0 ? "all criteria passed" : std::to_string(h.failures) + " criteria failed")
            << "\n";
  return h.failures;
}
