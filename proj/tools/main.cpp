// prooflab command-line front end.
//
// Subcommands: enumerate, count, prove, run, matrix, render, audit,
// export-tptp. Exit codes: 0 success (including a not-entailed verdict from
// `prove`), 3 prover budget exhausted, 64 usage errors, 65 config or data
// format errors, 66 I/O errors, 70 internal errors.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "prooflab/prooflab.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kBudget = 3;
constexpr int kUsage = 64;
constexpr int kData = 65;
constexpr int kIo = 66;
constexpr int kInternal = 70;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path, bool config_like) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::string msg = "cannot open " + path;
    if (config_like) throw DataError(msg);
    throw IoError(msg);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path);
}

prooflab::GenerationParams params_from_flags(int n, int m, const std::string& ops) {
  prooflab::GenerationParams p;
  p.max_depth = n;
  p.var_count = m;
  try {
    p.ops = prooflab::ops_from_text(ops);
    prooflab::validate(p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return p;
}

prooflab::Formula parse_goal(const std::string& text) {
  try {
    return prooflab::parse_formula(text);
  } catch (const prooflab::ParseError& e) {
    throw UsageError(std::string("goal: ") + e.what());
  }
}

std::vector<prooflab::Formula> parse_theory(const std::string& text) {
  try {
    return prooflab::parse_formula_list(text);
  } catch (const prooflab::ParseError& e) {
    throw UsageError(std::string("theory: ") + e.what());
  }
}

std::string panel_path(const std::string& base, int panel, int panels) {
  if (panels == 1) return base;
  auto dot = base.rfind('.');
  if (dot == std::string::npos) return base + "." + std::to_string(panel + 1);
  return base.substr(0, dot) + "." + std::to_string(panel + 1) + base.substr(dot);
}

int run_command(const prooflab::ExperimentConfig& cfg, const std::string& outdir) {
  namespace fs = std::filesystem;
  using namespace prooflab;
  std::error_code ec;
  fs::create_directories(outdir, ec);
  if (ec) throw IoError("cannot create output directory " + outdir);

  FormulaSpace space(cfg.params);
  CaseGrid grid = build_cases(space, cfg);
  RunResults results = run_cases(grid, cfg);
  auto cfg_lines = config_header_lines(cfg);
  SpeedupMatrix matrix = build_speedup_matrix(grid, results, cfg, cfg_lines);
  IncidenceMatrix incidence = classify_incidence(matrix);
  NormalityAudit audit = audit_matrix(matrix, cfg.experiment_id);

  auto path = [&](const char* name) { return (fs::path(outdir) / name).string(); };
  {
    std::ostringstream os;
    write_results_csv(os, grid, results, cfg, cfg_lines);
    write_file(path("results.csv"), os.str());
  }
  {
    std::ostringstream os;
    write_speedup_csv(os, matrix);
    write_file(path("speedup_matrix.csv"), os.str());
  }
  {
    std::ostringstream os;
    write_incidence_csv(os, incidence);
    write_file(path("incidence_matrix.csv"), os.str());
  }
  {
    SampleSpec spec{cfg.theory_size, cfg.theory_count, cfg.objective_count, cfg.seed};
    std::vector<Theory> bases;
    for (const TheoryFamily& fam : grid.families) bases.push_back(fam.base);
    std::ostringstream os;
    write_sample_manifest(os, space, spec, bases, grid.objective_indices, grid.sampling);
    write_file(path("manifest.txt"), os.str());
  }
  write_file(path("audit.txt"), summarize(audit));
  write_file(path("incidence.ppm"), render_incidence(incidence, RenderSpec{}).ppm());
  write_file(path("speedup.ppm"), render_speedup(matrix, RenderSpec{}).ppm());

  std::cout << summarize(audit);
  std::cout << "outputs written to " << outdir << "\n";
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"propositional proof speed-up toolkit"};
  app.require_subcommand(1);

  // enumerate ---------------------------------------------------------------
  auto* cmd_enum = app.add_subcommand("enumerate", "print a range of the propositions array");
  int en_n = 1, en_m = 1;
  std::string en_ops = "all";
  std::string en_from = "1", en_to;
  cmd_enum->add_option("-n", en_n, "max composition depth")->required();
  cmd_enum->add_option("-m", en_m, "variable count")->required();
  cmd_enum->add_option("--ops", en_ops, "binary connectives (all | comma list)");
  cmd_enum->add_option("--from", en_from, "first index, 1-based");
  cmd_enum->add_option("--to", en_to, "last index (default: end of the space)");

  // count -------------------------------------------------------------------
  auto* cmd_count = app.add_subcommand("count", "print f(n,m), the formula-space size");
  int ct_n = 1, ct_m = 1;
  std::string ct_ops = "all";
  cmd_count->add_option("-n", ct_n, "max composition depth")->required();
  cmd_count->add_option("-m", ct_m, "variable count")->required();
  cmd_count->add_option("--ops", ct_ops, "binary connectives");

  // prove ---------------------------------------------------------------
  auto* cmd_prove = app.add_subcommand("prove", "prove one case and print the proof");
  std::string pv_theory, pv_goal, pv_engine = "exact", pv_mode = "classical";
  prooflab::ProverBudget pv_budget;
  cmd_prove->add_option("-t,--theory", pv_theory, "comma-separated axioms");
  cmd_prove->add_option("-g,--goal", pv_goal, "objective formula")->required();
  cmd_prove->add_option("--engine", pv_engine, "exact | resolution");
  cmd_prove->add_option("--mode", pv_mode, "classical | intuitionistic");
  cmd_prove->add_option("--max-lines", pv_budget.max_lines, "line budget");
  cmd_prove->add_option("--max-depth", pv_budget.max_formula_depth,
                        "intermediate formula depth cap (0 = auto)");
  cmd_prove->add_option("--max-states", pv_budget.max_states, "search state budget");
  cmd_prove->add_option("--time-limit-ms", pv_budget.time_limit_ms, "wall clock budget");

  // run -----------------------------------------------------------------
  auto* cmd_run = app.add_subcommand("run", "run a full experiment from a config file");
  std::string rn_config, rn_outdir = "prooflab_out";
  std::uint64_t rn_seed = 0;
  bool rn_seed_set = false;
  cmd_run->add_option("-c,--config", rn_config, "experiment config file")->required();
  cmd_run->add_option("-o,--outdir", rn_outdir, "output directory");
  cmd_run->add_option("--seed", rn_seed, "override the config seed")
      ->each([&](const std::string&) { rn_seed_set = true; });

  // matrix ----------------------------------------------------------------
  auto* cmd_matrix = app.add_subcommand("matrix", "rebuild matrices from a results CSV");
  std::string mx_results, mx_out;
  bool mx_incidence = false;
  cmd_matrix->add_option("-r,--results", mx_results, "results.csv from a run")->required();
  cmd_matrix->add_option("-o,--out", mx_out, "output CSV (default: stdout)");
  cmd_matrix->add_flag("--incidence", mx_incidence, "emit the incidence matrix instead");

  // render ----------------------------------------------------------------
  auto* cmd_render = app.add_subcommand("render", "render a matrix CSV to PPM images");
  std::string rd_matrix, rd_out = "matrix.ppm";
  int rd_cell = 8, rd_panels = 1;
  bool rd_gray = false;
  cmd_render->add_option("-m,--matrix", rd_matrix, "speedup or incidence matrix CSV")->required();
  cmd_render->add_option("-o,--out", rd_out, "output PPM path");
  cmd_render->add_option("--cell", rd_cell, "pixels per matrix cell");
  cmd_render->add_option("--panels", rd_panels, "split columns into this many images");
  cmd_render->add_flag("--grayscale", rd_gray, "positive-only grayscale");

  // audit -----------------------------------------------------------------
  auto* cmd_audit = app.add_subcommand("audit", "normality audit of a results CSV");
  std::string au_results, au_id;
  cmd_audit->add_option("-r,--results", au_results, "results.csv from a run")->required();
  cmd_audit->add_option("--id", au_id, "experiment id for the summary row");

  // export-tptp -------------------------------------------------------------
  auto* cmd_tptp = app.add_subcommand("export-tptp", "emit one case in TPTP syntax");
  std::string tp_theory, tp_goal, tp_out, tp_name = "case";
  cmd_tptp->add_option("-t,--theory", tp_theory, "comma-separated axioms");
  cmd_tptp->add_option("-g,--goal", tp_goal, "objective formula")->required();
  cmd_tptp->add_option("-o,--out", tp_out, "output file (default: stdout)");
  cmd_tptp->add_option("--name", tp_name, "problem name for the header");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    using namespace prooflab;
    if (cmd_enum->parsed()) {
      FormulaSpace space(params_from_flags(en_n, en_m, en_ops));
      BigInt from(en_from), to = en_to.empty() ? space.size() : BigInt(en_to);
      if (from < 1 || to > space.size() || from > to)
        throw UsageError("index range [" + from.str() + ", " + to.str() + "] out of bounds");
      for (BigInt k = from; k <= to; ++k) std::cout << render_formula(space.at(k)) << "\n";
      return kOk;
    }
    if (cmd_count->parsed()) {
      std::cout << count_formulas(params_from_flags(ct_n, ct_m, ct_ops)) << "\n";
      return kOk;
    }
    if (cmd_prove->parsed()) {
      auto theory = parse_theory(pv_theory);
      Formula goal = parse_goal(pv_goal);
      try {
        validate(pv_budget);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (pv_engine == "exact") {
        DeductionMode mode;
        if (pv_mode == "classical") mode = DeductionMode::Classical;
        else if (pv_mode == "intuitionistic") mode = DeductionMode::Intuitionistic;
        else throw UsageError("mode must be classical or intuitionistic");
        ProverOutcome out = min_proof_bfs(theory, goal, mode, pv_budget);
        std::cout << "status: " << outcome_status_name(out.status) << "\n";
        if (out.status == OutcomeStatus::Proved) {
          std::cout << render_fitch(*out.proof);
          std::cout << "D = " << out.length << (out.minimal ? " (minimal)" : "") << "\n";
        } else if (!out.diagnostics.empty()) {
          std::cout << out.diagnostics << "\n";
        }
        return out.status == OutcomeStatus::BudgetExhausted ? kBudget : kOk;
      }
      if (pv_engine == "resolution") {
        ProverOutcome out = resolution_prove(theory, goal, pv_budget);
        std::cout << "status: " << outcome_status_name(out.status) << "\n";
        if (out.status == OutcomeStatus::Proved) {
          std::cout << out.refutation_text;
          std::cout << "D = " << out.length << "\n";
        } else if (!out.diagnostics.empty()) {
          std::cout << out.diagnostics << "\n";
        }
        return out.status == OutcomeStatus::BudgetExhausted ? kBudget : kOk;
      }
      throw UsageError("engine must be exact or resolution");
    }
    if (cmd_run->parsed()) {
      ExperimentConfig cfg;
      try {
        cfg = parse_config(read_file(rn_config, true));
      } catch (const ConfigError& e) {
        throw DataError(e.what());
      }
      if (rn_seed_set) cfg.seed = rn_seed;
      return run_command(cfg, rn_outdir);
    }
    if (cmd_matrix->parsed()) {
      std::istringstream is(read_file(mx_results, false));
      SpeedupMatrix m = build_speedup_matrix(read_results_csv(is));
      std::ostringstream os;
      if (mx_incidence) write_incidence_csv(os, classify_incidence(m));
      else write_speedup_csv(os, m);
      if (mx_out.empty()) std::cout << os.str();
      else write_file(mx_out, os.str());
      return kOk;
    }
    if (cmd_render->parsed()) {
      std::string bytes = read_file(rd_matrix, false);
      RenderSpec spec;
      spec.cell_size = rd_cell;
      spec.grayscale = rd_gray;
      try {
        validate(spec);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      auto render_all = [&](int columns, auto&& painter) {
        auto ranges = panel_ranges(columns, rd_panels);
        for (std::size_t p = 0; p < ranges.size(); ++p)
          write_file(panel_path(rd_out, static_cast<int>(p), rd_panels),
                     painter(ranges[p].first, ranges[p].second).ppm());
      };
      if (bytes.rfind("# prooflab speedup-matrix", 0) == 0) {
        std::istringstream is(bytes);
        SpeedupMatrix m = read_speedup_csv(is);
        render_all(m.column_count(), [&](int a, int b) { return render_speedup(m, spec, a, b); });
      } else if (bytes.rfind("# prooflab incidence-matrix", 0) == 0) {
        std::istringstream is(bytes);
        IncidenceMatrix m = read_incidence_csv(is);
        render_all(m.column_count(), [&](int a, int b) { return render_incidence(m, spec, a, b); });
      } else {
        throw DataError(rd_matrix + " is not a prooflab matrix CSV");
      }
      return kOk;
    }
    if (cmd_audit->parsed()) {
      std::istringstream is(read_file(au_results, false));
      ResultsFile file = read_results_csv(is);
      std::string id = au_id;
      if (id.empty()) {
        id = "1";
        std::string joined;
        for (const std::string& line : file.config_lines) joined += line + "\n";
        if (!joined.empty()) {
          try {
            id = parse_config(joined).experiment_id;
          } catch (const ConfigError&) {
            // keep the default when the embedded block is absent or foreign
          }
        }
      }
      std::cout << summarize(audit_matrix(build_speedup_matrix(file), id));
      return kOk;
    }
    if (cmd_tptp->parsed()) {
      auto theory = parse_theory(tp_theory);
      Formula goal = parse_goal(tp_goal);
      std::string text = export_tptp(theory, goal, tp_name);
      if (tp_out.empty()) std::cout << text;
      else write_file(tp_out, text);
      return kOk;
    }
    throw UsageError("no subcommand");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    std::cerr << "config/data error: " << e.what() << "\n";
    return kData;
  } catch (const prooflab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kData;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const std::runtime_error& e) {
    std::cerr << "config/data error: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
