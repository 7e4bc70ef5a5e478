#pragma once

// ── config.hpp ──────────────────────────────────────────────────────────────
// Experiment configuration files: INI-flavored key = value lines under
// [generation], [sampling], [prover] and [run] sections, '#' comments.
// Every key has a default; unknown keys and malformed lines are errors.
// emit_config writes the canonical form, so parse-then-emit is idempotent.
//
//   [generation]        n, m, ops (= all | comma list of iff,implies,and,or)
//   [sampling]          j, x, o, derived_prefixes (0 = per objective), seed
//   [prover]            engine (= exact | resolution), mode (= classical |
//                       intuitionistic), max_lines, max_formula_depth
//                       (0 = auto), max_states, time_limit_ms
//   [run]               threads, experiment_id
// ────────────────────────────────────────────────────────────────────────────

#include <istream>
#include <sstream>
#include <string>

#include "prooflab/experiment.hpp"

namespace prooflab {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& message)
      : std::runtime_error("config line " + std::to_string(line) + ": " + message), line(line) {}
  int line;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::int64_t config_int(const std::string& value, int line) {
  try {
    std::size_t used = 0;
    std::int64_t v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(line, "expected an integer, got '" + value + "'");
  }
}

inline std::uint64_t config_uint(const std::string& value, int line) {
  try {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(line, "expected an unsigned integer, got '" + value + "'");
  }
}

} // namespace detail

inline ExperimentConfig parse_config(std::istream& is) {
  ExperimentConfig cfg;
  std::string section, raw;
  int line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    std::string line = detail::trim(raw);
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = detail::trim(line.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(line_no, "unterminated section header");
      section = line.substr(1, line.size() - 2);
      if (section != "generation" && section != "sampling" && section != "prover" &&
          section != "run")
        throw ConfigError(line_no, "unknown section [" + section + "]");
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(line_no, "expected key = value");
    std::string key = detail::trim(line.substr(0, eq));
    std::string value = detail::trim(line.substr(eq + 1));
    if (section.empty()) throw ConfigError(line_no, "key outside any section");

    try {
      if (section == "generation") {
        if (key == "n") cfg.params.max_depth = static_cast<int>(detail::config_int(value, line_no));
        else if (key == "m") cfg.params.var_count = static_cast<int>(detail::config_int(value, line_no));
        else if (key == "ops") cfg.params.ops = ops_from_text(value);
        else throw ConfigError(line_no, "unknown generation key '" + key + "'");
      } else if (section == "sampling") {
        if (key == "j") cfg.theory_size = static_cast<int>(detail::config_int(value, line_no));
        else if (key == "x") cfg.theory_count = static_cast<int>(detail::config_int(value, line_no));
        else if (key == "o") cfg.objective_count = static_cast<int>(detail::config_int(value, line_no));
        else if (key == "derived_prefixes")
          cfg.derived_prefixes = static_cast<int>(detail::config_int(value, line_no));
        else if (key == "seed") cfg.seed = detail::config_uint(value, line_no);
        else throw ConfigError(line_no, "unknown sampling key '" + key + "'");
      } else if (section == "prover") {
        if (key == "engine") {
          if (value == "exact") cfg.engine = Engine::Exact;
          else if (value == "resolution") cfg.engine = Engine::Resolution;
          else throw ConfigError(line_no, "engine must be exact or resolution");
        } else if (key == "mode") {
          if (value == "classical") cfg.mode = DeductionMode::Classical;
          else if (value == "intuitionistic") cfg.mode = DeductionMode::Intuitionistic;
          else throw ConfigError(line_no, "mode must be classical or intuitionistic");
        } else if (key == "max_lines") {
          cfg.budget.max_lines = static_cast<int>(detail::config_int(value, line_no));
        } else if (key == "max_formula_depth") {
          cfg.budget.max_formula_depth = static_cast<int>(detail::config_int(value, line_no));
        } else if (key == "max_states") {
          cfg.budget.max_states = detail::config_uint(value, line_no);
        } else if (key == "time_limit_ms") {
          cfg.budget.time_limit_ms = detail::config_int(value, line_no);
        } else {
          throw ConfigError(line_no, "unknown prover key '" + key + "'");
        }
      } else if (section == "run") {
        if (key == "threads") cfg.threads = static_cast<int>(detail::config_int(value, line_no));
        else if (key == "experiment_id") cfg.experiment_id = value;
        else throw ConfigError(line_no, "unknown run key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError(line_no, e.what());
    }
  }
  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(0, e.what());
  }
  return cfg;
}

inline ExperimentConfig parse_config(const std::string& text) {
  std::istringstream is(text);
  return parse_config(is);
}

inline std::string emit_config(const ExperimentConfig& cfg) {
  std::ostringstream os;
  os << "[generation]\n";
  os << "n = " << cfg.params.max_depth << "\n";
  os << "m = " << cfg.params.var_count << "\n";
  os << "ops = " << ops_to_text(cfg.params.ops) << "\n";
  os << "\n[sampling]\n";
  os << "j = " << cfg.theory_size << "\n";
  os << "x = " << cfg.theory_count << "\n";
  os << "o = " << cfg.objective_count << "\n";
  os << "derived_prefixes = " << cfg.derived_prefixes << "\n";
  os << "seed = " << cfg.seed << "\n";
  os << "\n[prover]\n";
  os << "engine = " << engine_name(cfg.engine) << "\n";
  os << "mode = " << deduction_mode_name(cfg.mode) << "\n";
  os << "max_lines = " << cfg.budget.max_lines << "\n";
  os << "max_formula_depth = " << cfg.budget.max_formula_depth << "\n";
  os << "max_states = " << cfg.budget.max_states << "\n";
  os << "time_limit_ms = " << cfg.budget.time_limit_ms << "\n";
  os << "\n[run]\n";
  os << "threads = " << cfg.threads << "\n";
  os << "experiment_id = " << cfg.experiment_id << "\n";
  return os.str();
}

// The canonical config as individual lines, for CSV header blocks.
inline std::vector<std::string> config_header_lines(const ExperimentConfig& cfg) {
  std::vector<std::string> out;
  std::istringstream is(emit_config(cfg));
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

} // namespace prooflab
