#pragma once

// ── matrix.hpp ──────────────────────────────────────────────────────────────
// Speed-up and incidence matrices.
//
// Columns are grouped by family in the order base, derived_1, derived_2, ...
// For a base column every provable entry is exactly 0. For a derived column
// the reference theory is the family member among the preceding columns
// (base included) whose recorded proof length for the row objective is
// smallest, earliest on ties; the entry is 1 - D_col/D_ref, exact. An entry
// is undefined when its own case was skipped or ran out of budget, or when
// no preceding family member has a recorded length.
//
// CSV layout: '#'-prefixed header block (format tag, embedded config,
// column/row metadata), then one comma-separated text row per objective.
// Cell tokens are canonical rationals ("0", "1/5", "-3/2") or "U:<reason>".
// ────────────────────────────────────────────────────────────────────────────

#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "prooflab/experiment.hpp"
#include "prooflab/numeric.hpp"

namespace prooflab {

enum class CellStatus : std::uint8_t { Value, UndefUnprovable, UndefBudget, UndefNoReference };

struct MatrixCell {
  CellStatus status = CellStatus::UndefUnprovable;
  Rational delta;                      // valid when status == Value
  std::optional<std::int64_t> d_case;  // recorded length of this cell's case
  std::optional<std::int64_t> d_ref;   // recorded length of the reference case
  bool trivial = false;                // objective is part of this column's prefix

  bool defined() const { return status == CellStatus::Value; }
};

struct ColumnMeta {
  int family = 0;
  int prefix_len = 0;  // 0 = base theory
  int theory_size = 0;
};

struct SpeedupMatrix {
  std::vector<ColumnMeta> columns;
  std::vector<std::string> row_labels;  // objective indices as text
  std::vector<MatrixCell> cells;        // column-major
  std::vector<std::string> config_lines;

  int column_count() const { return static_cast<int>(columns.size()); }
  int row_count() const { return static_cast<int>(row_labels.size()); }
  const MatrixCell& at(int col, int row) const { return cells[col * row_count() + row]; }
  MatrixCell& at(int col, int row) { return cells[col * row_count() + row]; }
};

enum class IncidenceClass : std::uint8_t { Positive, Zero, Negative, Undefined };

struct IncidenceMatrix {
  std::vector<ColumnMeta> columns;
  std::vector<std::string> row_labels;
  std::vector<IncidenceClass> cells;  // column-major
  std::vector<std::string> config_lines;

  int column_count() const { return static_cast<int>(columns.size()); }
  int row_count() const { return static_cast<int>(row_labels.size()); }
  IncidenceClass at(int col, int row) const { return cells[col * row_count() + row]; }
};

// Core matrix rule over plain accessors, so hand-fed length tables and live
// run results share one implementation.
inline SpeedupMatrix build_speedup_matrix(
    const std::vector<ColumnMeta>& columns, const std::vector<std::string>& row_labels,
    const std::function<CaseOutcome(int, int)>& outcome_of,
    const std::function<std::int64_t(int, int)>& length_of,
    const std::function<bool(int, int)>& trivial_of) {
  SpeedupMatrix m;
  m.columns = columns;
  m.row_labels = row_labels;
  m.cells.resize(columns.size() * row_labels.size());

  for (int col = 0; col < m.column_count(); ++col) {
    const ColumnMeta& meta = columns[col];
    int family_start = col;
    while (family_start > 0 && columns[family_start - 1].family == meta.family) --family_start;
    for (int row = 0; row < m.row_count(); ++row) {
      MatrixCell& cell = m.at(col, row);
      cell.trivial = trivial_of(col, row);
      CaseOutcome outcome = outcome_of(col, row);
      if (outcome != CaseOutcome::Proved) {
        cell.status = outcome == CaseOutcome::Budget ? CellStatus::UndefBudget
                                                     : CellStatus::UndefUnprovable;
        continue;
      }
      std::int64_t d = length_of(col, row);
      cell.d_case = d;
      if (meta.prefix_len == 0) {
        cell.status = CellStatus::Value;
        cell.delta = 0;
        cell.d_ref = d;
        continue;
      }
      std::optional<std::int64_t> ref;
      for (int k = family_start; k < col; ++k) {
        if (outcome_of(k, row) != CaseOutcome::Proved) continue;
        std::int64_t dk = length_of(k, row);
        if (!ref || dk < *ref) ref = dk;
      }
      if (!ref) {
        cell.status = CellStatus::UndefNoReference;
        continue;
      }
      cell.status = CellStatus::Value;
      cell.d_ref = *ref;
      cell.delta = speedup_delta(*ref, d);
    }
  }
  return m;
}

inline SpeedupMatrix build_speedup_matrix(const CaseGrid& grid, const RunResults& results,
                                          const ExperimentConfig& cfg,
                                          const std::vector<std::string>& config_lines = {}) {
  std::vector<ColumnMeta> columns;
  for (int c = 0; c < grid.columns(); ++c)
    columns.push_back(
        ColumnMeta{grid.family_of(c), grid.prefix_of(c), grid.theory_at(c).size()});
  std::vector<std::string> rows;
  for (const BigInt& idx : grid.objective_indices) rows.push_back(idx.str());
  (void)cfg;
  auto res = [&](int c, int r) -> const CaseResult& {
    return results.results[c * grid.rows() + r];
  };
  SpeedupMatrix m = build_speedup_matrix(
      columns, rows, [&](int c, int r) { return res(c, r).outcome; },
      [&](int c, int r) { return res(c, r).proof_length; },
      [&](int c, int r) { return grid.trivial_cell(c, r); });
  m.config_lines = config_lines;
  return m;
}

inline IncidenceClass classify(const MatrixCell& cell) {
  if (!cell.defined()) return IncidenceClass::Undefined;
  if (cell.delta > 0) return IncidenceClass::Positive;
  if (cell.delta < 0) return IncidenceClass::Negative;
  return IncidenceClass::Zero;
}

inline IncidenceMatrix classify_incidence(const SpeedupMatrix& m) {
  IncidenceMatrix inc;
  inc.columns = m.columns;
  inc.row_labels = m.row_labels;
  inc.config_lines = m.config_lines;
  inc.cells.reserve(m.cells.size());
  for (const MatrixCell& c : m.cells) inc.cells.push_back(classify(c));
  return inc;
}

// ── CSV ─────────────────────────────────────────────────────────────────────

namespace detail {

inline std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline std::string cell_token(const MatrixCell& c) {
  switch (c.status) {
    case CellStatus::Value: return rational_text(c.delta);
    case CellStatus::UndefUnprovable: return "U:unprovable";
    case CellStatus::UndefBudget: return "U:budget";
    case CellStatus::UndefNoReference: return "U:noref";
  }
  return "U:unprovable";
}

inline MatrixCell cell_from_token(const std::string& tok) {
  MatrixCell c;
  if (tok == "U:unprovable") {
    c.status = CellStatus::UndefUnprovable;
  } else if (tok == "U:budget") {
    c.status = CellStatus::UndefBudget;
  } else if (tok == "U:noref") {
    c.status = CellStatus::UndefNoReference;
  } else {
    c.status = CellStatus::Value;
    c.delta = Rational(tok);
  }
  return c;
}

inline std::string incidence_token(IncidenceClass c) {
  switch (c) {
    case IncidenceClass::Positive: return "+";
    case IncidenceClass::Zero: return "0";
    case IncidenceClass::Negative: return "-";
    case IncidenceClass::Undefined: return "U";
  }
  return "U";
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i != text.size() && text[i] != sep) continue;
    out.push_back(text.substr(start, i - start));
    start = i + 1;
  }
  return out;
}

inline void write_matrix_header(std::ostream& os, const char* tag,
                                const std::vector<ColumnMeta>& columns,
                                const std::vector<std::string>& rows,
                                const std::vector<std::string>& config_lines) {
  os << "# prooflab " << tag << " v1\n";
  for (const std::string& line : config_lines) os << "# cfg " << line << "\n";
  os << "# columns ";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) os << ";";
    os << columns[i].family << ":" << columns[i].prefix_len << ":" << columns[i].theory_size;
  }
  os << "\n# rows ";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ";";
    os << rows[i];
  }
  os << "\n";
}

struct MatrixHeader {
  std::vector<ColumnMeta> columns;
  std::vector<std::string> rows;
  std::vector<std::string> config_lines;
};

inline MatrixHeader read_matrix_header(std::istream& is, const char* tag) {
  MatrixHeader h;
  std::string line;
  if (!std::getline(is, line) || line != std::string("# prooflab ") + tag + " v1")
    throw std::runtime_error(std::string("bad header, expected ") + tag + " file");
  while (is.peek() == '#') {
    std::getline(is, line);
    if (line.rfind("# cfg ", 0) == 0) {
      h.config_lines.push_back(line.substr(6));
    } else if (line.rfind("# columns ", 0) == 0) {
      for (const std::string& piece : split(line.substr(10), ';')) {
        auto f = split(piece, ':');
        if (f.size() != 3) throw std::runtime_error("bad column metadata: " + piece);
        h.columns.push_back(ColumnMeta{std::stoi(f[0]), std::stoi(f[1]), std::stoi(f[2])});
      }
    } else if (line.rfind("# rows ", 0) == 0) {
      h.rows = split(line.substr(7), ';');
    } else {
      throw std::runtime_error("unknown header line: " + line);
    }
  }
  if (h.columns.empty() || h.rows.empty())
    throw std::runtime_error("matrix header lacks column or row metadata");
  return h;
}

} // namespace detail

inline void write_speedup_csv(std::ostream& os, const SpeedupMatrix& m) {
  detail::write_matrix_header(os, "speedup-matrix", m.columns, m.row_labels, m.config_lines);
  for (int row = 0; row < m.row_count(); ++row) {
    for (int col = 0; col < m.column_count(); ++col) {
      if (col) os << ",";
      os << detail::cell_token(m.at(col, row));
    }
    os << "\n";
  }
}

inline SpeedupMatrix read_speedup_csv(std::istream& is) {
  auto h = detail::read_matrix_header(is, "speedup-matrix");
  SpeedupMatrix m;
  m.columns = h.columns;
  m.row_labels = h.rows;
  m.config_lines = h.config_lines;
  m.cells.resize(m.columns.size() * m.row_labels.size());
  std::string line;
  for (int row = 0; row < m.row_count(); ++row) {
    if (!std::getline(is, line)) throw std::runtime_error("matrix body truncated");
    auto tokens = detail::split(line, ',');
    if (static_cast<int>(tokens.size()) != m.column_count())
      throw std::runtime_error("matrix row has wrong width");
    for (int col = 0; col < m.column_count(); ++col)
      m.at(col, row) = detail::cell_from_token(tokens[col]);
  }
  return m;
}

inline void write_incidence_csv(std::ostream& os, const IncidenceMatrix& m) {
  detail::write_matrix_header(os, "incidence-matrix", m.columns, m.row_labels, m.config_lines);
  for (int row = 0; row < m.row_count(); ++row) {
    for (int col = 0; col < m.column_count(); ++col) {
      if (col) os << ",";
      os << detail::incidence_token(m.at(col, row));
    }
    os << "\n";
  }
}

inline IncidenceMatrix read_incidence_csv(std::istream& is) {
  auto h = detail::read_matrix_header(is, "incidence-matrix");
  IncidenceMatrix m;
  m.columns = h.columns;
  m.row_labels = h.rows;
  m.config_lines = h.config_lines;
  m.cells.resize(m.columns.size() * m.row_labels.size());
  std::string line;
  for (int row = 0; row < m.row_count(); ++row) {
    if (!std::getline(is, line)) throw std::runtime_error("matrix body truncated");
    auto tokens = detail::split(line, ',');
    if (static_cast<int>(tokens.size()) != m.column_count())
      throw std::runtime_error("matrix row has wrong width");
    for (int col = 0; col < m.column_count(); ++col) {
      IncidenceClass c;
      if (tokens[col] == "+") c = IncidenceClass::Positive;
      else if (tokens[col] == "0") c = IncidenceClass::Zero;
      else if (tokens[col] == "-") c = IncidenceClass::Negative;
      else if (tokens[col] == "U") c = IncidenceClass::Undefined;
      else throw std::runtime_error("unknown incidence token: " + tokens[col]);
      m.cells[col * m.row_count() + row] = c;
    }
  }
  return m;
}

// ── results CSV ─────────────────────────────────────────────────────────────

inline void write_results_csv(std::ostream& os, const CaseGrid& grid, const RunResults& results,
                              const ExperimentConfig& cfg,
                              const std::vector<std::string>& config_lines) {
  std::vector<ColumnMeta> columns;
  for (int c = 0; c < grid.columns(); ++c)
    columns.push_back(ColumnMeta{grid.family_of(c), grid.prefix_of(c), grid.theory_at(c).size()});
  std::vector<std::string> rows;
  for (const BigInt& idx : grid.objective_indices) rows.push_back(idx.str());
  detail::write_matrix_header(os, "results", columns, rows, config_lines);
  os << "family,column,row,prefix_len,status,D,states,millis,seed\n";
  for (int col = 0; col < grid.columns(); ++col)
    for (int row = 0; row < grid.rows(); ++row) {
      const CaseResult& r = results.results[col * grid.rows() + row];
      os << grid.family_of(col) << "," << col << "," << row << "," << grid.prefix_of(col) << ","
         << case_outcome_name(r.outcome) << ",";
      if (r.outcome == CaseOutcome::Proved) os << r.proof_length;
      os << "," << r.states << "," << r.millis << "," << cfg.seed << "\n";
    }
}

struct ResultsFile {
  std::vector<ColumnMeta> columns;
  std::vector<std::string> row_labels;
  std::vector<std::string> config_lines;
  std::vector<CaseResult> results;  // column-major

  int column_count() const { return static_cast<int>(columns.size()); }
  int row_count() const { return static_cast<int>(row_labels.size()); }
};

inline ResultsFile read_results_csv(std::istream& is) {
  auto h = detail::read_matrix_header(is, "results");
  ResultsFile f;
  f.columns = h.columns;
  f.row_labels = h.rows;
  f.config_lines = h.config_lines;
  f.results.resize(f.columns.size() * f.row_labels.size());
  std::string line;
  if (!std::getline(is, line) || line.rfind("family,", 0) != 0)
    throw std::runtime_error("results CSV lacks its column header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto t = detail::split(line, ',');
    if (t.size() != 9) throw std::runtime_error("bad results row: " + line);
    CaseResult r;
    r.column = std::stoi(t[1]);
    r.row = std::stoi(t[2]);
    const std::string& status = t[4];
    if (status == "proved") {
      r.outcome = CaseOutcome::Proved;
      r.proof_length = std::stoll(t[5]);
    } else if (status == "budget") {
      r.outcome = CaseOutcome::Budget;
    } else if (status == "unprovable") {
      r.outcome = CaseOutcome::Unprovable;
    } else {
      throw std::runtime_error("unknown case status: " + status);
    }
    r.states = std::stoull(t[6]);
    r.millis = std::stoll(t[7]);
    if (r.column < 0 || r.column >= f.column_count() || r.row < 0 || r.row >= f.row_count())
      throw std::runtime_error("results row out of range");
    f.results[r.column * f.row_count() + r.row] = r;
  }
  return f;
}

// Matrix from a persisted results file; the trivial-cell rule (row objective
// within the column's prefix) is recomputed from the metadata.
inline SpeedupMatrix build_speedup_matrix(const ResultsFile& f) {
  auto res = [&](int c, int r) -> const CaseResult& { return f.results[c * f.row_count() + r]; };
  SpeedupMatrix m = build_speedup_matrix(
      f.columns, f.row_labels, [&](int c, int r) { return res(c, r).outcome; },
      [&](int c, int r) { return res(c, r).proof_length; },
      [&](int c, int r) { return r < f.columns[c].prefix_len; });
  m.config_lines = f.config_lines;
  return m;
}

} // namespace prooflab
