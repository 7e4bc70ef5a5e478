#pragma once

// ── audit.hpp ───────────────────────────────────────────────────────────────
// Normality audit over a speed-up matrix.
//
// Counts run over the defined (provable, in-budget) entries. A trivial cell
// is one whose row objective belongs to the column's added prefix; it is
// degenerate when its reference length is already 1 (the objective was an
// axiom of the reference theory), forcing delta 0. The engine under audit is
// possibly normal iff no defined entry is negative and every non-degenerate
// trivial cell came out strictly positive; witnesses list the offending
// cells otherwise.
//
// The epsilon-hat table reports, per family and augmented-theory size, the
// smallest defined delta observed, as an empirical bound curve.
//
// The summary renders the audit in the fixed column layout
//   Exp. Num. | Cases | δ>0 | Percentage | δ<0 | Ratio
// with the percentage truncated to one decimal and the ratio to two (the
// quotients are reported as printed, not rounded up); a run without negative
// entries renders its ratio as ∞.
// ────────────────────────────────────────────────────────────────────────────

#include <map>
#include <optional>
#include <sstream>

#include "prooflab/matrix.hpp"

namespace prooflab {

struct WitnessCell {
  int column = 0;
  int row = 0;
  Rational delta;
  std::string reason;
};

struct EpsilonEntry {
  int family = 0;
  int theory_size = 0;
  std::optional<Rational> min_delta;
};

struct NormalityAudit {
  std::string experiment_id = "1";
  std::int64_t total_cells = 0;
  std::int64_t provable_cases = 0;  // defined entries
  std::int64_t positive = 0;
  std::int64_t zero = 0;
  std::int64_t negative = 0;
  std::int64_t undefined_cells = 0;
  std::int64_t trivial_cells = 0;            // defined trivial cells
  std::int64_t trivial_nondegenerate = 0;    // reference length >= 2
  std::int64_t trivial_detected = 0;         // of those, delta > 0
  std::vector<EpsilonEntry> epsilon_table;
  bool possibly_normal = false;
  std::vector<WitnessCell> witnesses;
};

inline NormalityAudit audit_matrix(const SpeedupMatrix& m, const std::string& experiment_id = "1") {
  NormalityAudit a;
  a.experiment_id = experiment_id;
  a.total_cells = static_cast<std::int64_t>(m.cells.size());

  std::map<std::pair<int, int>, std::optional<Rational>> eps;  // (family, size) -> min delta
  for (int col = 0; col < m.column_count(); ++col) {
    const ColumnMeta& meta = m.columns[col];
    auto key = std::make_pair(meta.family, meta.theory_size);
    if (!eps.count(key)) eps[key] = std::nullopt;
    for (int row = 0; row < m.row_count(); ++row) {
      const MatrixCell& cell = m.at(col, row);
      if (!cell.defined()) {
        ++a.undefined_cells;
        continue;
      }
      ++a.provable_cases;
      auto& slot = eps[key];
      if (!slot || cell.delta < *slot) slot = cell.delta;
      if (cell.delta > 0) ++a.positive;
      else if (cell.delta < 0) {
        ++a.negative;
        a.witnesses.push_back({col, row, cell.delta, "negative speed-up"});
      } else ++a.zero;

      if (cell.trivial) {
        ++a.trivial_cells;
        bool degenerate = cell.d_ref.has_value() && *cell.d_ref == 1;
        if (!degenerate && cell.d_ref.has_value()) {
          ++a.trivial_nondegenerate;
          if (cell.delta > 0) ++a.trivial_detected;
          else a.witnesses.push_back({col, row, cell.delta, "undetected trivial case"});
        }
      }
    }
  }
  for (const auto& [key, min_delta] : eps)
    a.epsilon_table.push_back({key.first, key.second, min_delta});
  a.possibly_normal =
      a.negative == 0 && a.trivial_detected == a.trivial_nondegenerate;
  return a;
}

namespace detail {

// value/div truncated to `decimals` places, rendered as plain text.
inline std::string truncated_quotient(std::int64_t value, std::int64_t div, int decimals) {
  std::int64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  std::int64_t scaled = div == 0 ? 0 : value * scale / div;
  std::string digits = std::to_string(scaled % scale);
  while (static_cast<int>(digits.size()) < decimals) digits.insert(digits.begin(), '0');
  return std::to_string(scaled / scale) + "." + digits;
}

} // namespace detail

inline std::string rational_to_text(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// Table-1 style summary plus verdict, trivial detection and the bound table.
inline std::string summarize(const NormalityAudit& a) {
  std::ostringstream os;
  os << "Exp. Num. | Cases | δ>0 | Percentage | δ<0 | Ratio\n";
  os << a.experiment_id << " | " << a.provable_cases << " | " << a.positive << " | "
     << detail::truncated_quotient(a.positive * 100, a.provable_cases, 1) << "% | " << a.negative
     << " | ";
  if (a.negative == 0) os << "∞";
  else os << detail::truncated_quotient(a.positive, a.negative, 2);
  os << "\n";
  os << "Negative share: " << detail::truncated_quotient(a.negative * 100, a.provable_cases, 1)
     << "% of provable\n";
  os << "Verdict: " << (a.possibly_normal ? "possibly-normal" : "not-normal");
  if (!a.possibly_normal) {
    os << " (" << a.witnesses.size() << " witness cell" << (a.witnesses.size() == 1 ? "" : "s");
    std::size_t shown = 0;
    for (const WitnessCell& w : a.witnesses) {
      if (shown++ == 6) {
        os << "; ...";
        break;
      }
      os << "; col " << w.column << " row " << w.row << " δ=" << rational_to_text(w.delta) << " "
         << w.reason;
    }
    os << ")";
  }
  os << "\n";
  os << "Trivial cells: " << a.trivial_cells << ", non-degenerate: " << a.trivial_nondegenerate
     << ", detected: " << a.trivial_detected << " ("
     << detail::truncated_quotient(a.trivial_detected * 100, a.trivial_nondegenerate, 1)
     << "% detection rate)\n";
  os << "Undefined cells: " << a.undefined_cells << " of " << a.total_cells << "\n";
  os << "Epsilon-hat (min defined δ per family by |t'|):\n";
  int last_family = -1;
  for (const EpsilonEntry& e : a.epsilon_table) {
    if (e.family != last_family) {
      if (last_family != -1) os << "\n";
      os << "  family " << e.family << ":";
      last_family = e.family;
    }
    os << " |t'|=" << e.theory_size << " -> "
       << (e.min_delta ? rational_to_text(*e.min_delta) : "n/a") << ";";
  }
  if (last_family != -1) os << "\n";
  return os.str();
}

} // namespace prooflab
