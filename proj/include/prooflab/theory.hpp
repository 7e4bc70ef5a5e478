#pragma once

// ── theory.hpp ──────────────────────────────────────────────────────────────
// Theories are finite sets of formulas identified by their positions in the
// propositions array. A theory of size j is equivalently described by its
// j-representation K = [k_1, ..., k_j]: k_i counts the zeros between the
// (i-1)-th and i-th set bits of the theory's characteristic bitstring, so
//
//     idx_i = k_1 + ... + k_i + i.
//
// The separation degree of K is the sum of its gaps; theories sharing that
// sum form a separation class.
// ────────────────────────────────────────────────────────────────────────────

#include <algorithm>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "prooflab/formula.hpp"
#include "prooflab/generation.hpp"
#include "prooflab/numeric.hpp"

namespace prooflab {

struct JRepresentation {
  std::vector<BigInt> gaps;

  int size() const { return static_cast<int>(gaps.size()); }
};

inline std::vector<BigInt> indices_from_jrep(const JRepresentation& k) {
  std::vector<BigInt> out;
  out.reserve(k.gaps.size());
  BigInt acc = 0;
  for (std::size_t i = 0; i < k.gaps.size(); ++i) {
    if (k.gaps[i] < 0) throw std::invalid_argument("j-representation gaps must be >= 0");
    acc += k.gaps[i];
    out.push_back(acc + BigInt(i + 1));
  }
  return out;
}

inline JRepresentation jrep_from_indices(std::span<const BigInt> indices) {
  JRepresentation k;
  k.gaps.reserve(indices.size());
  BigInt prev = 0;
  for (const BigInt& idx : indices) {
    if (idx <= prev) throw std::invalid_argument("indices must be strictly ascending and >= 1");
    k.gaps.push_back(idx - prev - 1);
    prev = idx;
  }
  return k;
}

inline BigInt separation_degree(const JRepresentation& k) {
  BigInt g = 0;
  for (const BigInt& gap : k.gaps) g += gap;
  return g;
}

// [g] = all theories whose gap counts sum to g.
struct SeparationClass {
  BigInt order;
};

struct TheoryRole {
  enum class Kind { Base, Derived };
  Kind kind = Kind::Base;
  int base_id = -1;     // Derived only: index of the base theory
  int prefix_len = 0;   // Derived only: length of the objective prefix

  static TheoryRole base() { return {}; }
  static TheoryRole derived(int base_id, int prefix_len) {
    return {Kind::Derived, base_id, prefix_len};
  }
};

struct Theory {
  GenerationParams params;
  std::vector<BigInt> members;  // strictly ascending formula indices
  TheoryRole role;

  int size() const { return static_cast<int>(members.size()); }

  JRepresentation jrep() const { return jrep_from_indices(members); }

  std::vector<Formula> formulas(const FormulaSpace& space) const {
    std::vector<Formula> out;
    out.reserve(members.size());
    for (const BigInt& idx : members) out.push_back(space.at(idx));
    return out;
  }
};

inline void validate_theory(const Theory& t, const FormulaSpace& space) {
  if (!(t.params == space.params()))
    throw std::invalid_argument("theory params do not match the formula space");
  BigInt prev = 0;
  for (const BigInt& idx : t.members) {
    if (idx <= prev) throw std::invalid_argument("theory members must be strictly ascending");
    if (idx > space.size()) throw std::invalid_argument("theory member index exceeds the space");
    prev = idx;
  }
}

// Def: max member depth. Empty theories have no depth.
inline int theory_depth(const Theory& t, const FormulaSpace& space) {
  if (t.members.empty()) throw std::invalid_argument("theory_depth: empty theory");
  int d = 0;
  for (const BigInt& idx : t.members) d = std::max(d, space.at(idx).depth());
  return d;
}

// ── text format ─────────────────────────────────────────────────────────────

inline std::string ops_to_text(const OpsSet& ops) {
  if (ops == OpsSet::all()) return "all";
  std::string out;
  for (Connective c : ops.list()) {
    if (!out.empty()) out.push_back(',');
    out += connective_name(c);
  }
  return out;
}

inline OpsSet ops_from_text(std::string_view text) {
  if (text == "all") return OpsSet::all();
  OpsSet out{0};
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i != text.size() && text[i] != ',') continue;
    std::string_view name = text.substr(start, i - start);
    bool found = false;
    for (Connective c : kBinaryConnectives) {
      if (name == connective_name(c)) {
        out.mask |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(c));
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("unknown connective name: " + std::string(name));
    start = i + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty connective set");
  return out;
}

inline std::string params_to_text(const GenerationParams& p) {
  std::ostringstream os;
  os << "n=" << p.max_depth << " m=" << p.var_count << " ops=" << ops_to_text(p.ops);
  return os.str();
}

inline GenerationParams params_from_text(std::string_view text) {
  GenerationParams p;
  std::istringstream is{std::string(text)};
  std::string field;
  bool saw_n = false, saw_m = false;
  while (is >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad params field: " + field);
    std::string key = field.substr(0, eq), value = field.substr(eq + 1);
    if (key == "n") { p.max_depth = std::stoi(value); saw_n = true; }
    else if (key == "m") { p.var_count = std::stoi(value); saw_m = true; }
    else if (key == "ops") p.ops = ops_from_text(value);
    else throw std::invalid_argument("unknown params key: " + key);
  }
  if (!saw_n || !saw_m) throw std::invalid_argument("params need n= and m=");
  validate(p);
  return p;
}

inline std::string theory_to_text(const Theory& t) {
  std::ostringstream os;
  os << "params: " << params_to_text(t.params) << "\n";
  os << "j-rep: ";
  JRepresentation k = t.jrep();
  for (std::size_t i = 0; i < k.gaps.size(); ++i) {
    if (i) os << ",";
    os << k.gaps[i];
  }
  os << "\n";
  return os.str();
}

inline Theory theory_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  Theory t;
  bool saw_params = false, saw_jrep = false;
  while (std::getline(is, line)) {
    if (line.rfind("params: ", 0) == 0) {
      t.params = params_from_text(line.substr(8));
      saw_params = true;
    } else if (line.rfind("j-rep: ", 0) == 0) {
      JRepresentation k;
      std::string tail = line.substr(7);
      std::size_t start = 0;
      for (std::size_t i = 0; i <= tail.size(); ++i) {
        if (i != tail.size() && tail[i] != ',') continue;
        k.gaps.emplace_back(tail.substr(start, i - start));
        start = i + 1;
      }
      t.members = indices_from_jrep(k);
      saw_jrep = true;
    }
  }
  if (!saw_params || !saw_jrep)
    throw std::invalid_argument("theory text needs 'params:' and 'j-rep:' lines");
  return t;
}

} // namespace prooflab
