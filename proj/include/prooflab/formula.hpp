#pragma once

// ── formula.hpp ─────────────────────────────────────────────────────────────
// Propositional formulas as immutable structurally-shared trees.
//
// A formula is one of:
//   Var(i)          propositional variable p_i, 1-based
//   Not(a)          negation
//   Binary(op,a,b)  op in {Iff, Implies, And, Or} (this order is canonical
//                   everywhere: enumeration, tie-breaking, rendering)
//   Falsum          the contradiction constant, written "#". It exists for
//                   proof lines (negation rules) and is never produced by the
//                   formula-space enumeration.
//
// Equality is structural; no semantic normalization happens anywhere.
// Every node caches its hash and its composition depth (the least n such
// that the formula belongs to the depth-n generation level): negation adds
// one level, a binary node sits one level above the max of its children's
// negation-adjusted levels (a negation child contributes its own depth, any
// other child contributes depth + 1).
// ────────────────────────────────────────────────────────────────────────────

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace prooflab {

enum class Connective : std::uint8_t { Iff = 0, Implies = 1, And = 2, Or = 3 };

inline constexpr std::array<Connective, 4> kBinaryConnectives{
    Connective::Iff, Connective::Implies, Connective::And, Connective::Or};

inline const char* connective_name(Connective c) {
  switch (c) {
    case Connective::Iff: return "iff";
    case Connective::Implies: return "implies";
    case Connective::And: return "and";
    case Connective::Or: return "or";
  }
  return "?";
}

// Subset of the binary connectives, e.g. the "without disjunction" fragment.
// Negation is not part of the set; it is always available.
struct OpsSet {
  std::uint8_t mask = 0x0f;

  static OpsSet all() { return OpsSet{0x0f}; }
  static OpsSet of(std::initializer_list<Connective> ops) {
    OpsSet s{0};
    for (Connective c : ops) s.mask |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(c));
    return s;
  }
  static OpsSet without(Connective c) {
    OpsSet s = all();
    s.mask &= static_cast<std::uint8_t>(~(1u << static_cast<unsigned>(c)));
    return s;
  }

  bool contains(Connective c) const {
    return (mask >> static_cast<unsigned>(c)) & 1u;
  }
  int count() const {
    int n = 0;
    for (Connective c : kBinaryConnectives) n += contains(c) ? 1 : 0;
    return n;
  }
  bool empty() const { return mask == 0; }

  // Members in canonical order.
  std::vector<Connective> list() const {
    std::vector<Connective> out;
    for (Connective c : kBinaryConnectives)
      if (contains(c)) out.push_back(c);
    return out;
  }
  // 0-based rank of c among the members, canonical order.
  int rank_of(Connective c) const {
    int r = 0;
    for (Connective k : kBinaryConnectives) {
      if (k == c) return contains(c) ? r : -1;
      if (contains(k)) ++r;
    }
    return -1;
  }

  bool operator==(const OpsSet&) const = default;
};

class Formula {
 public:
  enum class Kind : std::uint8_t { Var, Not, Binary, Falsum };

  Formula() : Formula(variable(1)) {}

  static Formula variable(int index) {
    if (index < 1) throw std::invalid_argument("variable index must be >= 1");
    Node n;
    n.kind = Kind::Var;
    n.var = index;
    n.depth = 0;
    n.hash = mix(0x9e3779b97f4a7c15ull, static_cast<std::uint64_t>(index));
    return Formula(std::make_shared<const Node>(std::move(n)));
  }

  static Formula falsum() {
    Node n;
    n.kind = Kind::Falsum;
    n.depth = 0;
    n.hash = 0x7b0ef7cd0a9c5d3full;
    return Formula(std::make_shared<const Node>(std::move(n)));
  }

  static Formula negation(Formula child) {
    Node n;
    n.kind = Kind::Not;
    n.depth = child.depth() + 1;
    n.hash = mix(0xbf58476d1ce4e5b9ull, child.hash());
    n.a = child.node_;
    return Formula(std::make_shared<const Node>(std::move(n)));
  }

  static Formula binary(Connective op, Formula lhs, Formula rhs) {
    Node n;
    n.kind = Kind::Binary;
    n.op = op;
    n.depth = std::max(adjusted_level(lhs), adjusted_level(rhs));
    n.hash = mix(mix(0x94d049bb133111ebull + static_cast<std::uint64_t>(op), lhs.hash()),
                 rhs.hash());
    n.a = lhs.node_;
    n.b = rhs.node_;
    return Formula(std::make_shared<const Node>(std::move(n)));
  }

  Kind kind() const { return node_->kind; }
  bool is_variable() const { return kind() == Kind::Var; }
  bool is_negation() const { return kind() == Kind::Not; }
  bool is_binary() const { return kind() == Kind::Binary; }
  bool is_falsum() const { return kind() == Kind::Falsum; }
  bool is_binary_op(Connective c) const { return is_binary() && op() == c; }

  int var_index() const { return node_->var; }
  Connective op() const { return node_->op; }
  Formula child() const { return Formula(node_->a); }  // Not
  Formula lhs() const { return Formula(node_->a); }    // Binary
  Formula rhs() const { return Formula(node_->b); }    // Binary

  // Least n with this formula in the depth-n generation level.
  int depth() const { return node_->depth; }
  std::uint64_t hash() const { return node_->hash; }

  bool operator==(const Formula& other) const {
    return equal(node_.get(), other.node_.get());
  }
  bool operator!=(const Formula& other) const { return !(*this == other); }

  // Largest variable index appearing; 0 when no variable occurs.
  int max_variable() const {
    switch (kind()) {
      case Kind::Var: return var_index();
      case Kind::Falsum: return 0;
      case Kind::Not: return child().max_variable();
      case Kind::Binary: return std::max(lhs().max_variable(), rhs().max_variable());
    }
    return 0;
  }

  bool contains_falsum() const {
    switch (kind()) {
      case Kind::Var: return false;
      case Kind::Falsum: return true;
      case Kind::Not: return child().contains_falsum();
      case Kind::Binary: return lhs().contains_falsum() || rhs().contains_falsum();
    }
    return false;
  }

 private:
  struct Node {
    Kind kind = Kind::Var;
    Connective op = Connective::Iff;
    int var = 0;
    int depth = 0;
    std::uint64_t hash = 0;
    std::shared_ptr<const Node> a, b;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::uint64_t mix(std::uint64_t seed, std::uint64_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
    return seed;
  }

  static int adjusted_level(const Formula& f) {
    return f.is_negation() ? f.depth() : f.depth() + 1;
  }

  static bool equal(const Node* x, const Node* y) {
    if (x == y) return true;
    if (x->hash != y->hash || x->kind != y->kind) return false;
    switch (x->kind) {
      case Kind::Var: return x->var == y->var;
      case Kind::Falsum: return true;
      case Kind::Not: return equal(x->a.get(), y->a.get());
      case Kind::Binary:
        return x->op == y->op && equal(x->a.get(), y->a.get()) && equal(x->b.get(), y->b.get());
    }
    return false;
  }

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept {
    return static_cast<std::size_t>(f.hash());
  }
};

// All distinct subformulas, preorder, first occurrence wins.
inline void collect_subformulas(const Formula& f, std::vector<Formula>& out) {
  for (const Formula& g : out)
    if (g == f) return;
  out.push_back(f);
  switch (f.kind()) {
    case Formula::Kind::Var:
    case Formula::Kind::Falsum: break;
    case Formula::Kind::Not: collect_subformulas(f.child(), out); break;
    case Formula::Kind::Binary:
      collect_subformulas(f.lhs(), out);
      collect_subformulas(f.rhs(), out);
      break;
  }
}

inline std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  collect_subformulas(f, out);
  return out;
}

} // namespace prooflab
