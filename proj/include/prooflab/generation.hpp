#pragma once

// ── generation.hpp ──────────────────────────────────────────────────────────
// The bounded formula space P(n,m) and its canonical generation order.
//
// Level structure, for a fixed variable count m and binary-connective set ops:
//
//   P(0,m)  =  p1, ..., pm
//   P(k,m)  =  S_k  ∪  { op(a,b) : op in ops, a,b in S_k }
//   S_k     =  P(k-1,m)  ∪  { ~a : a in P(k-1,m) }
//
// The enumeration lists P(k-1,m) first (its own order), then the new
// negations ~a for a in P(k-1,m) in a's order (skipping those already
// present, i.e. those with a in P(k-2,m)), then the binaries in
// lexicographic (op, S-index of a, S-index of b) order, skipping the
// binaries that already appeared at the previous level (exactly the pairs
// with both S-indices at most |S_{k-1}|). First occurrence wins; the result
// is duplicate-free and each level is a prefix of the next.
//
// Sizes obey the closed recurrence (validated against direct construction
// in the test suite):
//
//   s(k) = 2 f(k-1) - f(k-2)          (f(-1) = 0)
//   f(k) = s(k) + |ops| (s(k)^2 - s(k-1)^2)      (s(0) = 0)
//
// Indexing is 1-based and arithmetic: positions are computed from the size
// tables without materializing the space, so indices far beyond anything
// that fits in memory are fine.
// ────────────────────────────────────────────────────────────────────────────

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prooflab/formula.hpp"
#include "prooflab/numeric.hpp"

namespace prooflab {

struct GenerationParams {
  int max_depth = 0;   // n
  int var_count = 1;   // m
  OpsSet ops = OpsSet::all();

  bool operator==(const GenerationParams&) const = default;
};

inline void validate(const GenerationParams& p) {
  if (p.max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");
  if (p.var_count < 1) throw std::invalid_argument("var_count must be >= 1");
  if (p.ops.empty()) throw std::invalid_argument("ops must be non-empty");
}

class IndexRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NotInSpaceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FormulaSpace {
 public:
  explicit FormulaSpace(GenerationParams params) : params_(params) {
    validate(params);
    const int n = params.max_depth;
    const BigInt ops = params.ops.count();
    f_.resize(n + 1);
    s_.resize(n + 1);
    f_[0] = params.var_count;
    s_[0] = 0;
    for (int k = 1; k <= n; ++k) {
      s_[k] = 2 * f_[k - 1] - f_at(k - 2);
      f_[k] = s_[k] + ops * (s_[k] * s_[k] - s_[k - 1] * s_[k - 1]);
    }
  }

  const GenerationParams& params() const { return params_; }
  const BigInt& size() const { return f_.back(); }

  // f(level, m); level in [0, n].
  const BigInt& level_count(int level) const {
    if (level < 0 || level > params_.max_depth)
      throw std::invalid_argument("level out of range");
    return f_[level];
  }

  // The i-th formula of the enumeration, 1-based.
  Formula at(const BigInt& index) const {
    if (index < 1 || index > size())
      throw IndexRangeError("formula index out of range: " + index.str());
    return at_level(index, params_.max_depth);
  }

  // Inverse of at(); throws NotInSpaceError when f is outside P(n,m).
  BigInt index_of(const Formula& f) const {
    BigInt idx = index_unchecked(f);
    return idx;
  }

  std::optional<BigInt> try_index_of(const Formula& f) const {
    try {
      return index_unchecked(f);
    } catch (const NotInSpaceError&) {
      return std::nullopt;
    }
  }

  bool contains(const Formula& f) const { return try_index_of(f).has_value(); }

  // Restartable forward stream over the enumeration.
  class Enumerator {
   public:
    explicit Enumerator(const FormulaSpace& space) : space_(&space), next_(1) {}

    bool done() const { return next_ > space_->size(); }
    const BigInt& position() const { return next_; }  // index of the next formula
    Formula next() {
      if (done()) throw IndexRangeError("enumeration exhausted");
      return space_->at(next_++);
    }
    void reset() { next_ = 1; }

   private:
    const FormulaSpace* space_;
    BigInt next_;
  };

  Enumerator enumerate() const { return Enumerator(*this); }

  std::vector<Formula> prefix(std::size_t count) const {
    std::vector<Formula> out;
    out.reserve(count);
    Enumerator e(*this);
    while (out.size() < count && !e.done()) out.push_back(e.next());
    if (out.size() < count) throw IndexRangeError("prefix longer than the space");
    return out;
  }

 private:
  BigInt f_at(int k) const { return k < 0 ? BigInt(0) : f_[k]; }
  BigInt s_at(int k) const { return k < 0 ? BigInt(0) : s_[k]; }

  Formula at_level(const BigInt& index, int level) const {
    if (level == 0) {
      return Formula::variable(static_cast<int>(index));
    }
    const BigInt& prev = f_[level - 1];
    if (index <= prev) return at_level(index, level - 1);
    const BigInt& s = s_[level];
    if (index <= s) {
      // New negation block: r-th entry negates the r-th formula of depth
      // exactly level-1, which sits at position f(level-2) + r.
      BigInt r = index - prev;
      return Formula::negation(at_level(f_at(level - 2) + r, level - 1));
    }
    // Binary block, op-major then (a,b) lexicographic over S-indices,
    // skipping the |S_{level-1}|^2 square already emitted one level down.
    BigInt b0 = index - s - 1;  // 0-based within the block
    const BigInt ssmall = s_[level - 1];
    BigInt per_op = s * s - ssmall * ssmall;
    BigInt op_rank = b0 / per_op;
    BigInt rem = b0 % per_op;
    std::vector<Connective> ops = params_.ops.list();
    Connective op = ops.at(static_cast<std::size_t>(op_rank));

    BigInt narrow = s - ssmall;          // new-b region width for old a rows
    BigInt old_rows = ssmall * narrow;   // pairs with a in S_{level-1}
    BigInt ai, bi;
    if (rem < old_rows) {
      ai = rem / narrow + 1;
      bi = ssmall + rem % narrow + 1;
    } else {
      BigInt rem2 = rem - old_rows;
      ai = ssmall + rem2 / s + 1;
      bi = rem2 % s + 1;
    }
    return Formula::binary(op, at_level(ai, level), at_level(bi, level));
  }

  BigInt index_unchecked(const Formula& f) const {
    switch (f.kind()) {
      case Formula::Kind::Falsum:
        throw NotInSpaceError("falsum is not a member of the formula space");
      case Formula::Kind::Var: {
        if (f.var_index() > params_.var_count)
          throw NotInSpaceError("variable index exceeds var_count");
        return BigInt(f.var_index());
      }
      case Formula::Kind::Not: {
        int d = f.depth();
        if (d > params_.max_depth)
          throw NotInSpaceError("formula depth exceeds max_depth");
        BigInt child_idx = index_unchecked(f.child());
        // The child has depth exactly d-1, so it sits past f(d-2).
        return f_at(d - 1) + (child_idx - f_at(d - 2));
      }
      case Formula::Kind::Binary: {
        if (!params_.ops.contains(f.op()))
          throw NotInSpaceError("connective outside the generation set");
        int d = f.depth();
        if (d > params_.max_depth)
          throw NotInSpaceError("formula depth exceeds max_depth");
        BigInt ai = index_unchecked(f.lhs());
        BigInt bi = index_unchecked(f.rhs());
        const BigInt s = s_at(d);
        const BigInt ssmall = s_at(d - 1);
        BigInt narrow = s - ssmall;
        BigInt rank;
        if (ai <= ssmall) {
          // bi > ssmall is forced: both children one level down would have
          // produced the formula at the previous level already.
          rank = (ai - 1) * narrow + (bi - ssmall - 1);
        } else {
          rank = ssmall * narrow + (ai - ssmall - 1) * s + (bi - 1);
        }
        BigInt per_op = s * s - ssmall * ssmall;
        int op_rank = params_.ops.rank_of(f.op());
        return s + op_rank * per_op + rank + 1;
      }
    }
    throw NotInSpaceError("unreachable formula kind");
  }

  GenerationParams params_;
  std::vector<BigInt> f_;
  std::vector<BigInt> s_;
};

inline BigInt count_formulas(const GenerationParams& params) {
  return FormulaSpace(params).size();
}

} // namespace prooflab
