#pragma once

// ── proof.hpp ───────────────────────────────────────────────────────────────
// Fitch-style natural deduction proof objects and their checker.
//
// A proof is a flat list of lines; nesting is encoded by each line's subproof
// depth. A line of depth d+1 justified as Assumption opens a subproof; the
// subproof extends while following lines keep depth >= d+1 and no sibling
// assumption re-opens at depth <= d+1. Premise lines live at depth 0 and must
// quote theory members. Proof length D counts every line, premises included.
//
// Reference conventions (refs are 1-based line numbers):
//   Premise, Assumption   (no references)
//   Reiteration           {line}
//   AndIntro              {left, right}
//   AndElimLeft/Right     {conjunction}
//   OrIntroLeft           {left disjunct}      (cited line is the left arm)
//   OrIntroRight          {right disjunct}
//   OrElim                {disjunction, f1, l1, f2, l2}; [f1..l1] assumes the
//                         left disjunct, [f2..l2] the right, equal conclusions
//   ImpliesIntro          {first, last} of the subproof [A .. B], yields A->B
//   ImpliesElim           {implication, antecedent}
//   IffIntro              {f1, l1, f2, l2}; [A..B] then [B..A], yields A<->B
//   IffElimLeft           {iff, left operand} yields the right operand
//   IffElimRight          {iff, right operand} yields the left operand
//   NotIntro              {first, last}, last line is #, yields ~A
//   NotElim               {positive, negation} yields #
//   FalsumElim            {falsum line}, yields anything
//   DoubleNegElim         {double negation}; classical mode only
//
// A cited line must be accessible: no line between it and the citing line may
// sit at smaller depth or open a sibling assumption at its depth or below. A
// cited subproof must lie in a still-open enclosing scope.
// ────────────────────────────────────────────────────────────────────────────

#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "prooflab/formula.hpp"
#include "prooflab/parse.hpp"

namespace prooflab {

enum class Justification : std::uint8_t {
  Premise,
  Assumption,
  Reiteration,
  AndIntro,
  AndElimLeft,
  AndElimRight,
  OrIntroLeft,
  OrIntroRight,
  OrElim,
  ImpliesIntro,
  ImpliesElim,
  IffIntro,
  IffElimLeft,
  IffElimRight,
  NotIntro,
  NotElim,
  FalsumElim,
  DoubleNegElim,
};

enum class DeductionMode : std::uint8_t { Classical, Intuitionistic };

inline const char* deduction_mode_name(DeductionMode m) {
  return m == DeductionMode::Classical ? "classical" : "intuitionistic";
}

struct ProofLine {
  Formula formula;
  Justification just = Justification::Premise;
  std::vector<int> refs;  // 1-based
  int depth = 0;
};

struct Proof {
  std::vector<ProofLine> lines;

  int length() const { return static_cast<int>(lines.size()); }
};

namespace detail {

inline bool is_assumption(const ProofLine& l) { return l.just == Justification::Assumption; }

// Line j citable from line i (1-based, j < i).
inline bool line_accessible(const std::vector<ProofLine>& lines, int j, int i) {
  const int dj = lines[j - 1].depth;
  for (int k = j + 1; k <= i; ++k) {
    const ProofLine& lk = lines[k - 1];
    if (lk.depth < dj) return false;
    if (is_assumption(lk) && lk.depth <= dj) return false;
  }
  return true;
}

// Subproof [first..last] at depth want citable from line i at depth want-1.
inline bool subproof_citable(const std::vector<ProofLine>& lines, int first, int last, int i,
                             int want) {
  if (first < 1 || last < first || last >= i) return false;
  const ProofLine& head = lines[first - 1];
  if (!is_assumption(head) || head.depth != want) return false;
  for (int k = first + 1; k <= last; ++k) {
    const ProofLine& lk = lines[k - 1];
    if (lk.depth < want) return false;
    if (is_assumption(lk) && lk.depth <= want) return false;
  }
  if (lines[last - 1].depth != want) return false;
  for (int k = last + 1; k < i; ++k) {
    const ProofLine& lk = lines[k - 1];
    if (lk.depth < want - 1) return false;
    if (is_assumption(lk) && lk.depth <= want - 1) return false;
  }
  return true;
}

} // namespace detail

// Validates every line of p (rule shapes, citations, scoping) without the
// completed-proof conditions; the checker proper adds those.
inline bool check_proof_lines(const Proof& p, std::span<const Formula> theory, DeductionMode mode,
                              std::string* diagnostic = nullptr) {
  auto fail = [&](int line, const std::string& why) {
    if (diagnostic) {
      *diagnostic = "line " + std::to_string(line) + ": " + why;
    }
    return false;
  };
  const auto& L = p.lines;
  if (L.empty()) return fail(0, "empty proof");

  for (int i = 1; i <= static_cast<int>(L.size()); ++i) {
    const ProofLine& ln = L[i - 1];
    const int prev_depth = i == 1 ? 0 : L[i - 2].depth;
    if (ln.depth < 0) return fail(i, "negative depth");

    for (int r : ln.refs)
      if (r < 1 || r >= i) return fail(i, "reference outside the preceding lines");

    auto acc = [&](int j) { return detail::line_accessible(L, j, i); };
    auto cited = [&](int j) -> const Formula& { return L[j - 1].formula; };
    auto need_refs = [&](std::size_t n) { return ln.refs.size() == n; };

    switch (ln.just) {
      case Justification::Assumption: {
        if (ln.depth < 1) return fail(i, "assumption must open a subproof");
        if (ln.depth > prev_depth + 1) return fail(i, "assumption depth jumps");
        if (!need_refs(0)) return fail(i, "assumption cites no lines");
        break;
      }
      default: {
        if (i == 1 && ln.depth != 0) return fail(i, "proof must start at depth 0");
        if (i > 1 && ln.depth > prev_depth) return fail(i, "only an assumption may deepen");
        break;
      }
    }

    switch (ln.just) {
      case Justification::Assumption:
        break;
      case Justification::Premise: {
        if (ln.depth != 0) return fail(i, "premise inside a subproof");
        bool member = false;
        for (const Formula& t : theory) member = member || t == ln.formula;
        if (!member) return fail(i, "premise is not a theory member");
        if (!need_refs(0)) return fail(i, "premise cites no lines");
        break;
      }
      case Justification::Reiteration: {
        if (!need_refs(1) || !acc(ln.refs[0])) return fail(i, "bad reiteration citation");
        if (cited(ln.refs[0]) != ln.formula) return fail(i, "reiteration changes the formula");
        break;
      }
      case Justification::AndIntro: {
        if (!need_refs(2) || !acc(ln.refs[0]) || !acc(ln.refs[1]))
          return fail(i, "bad conjunction citations");
        if (!ln.formula.is_binary_op(Connective::And)) return fail(i, "conclusion is not a conjunction");
        if (ln.formula.lhs() != cited(ln.refs[0]) || ln.formula.rhs() != cited(ln.refs[1]))
          return fail(i, "conjuncts do not match the citations");
        break;
      }
      case Justification::AndElimLeft:
      case Justification::AndElimRight: {
        if (!need_refs(1) || !acc(ln.refs[0])) return fail(i, "bad conjunction citation");
        const Formula& c = cited(ln.refs[0]);
        if (!c.is_binary_op(Connective::And)) return fail(i, "cited line is not a conjunction");
        const Formula want = ln.just == Justification::AndElimLeft ? c.lhs() : c.rhs();
        if (ln.formula != want) return fail(i, "wrong conjunct");
        break;
      }
      case Justification::OrIntroLeft:
      case Justification::OrIntroRight: {
        if (!need_refs(1) || !acc(ln.refs[0])) return fail(i, "bad disjunct citation");
        if (!ln.formula.is_binary_op(Connective::Or)) return fail(i, "conclusion is not a disjunction");
        const Formula arm =
            ln.just == Justification::OrIntroLeft ? ln.formula.lhs() : ln.formula.rhs();
        if (arm != cited(ln.refs[0])) return fail(i, "cited disjunct does not appear");
        break;
      }
      case Justification::OrElim: {
        if (!need_refs(5) || !acc(ln.refs[0])) return fail(i, "bad disjunction citation");
        const Formula& d = cited(ln.refs[0]);
        if (!d.is_binary_op(Connective::Or)) return fail(i, "cited line is not a disjunction");
        int f1 = ln.refs[1], l1 = ln.refs[2], f2 = ln.refs[3], l2 = ln.refs[4];
        if (!detail::subproof_citable(L, f1, l1, i, ln.depth + 1) ||
            !detail::subproof_citable(L, f2, l2, i, ln.depth + 1))
          return fail(i, "case subproofs are not citable here");
        if (L[f1 - 1].formula != d.lhs() || L[f2 - 1].formula != d.rhs())
          return fail(i, "case hypotheses do not match the disjuncts");
        if (L[l1 - 1].formula != ln.formula || L[l2 - 1].formula != ln.formula)
          return fail(i, "case conclusions differ from the conclusion");
        break;
      }
      case Justification::ImpliesIntro: {
        if (!need_refs(2)) return fail(i, "conditional introduction cites a subproof");
        int f = ln.refs[0], l = ln.refs[1];
        if (!detail::subproof_citable(L, f, l, i, ln.depth + 1))
          return fail(i, "subproof is not citable here");
        if (!ln.formula.is_binary_op(Connective::Implies))
          return fail(i, "conclusion is not a conditional");
        if (ln.formula.lhs() != L[f - 1].formula || ln.formula.rhs() != L[l - 1].formula)
          return fail(i, "conditional does not match the subproof");
        break;
      }
      case Justification::ImpliesElim: {
        if (!need_refs(2) || !acc(ln.refs[0]) || !acc(ln.refs[1]))
          return fail(i, "bad modus ponens citations");
        const Formula& imp = cited(ln.refs[0]);
        if (!imp.is_binary_op(Connective::Implies)) return fail(i, "cited line is not a conditional");
        if (imp.lhs() != cited(ln.refs[1])) return fail(i, "antecedent mismatch");
        if (imp.rhs() != ln.formula) return fail(i, "consequent mismatch");
        break;
      }
      case Justification::IffIntro: {
        if (!need_refs(4)) return fail(i, "biconditional introduction cites two subproofs");
        int f1 = ln.refs[0], l1 = ln.refs[1], f2 = ln.refs[2], l2 = ln.refs[3];
        if (!detail::subproof_citable(L, f1, l1, i, ln.depth + 1) ||
            !detail::subproof_citable(L, f2, l2, i, ln.depth + 1))
          return fail(i, "subproofs are not citable here");
        if (!ln.formula.is_binary_op(Connective::Iff))
          return fail(i, "conclusion is not a biconditional");
        if (ln.formula.lhs() != L[f1 - 1].formula || ln.formula.rhs() != L[l1 - 1].formula ||
            ln.formula.lhs() != L[l2 - 1].formula || ln.formula.rhs() != L[f2 - 1].formula)
          return fail(i, "biconditional does not match the subproofs");
        break;
      }
      case Justification::IffElimLeft:
      case Justification::IffElimRight: {
        if (!need_refs(2) || !acc(ln.refs[0]) || !acc(ln.refs[1]))
          return fail(i, "bad biconditional citations");
        const Formula& iff = cited(ln.refs[0]);
        if (!iff.is_binary_op(Connective::Iff)) return fail(i, "cited line is not a biconditional");
        const Formula from = ln.just == Justification::IffElimLeft ? iff.lhs() : iff.rhs();
        const Formula to = ln.just == Justification::IffElimLeft ? iff.rhs() : iff.lhs();
        if (cited(ln.refs[1]) != from) return fail(i, "operand mismatch");
        if (ln.formula != to) return fail(i, "conclusion mismatch");
        break;
      }
      case Justification::NotIntro: {
        if (!need_refs(2)) return fail(i, "negation introduction cites a subproof");
        int f = ln.refs[0], l = ln.refs[1];
        if (!detail::subproof_citable(L, f, l, i, ln.depth + 1))
          return fail(i, "subproof is not citable here");
        if (!L[l - 1].formula.is_falsum()) return fail(i, "subproof does not end in #");
        if (!ln.formula.is_negation() || ln.formula.child() != L[f - 1].formula)
          return fail(i, "conclusion does not negate the hypothesis");
        break;
      }
      case Justification::NotElim: {
        if (!need_refs(2) || !acc(ln.refs[0]) || !acc(ln.refs[1]))
          return fail(i, "bad contradiction citations");
        const Formula& neg = cited(ln.refs[1]);
        if (!neg.is_negation() || neg.child() != cited(ln.refs[0]))
          return fail(i, "cited lines are not a contradictory pair");
        if (!ln.formula.is_falsum()) return fail(i, "contradiction must conclude #");
        break;
      }
      case Justification::FalsumElim: {
        if (!need_refs(1) || !acc(ln.refs[0])) return fail(i, "bad falsum citation");
        if (!cited(ln.refs[0]).is_falsum()) return fail(i, "cited line is not #");
        break;
      }
      case Justification::DoubleNegElim: {
        if (mode != DeductionMode::Classical)
          return fail(i, "double negation elimination needs classical mode");
        if (!need_refs(1) || !acc(ln.refs[0])) return fail(i, "bad double negation citation");
        const Formula& dn = cited(ln.refs[0]);
        if (!dn.is_negation() || !dn.child().is_negation())
          return fail(i, "cited line is not a double negation");
        if (dn.child().child() != ln.formula) return fail(i, "conclusion mismatch");
        break;
      }
    }
  }

  return true;
}

// Full check: well-formed lines plus the completed-proof conditions.
inline bool check_proof(const Proof& p, std::span<const Formula> theory, const Formula& goal,
                        DeductionMode mode, std::string* diagnostic = nullptr) {
  if (!check_proof_lines(p, theory, mode, diagnostic)) return false;
  auto fail = [&](const std::string& why) {
    if (diagnostic) *diagnostic = "line " + std::to_string(p.lines.size()) + ": " + why;
    return false;
  };
  if (p.lines.back().depth != 0) return fail("proof ends inside a subproof");
  if (p.lines.back().formula != goal) return fail("last line is not the goal");
  return true;
}

inline std::string justification_text(const ProofLine& ln) {
  auto lines2 = [&](int a, int b) {
    return std::to_string(ln.refs[a]) + "," + std::to_string(ln.refs[b]);
  };
  auto block = [&](int a, int b) {
    return std::to_string(ln.refs[a]) + "-" + std::to_string(ln.refs[b]);
  };
  switch (ln.just) {
    case Justification::Premise: return "Premise";
    case Justification::Assumption: return "Assumption";
    case Justification::Reiteration: return "Reit " + std::to_string(ln.refs[0]);
    case Justification::AndIntro: return "&I " + lines2(0, 1);
    case Justification::AndElimLeft: return "&E-L " + std::to_string(ln.refs[0]);
    case Justification::AndElimRight: return "&E-R " + std::to_string(ln.refs[0]);
    case Justification::OrIntroLeft: return "|I-L " + std::to_string(ln.refs[0]);
    case Justification::OrIntroRight: return "|I-R " + std::to_string(ln.refs[0]);
    case Justification::OrElim:
      return "|E " + std::to_string(ln.refs[0]) + ", " + block(1, 2) + ", " + block(3, 4);
    case Justification::ImpliesIntro: return "->I " + block(0, 1);
    case Justification::ImpliesElim: return "->E " + lines2(0, 1);
    case Justification::IffIntro: return "<->I " + block(0, 1) + ", " + block(2, 3);
    case Justification::IffElimLeft: return "<->E-L " + lines2(0, 1);
    case Justification::IffElimRight: return "<->E-R " + lines2(0, 1);
    case Justification::NotIntro: return "~I " + block(0, 1);
    case Justification::NotElim: return "~E " + lines2(0, 1);
    case Justification::FalsumElim: return "#E " + std::to_string(ln.refs[0]);
    case Justification::DoubleNegElim: return "DNE " + std::to_string(ln.refs[0]);
  }
  return "?";
}

// Plain-text Fitch layout: numbered lines, one bar per open scope.
inline std::string render_fitch(const Proof& p) {
  std::size_t num_width = std::to_string(p.lines.size()).size();
  std::vector<std::string> bodies;
  std::size_t body_width = 0;
  for (const ProofLine& ln : p.lines) {
    std::string body;
    for (int d = 0; d <= ln.depth; ++d) body += "| ";
    body += render_formula(ln.formula);
    body_width = std::max(body_width, body.size());
    bodies.push_back(std::move(body));
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    std::string num = std::to_string(i + 1);
    os << std::string(num_width - num.size(), ' ') << num << ' ' << bodies[i]
       << std::string(body_width - bodies[i].size() + 3, ' ')
       << justification_text(p.lines[i]) << "\n";
  }
  return os.str();
}

} // namespace prooflab
