#pragma once

// ── sampling.hpp ────────────────────────────────────────────────────────────
// Seeded sampling of theories and objective lists.
//
// Theories: draw a separation-class value g uniformly from [0, f(n,m) - j],
// then a uniform composition of g into j non-negative gaps (stars and bars,
// via a uniform (j-1)-subset of bar slots). Unsatisfiable theories are
// rejected and redrawn, so the returned list always has the requested size.
//
// Objectives: draw formula indices uniformly without replacement, keeping the
// draw order, then greedily drop any formula that is not jointly satisfiable
// with the ones retained so far (the first retained element anchors the
// filter).
//
// Both draws consume dedicated streams derived from the one user seed, so
// identical (params, spec) inputs give byte-identical results.
// ────────────────────────────────────────────────────────────────────────────

#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "prooflab/generation.hpp"
#include "prooflab/rng.hpp"
#include "prooflab/semantics.hpp"
#include "prooflab/theory.hpp"

namespace prooflab {

struct SampleSpec {
  int theory_size = 2;      // j
  int theory_count = 1;     // x
  int objective_count = 1;  // o
  std::uint64_t seed = 1;
  int max_attempts = 1000;  // per single draw

  bool operator==(const SampleSpec&) const = default;
};

inline void validate(const SampleSpec& s) {
  if (s.theory_size < 1) throw std::invalid_argument("theory_size must be >= 1");
  if (s.theory_count < 1) throw std::invalid_argument("theory_count must be >= 1");
  if (s.objective_count < 1) throw std::invalid_argument("objective_count must be >= 1");
  if (s.max_attempts < 1) throw std::invalid_argument("max_attempts must be >= 1");
}

struct SamplingReport {
  std::uint64_t theory_rejections = 0;   // unsatisfiable theories redrawn
  std::uint64_t objective_redraws = 0;   // without-replacement collisions
  std::uint64_t objectives_filtered = 0; // dropped by the consistency filter
};

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline constexpr std::uint64_t kTheoryStream = 1;
inline constexpr std::uint64_t kObjectiveStream = 2;

// Uniform composition of g into parts >= 0 non-negative gaps.
inline JRepresentation sample_composition(SplitMix64& rng, const BigInt& g, int parts) {
  JRepresentation k;
  if (parts == 0) return k;
  std::set<BigInt> bars = sample_combination(rng, g + parts - 1, parts - 1);
  BigInt prev = 0;
  for (const BigInt& b : bars) {
    k.gaps.push_back(b - prev - 1);
    prev = b;
  }
  k.gaps.push_back(g + parts - prev - 1);
  return k;
}
} // namespace detail

inline std::vector<Theory> sample_theories(const FormulaSpace& space, const SampleSpec& spec,
                                           SamplingReport* report = nullptr) {
  validate(spec);
  const BigInt& f = space.size();
  if (f < spec.theory_size)
    throw SamplingError("formula space smaller than the requested theory size");
  SplitMix64 rng(derive_stream_seed(spec.seed, detail::kTheoryStream));
  const int m = space.params().var_count;

  std::vector<Theory> theories;
  theories.reserve(spec.theory_count);
  for (int t = 0; t < spec.theory_count; ++t) {
    int attempts = 0;
    for (;;) {
      if (++attempts > spec.max_attempts) {
        std::string counts = report ? std::to_string(report->theory_rejections) : "?";
        throw SamplingError("theory draw " + std::to_string(t + 1) + " exhausted " +
                            std::to_string(spec.max_attempts) +
                            " attempts (unsatisfiable rejections so far: " + counts + ")");
      }
      BigInt g = uniform_below(rng, f - spec.theory_size + 1);
      JRepresentation k = detail::sample_composition(rng, g, spec.theory_size);
      Theory candidate{space.params(), indices_from_jrep(k), TheoryRole::base()};
      std::vector<Formula> mats = candidate.formulas(space);
      if (is_satisfiable(mats, m)) {
        theories.push_back(std::move(candidate));
        break;
      }
      if (report) ++report->theory_rejections;
    }
  }
  return theories;
}

inline std::vector<Formula> sample_objectives(const FormulaSpace& space, const SampleSpec& spec,
                                              SamplingReport* report = nullptr,
                                              std::vector<BigInt>* indices_out = nullptr) {
  validate(spec);
  const BigInt& f = space.size();
  if (f < spec.objective_count)
    throw SamplingError("formula space smaller than the requested objective count");
  SplitMix64 rng(derive_stream_seed(spec.seed, detail::kObjectiveStream));
  const int m = space.params().var_count;

  std::vector<BigInt> drawn;
  std::set<BigInt> seen;
  int attempts = 0;
  while (static_cast<int>(drawn.size()) < spec.objective_count) {
    if (++attempts > spec.max_attempts * spec.objective_count)
      throw SamplingError("objective sampling exhausted its redraw budget");
    BigInt idx = uniform_below(rng, f) + 1;
    if (!seen.insert(idx).second) {
      if (report) ++report->objective_redraws;
      continue;
    }
    drawn.push_back(idx);
  }

  std::vector<Formula> retained;
  std::vector<BigInt> retained_indices;
  for (const BigInt& idx : drawn) {
    Formula candidate = space.at(idx);
    std::vector<Formula> with = retained;
    with.push_back(candidate);
    if (is_satisfiable(with, m)) {
      retained.push_back(candidate);
      retained_indices.push_back(idx);
    } else if (report) {
      ++report->objectives_filtered;
    }
  }
  if (retained.empty())
    throw SamplingError("objective consistency filter emptied the list");
  if (indices_out) *indices_out = retained_indices;
  return retained;
}

inline void write_sample_manifest(std::ostream& os, const FormulaSpace& space,
                                  const SampleSpec& spec, std::span<const Theory> theories,
                                  std::span<const BigInt> objective_indices,
                                  const SamplingReport& report) {
  os << "sample manifest\n";
  os << "params: " << params_to_text(space.params()) << "\n";
  os << "space-size: " << space.size() << "\n";
  os << "seed: " << spec.seed << "\n";
  os << "j: " << spec.theory_size << " x: " << spec.theory_count
     << " o: " << spec.objective_count << "\n";
  os << "theory-rejections: " << report.theory_rejections << "\n";
  os << "objective-redraws: " << report.objective_redraws << "\n";
  os << "objectives-filtered: " << report.objectives_filtered << "\n";
  for (std::size_t i = 0; i < theories.size(); ++i) {
    JRepresentation k = theories[i].jrep();
    os << "theory " << i << " class: " << separation_degree(k) << " j-rep: ";
    for (std::size_t g = 0; g < k.gaps.size(); ++g) os << (g ? "," : "") << k.gaps[g];
    os << "\n";
  }
  for (std::size_t i = 0; i < objective_indices.size(); ++i)
    os << "objective " << i << " index: " << objective_indices[i] << "\n";
}

} // namespace prooflab
