#pragma once

// Deterministic random streams. The generator is SplitMix64 with the usual
// constants; it is fixed here (rather than delegating to the standard
// library's distributions) so that seeded runs produce identical output on
// every platform. Bounded draws use rejection, never modulo bias.

#include <cstdint>
#include <set>
#include <stdexcept>

#include "prooflab/numeric.hpp"

namespace prooflab {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Decorrelates the per-purpose streams derived from one user seed.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t tag) {
  SplitMix64 s(seed ^ (0x9e3779b97f4a7c15ull * (tag + 1)));
  return s.next();
}

// Uniform draw from [0, bound).
inline std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  const std::uint64_t limit = ~std::uint64_t{0} / bound * bound;
  for (;;) {
    std::uint64_t v = rng.next();
    if (v < limit) return v % bound;
  }
}

inline BigInt uniform_below(SplitMix64& rng, const BigInt& bound) {
  if (bound <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
  if (bound == 1) return 0;
  const unsigned bits = boost::multiprecision::msb(bound - 1) + 1;
  const unsigned words = (bits + 63) / 64;
  const unsigned top_bits = bits % 64 == 0 ? 64 : bits % 64;
  for (;;) {
    BigInt value = 0;
    for (unsigned w = 0; w < words; ++w) {
      std::uint64_t word = rng.next();
      if (w + 1 == words && top_bits < 64) word >>= (64 - top_bits);
      value |= BigInt(word) << (64 * w);
    }
    if (value < bound) return value;
  }
}

// Floyd's algorithm: k distinct values uniform over [1, n], returned sorted.
inline std::set<BigInt> sample_combination(SplitMix64& rng, const BigInt& n, int k) {
  if (k < 0 || n < k) throw std::invalid_argument("sample_combination: need 0 <= k <= n");
  std::set<BigInt> chosen;
  for (BigInt i = n - k + 1; i <= n; ++i) {
    BigInt r = uniform_below(rng, i) + 1;
    if (!chosen.insert(r).second) chosen.insert(i);
  }
  return chosen;
}

} // namespace prooflab
