#pragma once

// Deterministic sampling.  splitmix64 (Steele, Lea & Flood's mixer, as used by
// java.util.SplittableRandom): tiny state, full 64-bit output, and trivially
// reproducible across platforms — every number the verifier draws must be a
// pure function of (seed, suite, sample index).

#include <cstdint>

namespace connkit {

struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1): top 53 bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, m).
  std::uint64_t below(std::uint64_t m) { return next() % m; }
};

// Independent stream for a (seed, tag) pair.  Streams for different tags are
// decorrelated by the golden-ratio multiply plus one mixer step; the caller
// fixes the tag layout (the verifier uses tag = suite_ordinal·2^20 + sample).
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t tag) {
  SplitMix64 g{seed ^ (0x9E3779B97F4A7C15ULL * (tag + 1))};
  g.next();
  return g;
}

}  // namespace connkit
