#ifndef FGL_RNG_HPP
#define FGL_RNG_HPP

#include <cstdint>

#include "fgl/bigint.hpp"

namespace fgl {

// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Deterministic 64-bit stream (SplitMix64). Cheap to construct, so every
// trial gets its own instance.
struct SplitMix64 {
  std::uint64_t state = 0;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() { return mix64(state += 0x9E3779B97F4A7C15ULL); }
};

// Counter-based substream derivation: the seed of stream (lane, index) is a
// pure function of the inputs, so trials can run in any order on any number
// of workers and still consume identical randomness.
inline std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t lane,
                                        std::uint64_t index) {
  std::uint64_t x = mix64(master_seed ^ 0x6A09E667F3BCC909ULL);
  x = mix64(x ^ (0x9E3779B97F4A7C15ULL * (lane + 1)));
  x = mix64(x ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  return x;
}

inline SplitMix64 substream(std::uint64_t master_seed, std::uint64_t lane, std::uint64_t index) {
  return SplitMix64(derive_stream_seed(master_seed, lane, index));
}

// Uniform draw in [0, bound), bound >= 1, by masked rejection. Exact: every
// value has probability 1/bound. bound == 1 consumes no randomness.
std::uint64_t uniform_below_u64(SplitMix64& rng, std::uint64_t bound);
BigUint uniform_below(SplitMix64& rng, const BigUint& bound);

}  // namespace fgl

#endif
