#include "fgl/rng.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace fgl {

std::uint64_t uniform_below_u64(SplitMix64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
  if (bound == 1) return 0;
  const int bits = std::bit_width(bound - 1);
  const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  for (;;) {
    std::uint64_t v = rng.next() & mask;
    if (v < bound) return v;
  }
}

BigUint uniform_below(SplitMix64& rng, const BigUint& bound) {
  if (bound.is_zero()) throw std::invalid_argument("uniform_below: zero bound");
  if (bound.fits_u64()) return BigUint(uniform_below_u64(rng, bound.to_u64()));
  const std::size_t bits = bound.bit_length();
  const std::size_t words = (bits + 63) / 64;
  const std::size_t top_bits = bits - 64 * (words - 1);
  const std::uint64_t top_mask =
      top_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;
  std::vector<std::uint32_t> limbs(2 * words);
  for (;;) {
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = rng.next();
      if (w + 1 == words) word &= top_mask;
      limbs[2 * w] = static_cast<std::uint32_t>(word);
      limbs[2 * w + 1] = static_cast<std::uint32_t>(word >> 32);
    }
    BigUint candidate = BigUint::from_limbs(limbs);
    if (candidate < bound) return candidate;
  }
}

}  // namespace fgl
