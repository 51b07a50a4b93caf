#ifndef FGL_GENERATE_HPP
#define FGL_GENERATE_HPP

#include <cstdint>
#include <vector>

#include "fgl/gen_spec.hpp"
#include "fgl/graph.hpp"
#include "fgl/rng.hpp"

namespace fgl {

// Draws graphs from a GenSpec by exact integer comparison: for each vertex
// the good coin is an integer draw below the probability's denominator, and
// the target is an integer draw below the common denominator of target_dist,
// located in the cumulative table. No floating point touches any sampling
// decision. Coin first, then target; a vertex that fails the coin consumes
// no target draw.
class Sampler {
 public:
  explicit Sampler(const GenSpec& spec);  // validates the spec

  int n() const { return n_; }
  void generate(SplitMix64& rng, FunctionalGraph& g) const;
  FunctionalGraph generate(SplitMix64& rng) const;

 private:
  int n_ = 0;
  bool small_ = false;  // all denominators fit in unsigned 64-bit

  std::vector<std::uint64_t> coin_num64_, coin_den64_;
  std::uint64_t target_den64_ = 0;
  std::vector<std::uint64_t> target_cum64_;

  std::vector<BigUint> coin_num_, coin_den_;
  BigUint target_den_;
  std::vector<BigUint> target_cum_;
};

// One-shot convenience; building a Sampler up front is cheaper in loops.
FunctionalGraph generate(const GenSpec& spec, SplitMix64& rng);

}  // namespace fgl

#endif
