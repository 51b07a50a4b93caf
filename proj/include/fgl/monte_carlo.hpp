#ifndef FGL_MONTE_CARLO_HPP
#define FGL_MONTE_CARLO_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "fgl/gen_spec.hpp"

namespace fgl {

struct EstimateResult {
  GenSpec spec;
  std::uint64_t trials = 0;
  std::uint64_t cycle_count = 0;
  double estimate = 0.0;
  double ci_low = 0.0;   // 95% Wilson unless another z is requested
  double ci_high = 0.0;
  std::uint64_t master_seed = 0;
};

// Wilson score interval clamped to [0, 1]. Well behaved at 0 and 1, which the
// p = 0 and p = 1 specs hit exactly.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                          double z = 1.959963984540054);

// Runs `trials` independent generations and counts cycles. Trial i draws from
// a stream derived from (master_seed, trial index), never from a shared
// generator, so the count is identical for every worker count and schedule.
EstimateResult estimate_cycle_probability(const GenSpec& spec, std::uint64_t trials,
                                          std::uint64_t master_seed, int workers = 1);

// Reference implementation: one thread, one plain loop. Kept for tests and
// the benchmark; must agree bit-for-bit with the parallel version.
EstimateResult estimate_cycle_probability_serial(const GenSpec& spec, std::uint64_t trials,
                                                 std::uint64_t master_seed);

// One estimate per spec; the spec's position is mixed into the substream
// derivation, so results do not bleed into each other.
std::vector<EstimateResult> sweep(const std::vector<GenSpec>& specs, std::uint64_t trials,
                                  std::uint64_t master_seed, int workers = 1);

}  // namespace fgl

#endif
