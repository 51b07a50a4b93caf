#include "fgl/monte_carlo.hpp"

#include <cmath>
#include <tuple>

#include "fgl/errors.hpp"
#include "fgl/generate.hpp"
#include "fgl/graph.hpp"
#include "fgl/rng.hpp"

namespace fgl {

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                          double z) {
  if (trials == 0) throw ValidationError("wilson_interval: trials must be >= 1");
  if (successes > trials) throw ValidationError("wilson_interval: successes > trials");
  if (!(z > 0.0)) throw ValidationError("wilson_interval: z must be > 0");
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half =
      (z / denom) * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  // At the boundaries center -+ half cancels to exactly 0 (successes = 0) or
  // 1 (successes = trials); spell that out rather than lose an ulp to
  // rounding.
  const double low = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double high = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {low, high};
}

namespace {

std::uint64_t count_cyclic_trials(const Sampler& sampler, std::uint64_t trials,
                                  std::uint64_t master_seed, std::uint64_t spec_index,
                                  int workers) {
  std::uint64_t count = 0;
#pragma omp parallel num_threads(workers) reduction(+ : count)
  {
    FunctionalGraph g;
#pragma omp for schedule(static)
    for (long long t = 0; t < static_cast<long long>(trials); ++t) {
      SplitMix64 rng = substream(master_seed, spec_index, static_cast<std::uint64_t>(t));
      sampler.generate(rng, g);
      count += has_cycle(g) ? 1 : 0;
    }
  }
  return count;
}

EstimateResult make_result(const GenSpec& spec, std::uint64_t trials, std::uint64_t cycles,
                           std::uint64_t master_seed) {
  EstimateResult r;
  r.spec = spec;
  r.trials = trials;
  r.cycle_count = cycles;
  r.estimate = static_cast<double>(cycles) / static_cast<double>(trials);
  std::tie(r.ci_low, r.ci_high) = wilson_interval(cycles, trials);
  r.master_seed = master_seed;
  return r;
}

}  // namespace

EstimateResult estimate_cycle_probability(const GenSpec& spec, std::uint64_t trials,
                                          std::uint64_t master_seed, int workers) {
  if (trials == 0) throw ValidationError("estimate: trials must be >= 1");
  if (workers < 1) throw ValidationError("estimate: workers must be >= 1");
  Sampler sampler(spec);
  std::uint64_t cycles = count_cyclic_trials(sampler, trials, master_seed, 0, workers);
  return make_result(spec, trials, cycles, master_seed);
}

EstimateResult estimate_cycle_probability_serial(const GenSpec& spec, std::uint64_t trials,
                                                 std::uint64_t master_seed) {
  if (trials == 0) throw ValidationError("estimate: trials must be >= 1");
  Sampler sampler(spec);
  FunctionalGraph g;
  std::uint64_t cycles = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    SplitMix64 rng = substream(master_seed, 0, t);
    sampler.generate(rng, g);
    cycles += has_cycle(g) ? 1 : 0;
  }
  return make_result(spec, trials, cycles, master_seed);
}

std::vector<EstimateResult> sweep(const std::vector<GenSpec>& specs, std::uint64_t trials,
                                  std::uint64_t master_seed, int workers) {
  if (specs.empty()) throw ValidationError("sweep: empty spec list");
  if (trials == 0) throw ValidationError("sweep: trials must be >= 1");
  if (workers < 1) throw ValidationError("sweep: workers must be >= 1");
  std::vector<EstimateResult> results;
  results.reserve(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    Sampler sampler(specs[i]);
    std::uint64_t cycles = count_cyclic_trials(sampler, trials, master_seed, i, workers);
    results.push_back(make_result(specs[i], trials, cycles, master_seed));
  }
  return results;
}

}  // namespace fgl
