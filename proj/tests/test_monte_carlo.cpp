#include "fgl/monte_carlo.hpp"

#include <cmath>

#include "doctest.h"
#include "fgl/errors.hpp"
#include "fgl/exact_oracle.hpp"
#include "fgl/gen_spec.hpp"

using fgl::EstimateResult;
using fgl::GenSpec;
using fgl::Rational;

TEST_CASE("wilson interval against independently evaluated values") {
  // z = 1.96 evaluated by hand: (0,100) -> [0, 0.0369948]; (50,100) is
  // symmetric about 1/2 with width 0.1923406; (100,100) mirrors (0,100).
  auto [lo0, hi0] = fgl::wilson_interval(0, 100, 1.96);
  CHECK(lo0 == 0.0);
  CHECK(std::abs(hi0 - 0.0369948) < 1e-6);

  auto [lo50, hi50] = fgl::wilson_interval(50, 100, 1.96);
  CHECK(std::abs((lo50 + hi50) / 2 - 0.5) < 1e-12);
  CHECK(std::abs((hi50 - lo50) - 0.1923406) < 1e-6);

  auto [lo100, hi100] = fgl::wilson_interval(100, 100, 1.96);
  CHECK(hi100 == 1.0);
  CHECK(std::abs(lo100 - (1.0 - 0.0369948)) < 1e-6);
}

TEST_CASE("wilson interval stays ordered and clamped") {
  for (std::uint64_t trials : {1ULL, 7ULL, 100ULL, 12345ULL}) {
    for (std::uint64_t s = 0; s <= trials; s += 1 + trials / 7) {
      auto [lo, hi] = fgl::wilson_interval(s, trials);
      double phat = static_cast<double>(s) / static_cast<double>(trials);
      CHECK(0.0 <= lo);
      CHECK(lo <= phat + 1e-15);
      CHECK(phat <= hi + 1e-15);
      CHECK(hi <= 1.0);
    }
  }
  CHECK_THROWS_AS(fgl::wilson_interval(0, 0), fgl::ValidationError);
  CHECK_THROWS_AS(fgl::wilson_interval(5, 4), fgl::ValidationError);
  CHECK_THROWS_AS(fgl::wilson_interval(1, 4, 0.0), fgl::ValidationError);
}

TEST_CASE("degenerate specs estimate exactly") {
  EstimateResult zero =
      fgl::estimate_cycle_probability(fgl::make_spec_uniform(8, Rational(0)), 1000, 5);
  CHECK(zero.cycle_count == 0);
  CHECK(zero.estimate == 0.0);
  CHECK(zero.ci_low == 0.0);

  EstimateResult one =
      fgl::estimate_cycle_probability(fgl::make_spec_uniform(8, Rational(1)), 1000, 5);
  CHECK(one.cycle_count == 1000);
  CHECK(one.estimate == 1.0);
  CHECK(one.ci_high == 1.0);
}

TEST_CASE("identical inputs give identical counts for any worker count") {
  GenSpec spec = fgl::make_spec_uniform(20, Rational(2, 5));
  EstimateResult serial = fgl::estimate_cycle_probability_serial(spec, 20000, 777);
  for (int workers : {1, 2, 8}) {
    EstimateResult parallel = fgl::estimate_cycle_probability(spec, 20000, 777, workers);
    CHECK(parallel.cycle_count == serial.cycle_count);
    CHECK(parallel.estimate == serial.estimate);
    CHECK(parallel.ci_low == serial.ci_low);
    CHECK(parallel.ci_high == serial.ci_high);
  }
  EstimateResult other_seed = fgl::estimate_cycle_probability(spec, 20000, 778);
  CHECK(other_seed.cycle_count != serial.cycle_count);
}

TEST_CASE("estimates agree with the exact oracle") {
  struct Case {
    GenSpec spec;
    Rational exact;
  };
  std::vector<Case> cases;
  for (const GenSpec& spec :
       {fgl::make_spec_uniform(4, Rational(1, 2)),
        fgl::make_spec_per_vertex({Rational(1, 6), Rational(1, 2), Rational(5, 6)}),
        fgl::make_spec_weighted(3, Rational(2, 3),
                                {Rational(1, 2), Rational(1, 3), Rational(1, 6)})}) {
    cases.push_back({spec, fgl::exact_cycle_probability(spec).cycle_probability});
  }
  const std::uint64_t trials = 40000;
  for (const Case& c : cases) {
    EstimateResult r = fgl::estimate_cycle_probability(c.spec, trials, 4242, 2);
    double exact = c.exact.to_double();
    double se = std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials));
    CHECK(std::abs(r.estimate - exact) < 5 * se);
  }
}

TEST_CASE("wilson interval covers the exact value at the advertised rate") {
  // 4 specs x 50 seeds at 10^4 trials; nominal coverage 95%, require >= 90%.
  std::vector<GenSpec> specs = {
      fgl::make_spec_uniform(3, Rational(1, 2)),
      fgl::make_spec_uniform(5, Rational(1, 5)),
      fgl::make_spec_per_vertex({Rational(1, 3), Rational(3, 4), Rational(1, 6), Rational(1, 2)}),
      fgl::make_spec_weighted(4, Rational(3, 4),
                              {Rational(2, 5), Rational(1, 5), Rational(1, 5), Rational(1, 5)})};
  int covered = 0, runs = 0;
  for (const GenSpec& spec : specs) {
    double exact = fgl::exact_cycle_probability(spec).cycle_probability.to_double();
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      EstimateResult r = fgl::estimate_cycle_probability(spec, 10000, seed);
      ++runs;
      covered += (r.ci_low <= exact && exact <= r.ci_high) ? 1 : 0;
    }
  }
  CHECK(runs == 200);
  CHECK(covered >= 180);
}

TEST_CASE("sweep") {
  std::vector<GenSpec> specs = {fgl::make_spec_uniform(6, Rational(0)),
                                fgl::make_spec_uniform(6, Rational(1))};
  std::vector<EstimateResult> results = fgl::sweep(specs, 500, 11);
  REQUIRE(results.size() == 2);
  CHECK(results[0].estimate == 0.0);
  CHECK(results[1].estimate == 1.0);

  // A one-spec sweep is the plain estimator.
  GenSpec spec = fgl::make_spec_uniform(7, Rational(1, 3));
  EstimateResult direct = fgl::estimate_cycle_probability(spec, 5000, 321);
  std::vector<EstimateResult> via_sweep = fgl::sweep({spec}, 5000, 321);
  CHECK(via_sweep[0].cycle_count == direct.cycle_count);

  // Spec position feeds the substream, so sweep entries differ from each
  // other even with identical specs.
  std::vector<EstimateResult> twice = fgl::sweep({spec, spec}, 5000, 321);
  CHECK(twice[0].cycle_count != twice[1].cycle_count);

  CHECK_THROWS_AS(fgl::sweep({}, 100, 1), fgl::ValidationError);
  CHECK_THROWS_AS(fgl::estimate_cycle_probability(spec, 0, 1), fgl::ValidationError);
}
