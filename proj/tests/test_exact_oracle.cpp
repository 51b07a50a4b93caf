#include "fgl/exact_oracle.hpp"

#include <vector>

#include "doctest.h"
#include "fgl/errors.hpp"
#include "fgl/gen_spec.hpp"
#include "fgl/rng.hpp"

using fgl::GenSpec;
using fgl::OutcomeWeight;
using fgl::Rational;

namespace {

std::vector<Rational> uniform_pi(int n) {
  return std::vector<Rational>(static_cast<std::size_t>(n),
                               Rational(1, static_cast<std::uint64_t>(n)));
}

Rational binomial(int n, int k) {
  Rational c(1);
  for (int i = 1; i <= k; ++i) {
    c *= Rational(static_cast<std::uint64_t>(n - k + i), static_cast<std::uint64_t>(i));
  }
  return c;
}

GenSpec random_per_vertex_spec(fgl::SplitMix64& rng, int max_n, std::uint64_t max_den) {
  int n = 1 + static_cast<int>(rng.next() % max_n);
  std::vector<Rational> p;
  for (int v = 0; v < n; ++v) {
    std::uint64_t den = 1 + rng.next() % max_den;
    p.emplace_back(rng.next() % (den + 1), den);
  }
  return fgl::make_spec_per_vertex(p);
}

GenSpec random_weighted_spec(fgl::SplitMix64& rng, int max_n, std::uint64_t max_den) {
  int n = 1 + static_cast<int>(rng.next() % max_n);
  std::uint64_t den = 1 + rng.next() % max_den;
  Rational p(rng.next() % (den + 1), den);
  // Random nonnegative numerators normalized by their exact sum.
  std::vector<std::uint64_t> raw(static_cast<std::size_t>(n));
  std::uint64_t total = 0;
  while (total == 0) {
    total = 0;
    for (auto& r : raw) total += (r = rng.next() % 7);
  }
  std::vector<Rational> pi;
  for (std::uint64_t r : raw) pi.emplace_back(r, total);
  return fgl::make_spec_weighted(n, p, pi);
}

}  // namespace

TEST_CASE("outcome stream for one vertex") {
  GenSpec spec = fgl::make_spec_uniform(1, Rational(1, 2));
  fgl::OutcomeEnumerator stream(spec);
  CHECK(stream.total() == 2);
  OutcomeWeight o;
  REQUIRE(stream.next(o));
  CHECK(o.graph.out == std::vector<std::int32_t>{fgl::kNoEdge});
  CHECK(o.weight == Rational(1, 2));
  REQUIRE(stream.next(o));
  CHECK(o.graph.out == std::vector<std::int32_t>{0});  // self-loop
  CHECK(o.weight == Rational(1, 2));
  CHECK_FALSE(stream.next(o));
}

TEST_CASE("outcome stream for two vertices, hand-expanded weights") {
  GenSpec spec = fgl::make_spec_uniform(2, Rational(1, 2));
  fgl::OutcomeEnumerator stream(spec);
  CHECK(stream.total() == 9);
  // Per vertex: no edge 1/2, each target 1/4; lexicographic digit order.
  const std::vector<Rational> expected = {
      Rational(1, 4),  Rational(1, 8),  Rational(1, 8),
      Rational(1, 8),  Rational(1, 16), Rational(1, 16),
      Rational(1, 8),  Rational(1, 16), Rational(1, 16)};
  OutcomeWeight o;
  Rational sum;
  for (const Rational& w : expected) {
    REQUIRE(stream.next(o));
    CHECK(o.weight == w);
    sum += o.weight;
  }
  CHECK_FALSE(stream.next(o));
  CHECK(sum == Rational(1));
}

TEST_CASE("p = 0 concentrates all weight on the empty graph") {
  GenSpec spec = fgl::make_spec_uniform(2, Rational(0));
  fgl::OutcomeEnumerator stream(spec);
  OutcomeWeight o;
  int outcomes = 0;
  Rational empty_weight;
  while (stream.next(o)) {
    ++outcomes;
    if (fgl::good_count(o.graph) == 0) {
      empty_weight = o.weight;
    } else {
      CHECK(o.weight.is_zero());
    }
  }
  CHECK(outcomes == 9);  // zero-weight outcomes still enumerated
  CHECK(empty_weight == Rational(1));
}

TEST_CASE("weights sum to one for arbitrary specs") {
  fgl::SplitMix64 rng(41);
  for (int i = 0; i < 25; ++i) {
    GenSpec spec = i % 2 ? random_per_vertex_spec(rng, 4, 6) : random_weighted_spec(rng, 4, 6);
    fgl::OutcomeEnumerator stream(spec);
    OutcomeWeight o;
    Rational sum;
    while (stream.next(o)) sum += o.weight;
    CHECK(sum == Rational(1));
  }
}

TEST_CASE("index sub-ranges partition the stream") {
  GenSpec spec = fgl::make_spec_uniform(3, Rational(1, 3));
  fgl::OutcomeEnumerator full(spec);
  fgl::OutcomeEnumerator left(spec, 0, 30), right(spec, 30, 64);
  OutcomeWeight a, b;
  while (left.next(b)) {
    REQUIRE(full.next(a));
    CHECK(a.graph == b.graph);
    CHECK(a.weight == b.weight);
  }
  while (right.next(b)) {
    REQUIRE(full.next(a));
    CHECK(a.graph == b.graph);
    CHECK(a.weight == b.weight);
  }
  CHECK_FALSE(full.next(a));
}

TEST_CASE("uniform spec probability equals p") {
  fgl::ExactReport report =
      fgl::exact_cycle_probability(fgl::make_spec_uniform(3, Rational(1, 2)));
  CHECK(report.total_outcomes == 64);
  CHECK(report.cycle_probability == Rational(1, 2));
  REQUIRE(report.claimed_value.has_value());
  CHECK(*report.claimed_value == Rational(1, 2));
  CHECK(report.matches_claim == true);
}

TEST_CASE("uniform sweep over small sizes") {
  for (int n = 1; n <= 5; ++n) {
    for (int j = 0; j <= n; ++j) {
      Rational p(static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(n));
      fgl::ExactReport report = fgl::exact_cycle_probability(fgl::make_spec_uniform(n, p));
      CHECK(report.cycle_probability == p);
    }
  }
}

TEST_CASE("per-vertex spec probability equals the mean") {
  fgl::ExactReport report = fgl::exact_cycle_probability(
      fgl::make_spec_per_vertex({Rational(1, 3), Rational(2, 3)}));
  CHECK(report.cycle_probability == Rational(1, 2));
  CHECK(*report.claimed_value == Rational(1, 2));
  CHECK(report.matches_claim == true);

  fgl::SplitMix64 rng(43);
  for (int i = 0; i < 20; ++i) {
    GenSpec spec = random_per_vertex_spec(rng, 4, 6);
    fgl::ExactReport r = fgl::exact_cycle_probability(spec);
    CHECK(r.cycle_probability == spec.mean_good_prob());
  }
}

TEST_CASE("weighted spec probability equals p") {
  fgl::ExactReport report = fgl::exact_cycle_probability(
      fgl::make_spec_weighted(2, Rational(1, 2), {Rational(3, 4), Rational(1, 4)}));
  CHECK(report.cycle_probability == Rational(1, 2));
  CHECK(*report.claimed_value == Rational(1, 2));
  CHECK(report.matches_claim == true);

  fgl::SplitMix64 rng(47);
  for (int i = 0; i < 20; ++i) {
    GenSpec spec = random_weighted_spec(rng, 4, 6);
    fgl::ExactReport r = fgl::exact_cycle_probability(spec);
    CHECK(r.cycle_probability == spec.good_prob.front());
  }
}

TEST_CASE("no claim when both p_v and pi vary") {
  GenSpec spec{2, {Rational(1, 3), Rational(2, 3)}, {Rational(3, 4), Rational(1, 4)}};
  fgl::validate_spec(spec);
  fgl::ExactReport report = fgl::exact_cycle_probability(spec);
  CHECK_FALSE(report.claimed_value.has_value());
  CHECK_FALSE(report.matches_claim.has_value());
  // Value frozen from an independent exact enumeration.
  CHECK(report.cycle_probability == Rational(5, 12));
}

TEST_CASE("parallel result is identical for any worker count") {
  fgl::SplitMix64 rng(53);
  for (int i = 0; i < 6; ++i) {
    GenSpec spec = i % 2 ? random_per_vertex_spec(rng, 5, 6) : random_weighted_spec(rng, 5, 6);
    fgl::ExactReport serial = fgl::exact_cycle_probability_serial(spec);
    for (int workers : {1, 2, 3, 8}) {
      fgl::ExactReport parallel = fgl::exact_cycle_probability(spec, workers);
      CHECK(parallel.cycle_probability == serial.cycle_probability);
    }
  }
}

TEST_CASE("conditional probability is k over n under a uniform target") {
  CHECK(fgl::exact_conditional_cycle_probability(2, 1, uniform_pi(2)) == Rational(1, 2));
  CHECK(fgl::exact_conditional_cycle_probability(3, 2, uniform_pi(3)) == Rational(2, 3));
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(fgl::exact_conditional_cycle_probability(n, k, uniform_pi(n)) ==
            Rational(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(n)));
    }
  }
  CHECK_THROWS_AS(fgl::exact_conditional_cycle_probability(3, 4, uniform_pi(3)),
                  fgl::ValidationError);
  CHECK_THROWS_AS(fgl::exact_conditional_cycle_probability(3, -1, uniform_pi(3)),
                  fgl::ValidationError);
}

TEST_CASE("conditional agrees with a pinned-good-probability spec") {
  // Conditioning on {1..k} good is the same process with p_v = 1 on those
  // vertices and 0 elsewhere; two independent routes, one value.
  std::vector<Rational> pi = {Rational(1, 6), Rational(1, 2), Rational(1, 3)};
  for (int k = 0; k <= 3; ++k) {
    std::vector<Rational> good(3, Rational(0));
    for (int v = 0; v < k; ++v) good[v] = Rational(1);
    GenSpec spec{3, good, pi};
    fgl::validate_spec(spec);
    CHECK(fgl::exact_conditional_cycle_probability(3, k, pi) ==
          fgl::exact_cycle_probability(spec).cycle_probability);
  }
}

TEST_CASE("decomposition over the number of good vertices recovers p") {
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t j = 0; j <= static_cast<std::uint64_t>(n); ++j) {
      Rational p(j, static_cast<std::uint64_t>(n));
      Rational total;
      for (int k = 0; k <= n; ++k) {
        Rational weight = binomial(n, k);
        for (int i = 0; i < k; ++i) weight *= p;
        for (int i = k; i < n; ++i) weight *= Rational(1) - p;
        total += weight * fgl::exact_conditional_cycle_probability(n, k, uniform_pi(n));
      }
      CHECK(total == p);
    }
  }
}

TEST_CASE("retention probability sums the target distribution") {
  GenSpec uniform4 = fgl::make_spec_uniform(4, Rational(1, 2));
  CHECK(fgl::subgraph_retention_probability(uniform4, {0, 2}) == Rational(1, 2));
  CHECK(fgl::subgraph_retention_probability(uniform4, {0, 1, 2, 3}) == Rational(1));

  GenSpec weighted = fgl::make_spec_weighted(2, Rational(1, 2), {Rational(3, 4), Rational(1, 4)});
  CHECK(fgl::subgraph_retention_probability(weighted, {0}) == Rational(3, 4));

  CHECK_THROWS_AS(fgl::subgraph_retention_probability(uniform4, {}), fgl::ValidationError);
  CHECK_THROWS_AS(fgl::subgraph_retention_probability(uniform4, {4}), fgl::ValidationError);
  CHECK_THROWS_AS(fgl::subgraph_retention_probability(uniform4, {1, 1}), fgl::ValidationError);
}

TEST_CASE("size limit errors carry the outcome count") {
  GenSpec spec = fgl::make_spec_uniform(8, Rational(1, 2));
  CHECK_THROWS_WITH_AS(fgl::exact_cycle_probability(spec),
                       doctest::Contains("43046721"), fgl::SizeLimitError);
  // Raised soft limit admits n = 8; the hard cap still refuses n = 11.
  CHECK_NOTHROW(fgl::check_enum_limit(8, 10));
  CHECK_THROWS_AS(fgl::check_enum_limit(11, 99), fgl::SizeLimitError);
}
