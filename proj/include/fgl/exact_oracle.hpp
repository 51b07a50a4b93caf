#ifndef FGL_EXACT_ORACLE_HPP
#define FGL_EXACT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fgl/gen_spec.hpp"
#include "fgl/graph.hpp"
#include "fgl/rational.hpp"

namespace fgl {

// Enumeration covers (n+1)^n outcomes, so n is capped: soft limit overridable
// from the CLI, hard limit not.
inline constexpr int kDefaultEnumLimit = 7;
inline constexpr int kHardEnumLimit = 10;

// (n+1)^n; requires n <= kHardEnumLimit.
std::uint64_t outcome_count(int n);

// Throws SizeLimitError (message includes the outcome count) if n > limit.
void check_enum_limit(int n, int limit);

struct OutcomeWeight {
  FunctionalGraph graph;
  Rational weight;
};

struct ExactReport {
  GenSpec spec;
  std::uint64_t total_outcomes = 0;
  Rational cycle_probability;
  // Present when the spec has a uniform target distribution (claim: mean of
  // good_prob) or a constant good probability (claim: that probability).
  // Absent when both vary at once; nothing is claimed for that case.
  std::optional<Rational> claimed_value;
  std::optional<bool> matches_claim;
};

// Streams every assignment of {no edge, edge to w} per vertex exactly once,
// with its exact probability weight, in lexicographic mixed-radix order
// (vertex 0 most significant; digit 0 = no edge, digit w = edge to vertex
// w-1). An index sub-range [begin, end) can be enumerated in isolation; this
// is how parallel workers partition the space.
class OutcomeEnumerator {
 public:
  OutcomeEnumerator(const GenSpec& spec, int limit = kDefaultEnumLimit);
  OutcomeEnumerator(const GenSpec& spec, std::uint64_t begin, std::uint64_t end,
                    int limit = kDefaultEnumLimit);

  std::uint64_t total() const { return total_; }
  bool next(OutcomeWeight& out);

 private:
  int n_;
  std::uint64_t index_, end_, total_;
  std::vector<std::vector<Rational>> choice_weight_;  // [vertex][digit]
  std::vector<std::uint8_t> digit_;
  bool fresh_ = true;
};

// Sum of weights over all cyclic outcomes, reduced. Parallel version
// partitions the index range over `workers`; partial sums are exact, so the
// result is identical for every worker count.
ExactReport exact_cycle_probability(const GenSpec& spec, int workers = 1,
                                    int limit = kDefaultEnumLimit);
ExactReport exact_cycle_probability_serial(const GenSpec& spec, int limit = kDefaultEnumLimit);

// Probability of a cycle given that exactly the first k vertices are good,
// each of their targets drawn from pi. Uniform pi gives exactly k/n.
Rational exact_conditional_cycle_probability(int n, int k, const std::vector<Rational>& pi,
                                             int limit = kDefaultEnumLimit);

// Probability that a single target draw lands inside `subset` (0-based ids):
// the chance a good vertex keeps its out-edge within the subset.
Rational subgraph_retention_probability(const GenSpec& spec, const std::vector<int>& subset);

}  // namespace fgl

#endif
