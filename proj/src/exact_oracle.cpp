#include "fgl/exact_oracle.hpp"

#include <algorithm>
#include <string>

#include "enum_detail.hpp"
#include "fgl/errors.hpp"

namespace fgl {

std::uint64_t outcome_count(int n) {
  std::uint64_t total = 1;
  for (int v = 0; v < n; ++v) total *= static_cast<std::uint64_t>(n) + 1;
  return total;
}

void check_enum_limit(int n, int limit) {
  int effective = std::min(limit, kHardEnumLimit);
  if (n <= effective) return;
  std::string count = BigUint::pow(BigUint(static_cast<std::uint64_t>(n) + 1),
                                   static_cast<unsigned>(n))
                          .to_decimal();
  std::string msg = "exact enumeration for n = " + std::to_string(n) + " needs (n+1)^n = " +
                    count + " outcomes; the limit allows n <= " + std::to_string(effective);
  if (limit < kHardEnumLimit) msg += " (raise with --limit-override, hard cap " +
                                     std::to_string(kHardEnumLimit) + ")";
  throw SizeLimitError(msg);
}

namespace {

// Per-vertex choice weights scaled to integers over a per-vertex common
// denominator: weight(digit 0) = 1 - p_v, weight(digit w) = p_v * pi_{w-1}.
// Row sums equal den[v], so outcome weights over prod(den) sum to exactly 1.
struct WeightTables {
  int n = 0;
  std::vector<std::vector<BigUint>> weight;  // [vertex][digit]
  BigUint total_den;

  static WeightTables build(const GenSpec& spec) {
    WeightTables t;
    t.n = spec.n;
    t.total_den = BigUint(1);
    const Rational one(1);
    for (int v = 0; v < spec.n; ++v) {
      std::vector<Rational> choices;
      choices.reserve(spec.n + 1);
      choices.push_back(one - spec.good_prob[v]);
      for (int w = 0; w < spec.n; ++w) {
        choices.push_back(spec.good_prob[v] * spec.target_dist[w]);
      }
      BigUint den(1);
      for (const Rational& c : choices) den = BigUint::lcm(den, c.den());
      std::vector<BigUint> row;
      row.reserve(choices.size());
      for (const Rational& c : choices) row.push_back(c.num() * (den / c.den()));
      t.weight.push_back(std::move(row));
      t.total_den = t.total_den * den;
    }
    return t;
  }
};

// Serial kernel: exact integer sum of weights of cyclic outcomes over the
// index range [begin, end).
BigUint cyclic_weight_sum_range(const WeightTables& tables, std::uint64_t begin,
                                std::uint64_t end) {
  const int n = tables.n;
  BigUint sum;
  if (begin >= end) return sum;

  detail::DigitCounter counter(n, static_cast<unsigned>(n) + 1);
  counter.seek(begin);
  detail::CycleScratch scratch(n);

  // prefix[v] = product of weights of digits 0..v-1. The odometer changes a
  // short tail of digits per step, so only that tail of prefixes is rebuilt.
  std::vector<BigUint> prefix(n + 1);
  prefix[0] = BigUint(1);
  for (int v = 0; v < n; ++v) {
    prefix[v + 1] = prefix[v] * tables.weight[v][counter.digit[v]];
  }

  for (std::uint64_t idx = begin;; ++idx) {
    if (!prefix[n].is_zero() && scratch.has_cycle(counter.out.data(), n)) {
      sum += prefix[n];
    }
    if (idx + 1 == end) break;
    int changed = counter.advance();
    for (int v = changed; v < n; ++v) {
      prefix[v + 1] = prefix[v] * tables.weight[v][counter.digit[v]];
    }
  }
  return sum;
}

ExactReport finish_report(const GenSpec& spec, std::uint64_t total, Rational prob) {
  ExactReport report;
  report.spec = spec;
  report.total_outcomes = total;
  report.cycle_probability = std::move(prob);
  if (spec.uniform_target()) {
    report.claimed_value = spec.mean_good_prob();
  } else if (spec.constant_good_prob()) {
    report.claimed_value = spec.good_prob.front();
  }
  if (report.claimed_value) {
    report.matches_claim = report.cycle_probability == *report.claimed_value;
  }
  return report;
}

}  // namespace

ExactReport exact_cycle_probability(const GenSpec& spec, int workers, int limit) {
  validate_spec(spec);
  check_enum_limit(spec.n, limit);
  if (workers < 1) throw ValidationError("exact_cycle_probability: workers must be >= 1");

  const WeightTables tables = WeightTables::build(spec);
  const std::uint64_t total = outcome_count(spec.n);
  const int chunks = static_cast<int>(std::min<std::uint64_t>(total, workers));

  std::vector<BigUint> partial(chunks);
#pragma omp parallel for num_threads(workers) schedule(static)
  for (int c = 0; c < chunks; ++c) {
    std::uint64_t lo = total / chunks * c + std::min<std::uint64_t>(c, total % chunks);
    std::uint64_t hi = lo + total / chunks + (static_cast<std::uint64_t>(c) < total % chunks);
    partial[c] = cyclic_weight_sum_range(tables, lo, hi);
  }
  BigUint sum;
  for (const BigUint& p : partial) sum += p;

  return finish_report(spec, total, Rational(std::move(sum), tables.total_den));
}

ExactReport exact_cycle_probability_serial(const GenSpec& spec, int limit) {
  validate_spec(spec);
  check_enum_limit(spec.n, limit);
  const WeightTables tables = WeightTables::build(spec);
  const std::uint64_t total = outcome_count(spec.n);
  BigUint sum = cyclic_weight_sum_range(tables, 0, total);
  return finish_report(spec, total, Rational(std::move(sum), tables.total_den));
}

OutcomeEnumerator::OutcomeEnumerator(const GenSpec& spec, int limit)
    : OutcomeEnumerator(spec, 0, outcome_count(std::min(spec.n, kHardEnumLimit)), limit) {}

OutcomeEnumerator::OutcomeEnumerator(const GenSpec& spec, std::uint64_t begin, std::uint64_t end,
                                     int limit)
    : n_(spec.n), index_(begin), end_(end) {
  validate_spec(spec);
  check_enum_limit(spec.n, limit);
  total_ = outcome_count(spec.n);
  if (end_ > total_ || begin > end_) {
    throw ValidationError("OutcomeEnumerator: bad index range");
  }
  const Rational one(1);
  for (int v = 0; v < spec.n; ++v) {
    std::vector<Rational> row;
    row.reserve(spec.n + 1);
    row.push_back(one - spec.good_prob[v]);
    for (int w = 0; w < spec.n; ++w) row.push_back(spec.good_prob[v] * spec.target_dist[w]);
    choice_weight_.push_back(std::move(row));
  }
  digit_.assign(spec.n, 0);
}

bool OutcomeEnumerator::next(OutcomeWeight& out) {
  if (index_ >= end_) return false;
  if (fresh_) {
    std::uint64_t radix = total_;
    for (int v = 0; v < n_; ++v) {
      radix /= static_cast<unsigned>(n_) + 1;
      digit_[v] = static_cast<std::uint8_t>((index_ / radix) % (static_cast<unsigned>(n_) + 1));
    }
    fresh_ = false;
  } else {
    int v = n_ - 1;
    while (digit_[v] == n_) digit_[v--] = 0;
    ++digit_[v];
  }

  out.graph.n = n_;
  out.graph.out.assign(n_, kNoEdge);
  Rational weight(1);
  for (int v = 0; v < n_; ++v) {
    if (digit_[v] != 0) out.graph.out[v] = static_cast<std::int32_t>(digit_[v]) - 1;
    weight *= choice_weight_[v][digit_[v]];
  }
  out.weight = std::move(weight);
  ++index_;
  return true;
}

Rational exact_conditional_cycle_probability(int n, int k, const std::vector<Rational>& pi,
                                             int limit) {
  if (n < 1) throw ValidationError("conditional: n must be >= 1");
  if (k < 0 || k > n) {
    throw ValidationError("conditional: k = " + std::to_string(k) + " outside [0, " +
                          std::to_string(n) + "]");
  }
  if (static_cast<int>(pi.size()) != n) {
    throw ValidationError("conditional: pi has " + std::to_string(pi.size()) +
                          " entries, expected " + std::to_string(n));
  }
  Rational sum_pi;
  for (const Rational& w : pi) sum_pi += w;
  if (sum_pi != Rational(1)) {
    throw ValidationError("conditional: pi sums to " + sum_pi.str() + ", expected 1");
  }
  check_enum_limit(n, limit);
  if (k == 0) return Rational(0);

  // Weights of a single target draw, over the common denominator of pi.
  BigUint den(1);
  for (const Rational& w : pi) den = BigUint::lcm(den, w.den());
  std::vector<BigUint> weight;
  weight.reserve(n);
  for (const Rational& w : pi) weight.push_back(w.num() * (den / w.den()));

  // n^k assignments of targets to the k good vertices; the rest stay bare.
  std::vector<std::uint8_t> target(k, 0);
  std::vector<std::int8_t> out(n, -1);
  for (int v = 0; v < k; ++v) out[v] = 0;
  detail::CycleScratch scratch(n);

  std::vector<BigUint> prefix(k + 1);
  prefix[0] = BigUint(1);
  for (int v = 0; v < k; ++v) prefix[v + 1] = prefix[v] * weight[0];

  std::uint64_t total = 1;
  for (int v = 0; v < k; ++v) total *= static_cast<std::uint64_t>(n);

  BigUint cyclic_sum;
  for (std::uint64_t idx = 0;; ++idx) {
    if (!prefix[k].is_zero() && scratch.has_cycle(out.data(), n)) {
      cyclic_sum += prefix[k];
    }
    if (idx + 1 == total) break;
    int v = k - 1;
    while (target[v] == n - 1) {
      target[v] = 0;
      out[v] = 0;
      --v;
    }
    ++target[v];
    out[v] = static_cast<std::int8_t>(target[v]);
    for (int i = v; i < k; ++i) prefix[i + 1] = prefix[i] * weight[target[i]];
  }
  return Rational(std::move(cyclic_sum), BigUint::pow(den, static_cast<unsigned>(k)));
}

Rational subgraph_retention_probability(const GenSpec& spec, const std::vector<int>& subset) {
  validate_spec(spec);
  if (subset.empty()) throw ValidationError("retention: empty vertex subset");
  std::vector<bool> seen(spec.n, false);
  Rational sum;
  for (int v : subset) {
    if (v < 0 || v >= spec.n) {
      throw ValidationError("retention: vertex " + std::to_string(v + 1) + " out of range");
    }
    if (seen[v]) throw ValidationError("retention: duplicate vertex " + std::to_string(v + 1));
    seen[v] = true;
    sum += spec.target_dist[v];
  }
  return sum;
}

}  // namespace fgl
