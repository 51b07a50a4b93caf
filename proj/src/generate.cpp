#include "fgl/generate.hpp"

#include <algorithm>

namespace fgl {

Sampler::Sampler(const GenSpec& spec) : n_(spec.n) {
  validate_spec(spec);

  coin_num_.reserve(spec.n);
  coin_den_.reserve(spec.n);
  for (const Rational& p : spec.good_prob) {
    coin_num_.push_back(p.num());
    coin_den_.push_back(p.den());
  }

  target_den_ = BigUint(1);
  for (const Rational& w : spec.target_dist) {
    target_den_ = BigUint::lcm(target_den_, w.den());
  }
  target_cum_.reserve(spec.n);
  BigUint running;
  for (const Rational& w : spec.target_dist) {
    running += w.num() * (target_den_ / w.den());
    target_cum_.push_back(running);
  }

  small_ = target_den_.fits_u64() &&
           std::all_of(coin_den_.begin(), coin_den_.end(),
                       [](const BigUint& d) { return d.fits_u64(); });
  if (small_) {
    for (int v = 0; v < n_; ++v) {
      coin_num64_.push_back(coin_num_[v].to_u64());
      coin_den64_.push_back(coin_den_[v].to_u64());
    }
    target_den64_ = target_den_.to_u64();
    for (const BigUint& c : target_cum_) target_cum64_.push_back(c.to_u64());
  }
}

void Sampler::generate(SplitMix64& rng, FunctionalGraph& g) const {
  g.n = n_;
  g.out.assign(n_, kNoEdge);
  if (small_) {
    for (int v = 0; v < n_; ++v) {
      if (uniform_below_u64(rng, coin_den64_[v]) >= coin_num64_[v]) continue;
      std::uint64_t u = uniform_below_u64(rng, target_den64_);
      auto it = std::upper_bound(target_cum64_.begin(), target_cum64_.end(), u);
      g.out[v] = static_cast<std::int32_t>(it - target_cum64_.begin());
    }
    return;
  }
  for (int v = 0; v < n_; ++v) {
    if (!(uniform_below(rng, coin_den_[v]) < coin_num_[v])) continue;
    BigUint u = uniform_below(rng, target_den_);
    auto it = std::upper_bound(target_cum_.begin(), target_cum_.end(), u);
    g.out[v] = static_cast<std::int32_t>(it - target_cum_.begin());
  }
}

FunctionalGraph Sampler::generate(SplitMix64& rng) const {
  FunctionalGraph g;
  generate(rng, g);
  return g;
}

FunctionalGraph generate(const GenSpec& spec, SplitMix64& rng) {
  return Sampler(spec).generate(rng);
}

}  // namespace fgl
