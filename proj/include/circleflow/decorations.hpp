#pragma once

#include <cstdint>
#include <unordered_map>

#include "circleflow/brownian_path.hpp"
#include "circleflow/split_law.hpp"

namespace circleflow {

// The auxiliary randomness attached to running extrema of the driver: for
// each arg-extremum key a pair (eps, U) with U drawn from the split law and
// eps = +1 with conditional probability U. Draws are a pure function of
// (seed, key), so repeated queries with one key always return the same pair
// and the query order is irrelevant. The plus store keys on running minima,
// the minus store on running maxima; the two use disjoint seeds and their
// streams never touch the path's.
class DecorationStore {
 public:
  DecorationStore(Side side, SplitLaw law, std::uint64_t seed)
      : side_(side), law_(law), seed_(seed) {}

  Side side() const { return side_; }
  const SplitLaw& law() const { return law_; }

  double u(const ExtremumKey& key) const;
  int eps(const ExtremumKey& key) const;

  // Independent redraw of eps as Bernoulli(U) while keeping U fixed; stream
  // index 0 is the base coupled draw.
  int eps_resampled(const ExtremumKey& key, std::uint64_t resample) const;

 private:
  std::uint64_t key_seed(const ExtremumKey& key, std::uint64_t tag) const;

  Side side_;
  SplitLaw law_;
  std::uint64_t seed_;
  mutable std::unordered_map<ExtremumKey, double, ExtremumKeyHash> u_cache_;
};

}  // namespace circleflow
