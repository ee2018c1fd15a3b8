#include "circleflow/decorations.hpp"

#include <bit>

#include "circleflow/rng.hpp"

namespace circleflow {

namespace {
constexpr std::uint64_t kTagU = 0x75u;        // 'u'
constexpr std::uint64_t kTagEps = 0x65u;      // 'e'
constexpr std::uint64_t kTagResample = 0x72u; // 'r'
}  // namespace

std::uint64_t DecorationStore::key_seed(const ExtremumKey& key,
                                        std::uint64_t tag) const {
  const std::uint64_t side_tag = side_ == Side::plus ? 0x2bULL : 0x2dULL;
  return derive_seed(seed_ ^ (side_tag << 56), key.pos,
                     std::bit_cast<std::uint64_t>(key.value), tag);
}

double DecorationStore::u(const ExtremumKey& key) const {
  auto it = u_cache_.find(key);
  if (it != u_cache_.end()) return it->second;
  std::mt19937_64 engine(key_seed(key, kTagU));
  const double v = law_.sample(engine);
  u_cache_.emplace(key, v);
  return v;
}

int DecorationStore::eps(const ExtremumKey& key) const {
  return eps_resampled(key, 0);
}

int DecorationStore::eps_resampled(const ExtremumKey& key,
                                   std::uint64_t resample) const {
  const double uu = u(key);
  std::mt19937_64 engine(
      derive_seed(key_seed(key, resample == 0 ? kTagEps : kTagResample),
                  resample));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  return unif(engine) < uu ? 1 : -1;
}

}  // namespace circleflow
