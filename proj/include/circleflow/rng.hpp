#pragma once

#include <cstdint>
#include <random>

namespace circleflow {

// splitmix64 step; the usual finalizer used to derive independent streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic seed for stream (a, b, c) under `master`. Replicates and
// subsystems never share a stream.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = master;
  std::uint64_t h = splitmix64(s);
  s ^= a + 0x9e3779b97f4a7c15ULL + (h << 6);
  h ^= splitmix64(s);
  s ^= b + 0xbf58476d1ce4e5b9ULL + (h >> 3);
  h ^= splitmix64(s);
  s ^= c + 0x94d049bb133111ebULL + (h << 9);
  return splitmix64(s) ^ h;
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

}  // namespace circleflow
