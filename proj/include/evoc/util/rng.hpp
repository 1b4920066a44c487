#pragma once

#include <cstdint>
#include <random>

namespace evoc {

using Rng = std::mt19937_64;

// Derives an independent, reproducible stream for one component of a run.
// splitmix64 finalizer over (seed, tag) so neighbouring tags decorrelate.
inline Rng split_rng(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return Rng(z ^ (z >> 31));
}

inline double uniform01(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// Bernoulli draw. Degenerate probabilities consume no randomness.
inline bool chance(Rng& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return uniform01(rng) < p;
}

// Uniform index in [0, n). n must be positive.
inline std::size_t pick_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace evoc
