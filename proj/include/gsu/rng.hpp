#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace gsu {

// All stochastic code takes an Rng&. Draws go through the helpers below
// rather than std::*_distribution so streams are identical across standard
// library implementations.
using Rng = std::mt19937_64;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Folds a derivation path into the master seed. Distinct paths give
// unrelated seeds; the same path always gives the same seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = mix64(master);
  for (std::uint64_t k : path) h = mix64(h ^ mix64(k + 0x632be59bd9b4e019ULL));
  return h;
}

inline Rng make_stream(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
  return Rng(derive_seed(master, path));
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, n). n must be > 0.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// True with probability p; p <= 0 never fires, p >= 1 always fires.
inline bool bernoulli(Rng& rng, double p) {
  return uniform01(rng) < p;
}

}  // namespace gsu
