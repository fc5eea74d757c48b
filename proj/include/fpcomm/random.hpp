#pragma once

#include <cstdint>
#include <random>

namespace fpcomm {

using Rng = std::mt19937_64;

// SplitMix64 finalizer; used to derive independent per-trial streams.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31U);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return mix64(mix64(master) ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

inline Rng make_stream(std::uint64_t master, std::uint64_t stream) {
  return Rng(derive_seed(master, stream));
}

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

// Bernoulli(prob) with prob in [0, 1].
inline bool coin(Rng& rng, double prob) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < prob;
}

}  // namespace fpcomm
