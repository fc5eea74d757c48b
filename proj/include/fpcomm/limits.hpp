#pragma once

#include <cstdint>

namespace fpcomm {

// Enumeration caps. Operations that would exceed one throw SizeLimit.
struct Limits {
  std::uint64_t dft_points = 4096;             // p^N for the naive transform
  std::uint64_t spectral_points = 81;          // p^N for singular-value checks
  std::uint64_t lp_points = 16;                // 2^N for the exact LP oracle
  std::uint64_t exact_checks = 100'000'000;    // |G|^2 * |family| for uniformizing checks
  std::uint64_t group_elements = 1ULL << 22U;  // explicit group element tables
};

// Comparison tolerances used by the verifiers.
struct Tolerances {
  double transform = 1e-9;
  double spectrum = 1e-6;
};

}  // namespace fpcomm
