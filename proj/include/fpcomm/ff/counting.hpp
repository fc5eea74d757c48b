#pragma once

#include <cstdint>
#include <vector>

#include "fpcomm/numeric.hpp"

namespace fpcomm::ff {

// Number of n x n matrices over F_p of rank exactly r, from the product formula.
BigInt count_rank_matrices(std::uint64_t n, std::uint64_t p, std::uint64_t r);

// q-binomial [n choose r]_q at q = p: number of r-dimensional subspaces of F_p^n.
BigInt gaussian_binomial(std::uint64_t n, std::uint64_t r, std::uint64_t p);

// Order of GL(n, F_p): prod_{k<n} (p^n - p^k).
BigInt general_linear_order(std::uint64_t n, std::uint64_t p);

// Ratio #(rank n) / #(rank n-1) in closed form: (1 + 1/(p^n - 1)) (p-1)^2 / p.
Rational rank_ratio_alpha(std::uint64_t n, std::uint64_t p);

struct RankCensus {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::vector<BigInt> counts;  // index = rank, 0..n

  BigInt total() const;
};

// Census built from the closed formula.
RankCensus rank_census_formula(std::uint64_t n, std::uint64_t p);
// Census built by enumerating all p^(n^2) matrices; throws SizeLimit above `cap`.
RankCensus rank_census_enumerated(std::uint64_t n, std::uint64_t p, std::uint64_t cap = 1ULL << 22U);

}  // namespace fpcomm::ff
