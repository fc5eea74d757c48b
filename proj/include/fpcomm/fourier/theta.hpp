#pragma once

#include <cstdint>

#include "fpcomm/ff/matrix.hpp"
#include "fpcomm/fourier/group_function.hpp"
#include "fpcomm/limits.hpp"
#include "fpcomm/numeric.hpp"

namespace fpcomm::fourier {

// Full-rank indicator on F_p^(n x n), read as a function on F_p^(n^2).
// Throws SizeLimit when p^(n^2) > limits.dft_points.
GroupFunction theta(std::size_t n, std::uint32_t p, const Limits& limits = {});

// theta^(s) for rank(s) = r: (-1)^r p^(-n(n+1)/2) prod_{k=1}^{n-r} (p^k - 1).
Rational theta_hat_by_rank(std::uint64_t n, std::uint64_t p, std::uint64_t r);
Rational theta_hat_closed_exact(const ff::FpMatrix& s);
double theta_hat_closed(const ff::FpMatrix& s);

// ||theta^||_1 = p^-n prod_{k=1}^n (p^k - 1) prod_{k=0}^{n-1} (1 + p^k) / p^k.
Rational theta_hat_l1_exact(std::uint64_t n, std::uint64_t p);
// Log-space evaluation; fine for any n.
double theta_hat_l1_log2(std::uint64_t n, std::uint64_t p);
// Double value; exact path for small n, 2^log2 otherwise (may overflow to inf).
double theta_hat_l1_closed(std::uint64_t n, std::uint64_t p);

}  // namespace fpcomm::fourier
