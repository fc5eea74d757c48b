#pragma once

#include <cstddef>
#include <vector>

#include "fpcomm/fourier/group_function.hpp"
#include "fpcomm/limits.hpp"
#include "fpcomm/numeric.hpp"

namespace fpcomm::witness {

// min ||phi^||_1 over phi with phi(x) in [1-eps, 1+eps] where g = +1,
// [-1-eps, -1+eps] where g = -1 and [-1-eps, 1+eps] where g is undefined.
struct ApproxNormLP {
  std::size_t N = 0;
  Rational epsilon;
  Rational optimum;
  std::vector<Rational> optimizer;  // phi, indexed like F_2^N
  std::size_t pivots = 0;
};

// Exact rational simplex; only p = 2, where phi^ is real. Undefined points are
// accepted everywhere (the all-undefined function gives optimum 0).
// Throws UnsupportedField for p != 2, SizeLimit when 2^N > limits.lp_points,
// InvalidArgument for epsilon outside (0, 1).
ApproxNormLP approx_fourier_l1_exact(const fourier::PartialSignFunction& g, const Rational& epsilon,
                                     const Limits& limits = {});

}  // namespace fpcomm::witness
