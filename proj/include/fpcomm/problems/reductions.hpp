#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fpcomm/problems/instances.hpp"

namespace fpcomm::problems {

// Q with Q b = e_1: M = [b | e_i ...] completed greedily in index order
// (skipping dependent e_i), Q = M^-1. Throws ZeroVector for b = 0.
FpMatrix canonical_q(const FpVector& b);

// (Q^-1 x, Q^-1 y, b); the first coordinate of the solution of
// (x' + y') t = b equals ((x + y)^-1)_11.
SlsInstance reduce_inverse_to_sls(const FpMatrix& x, const FpMatrix& y, const FpVector& b);

struct ConcatInstance {
  FpMatrix top;     // [x | -I]
  FpMatrix bottom;  // [y |  I]
};

// rank(x + y) = rank(vstack(top, bottom)) - n. Throws DimensionMismatch.
ConcatInstance additive_to_concat(const FpMatrix& x, const FpMatrix& y);
std::size_t concat_rank(const ConcatInstance& c);

// diag(m, 1): keeps ((m^-1)_11) and invertibility, dimension + 1.
FpMatrix concat_parity_fix(const FpMatrix& m);

// Zero-pads a k x k matrix into the top-left of an n x n one.
FpMatrix pad_rank(const FpMatrix& x, std::size_t n);

struct IpReduction {
  std::string indexMessage;  // bit j is '1' iff x_j = 0
  IpInstance reduced;        // restriction to the coordinates where x_j != 0
};

// Throws PromiseViolation if y has a zero entry, InvalidArgument for p = 2.
IpReduction ip_dprime_to_prime(const FpVector& x, const FpVector& y);

// sum_j prod_i x^(i)_j. Throws DimensionMismatch for mixed lengths or fields,
// InvalidArgument for an empty list.
ff::Elem gip_eval(const std::vector<FpVector>& vectors);

}  // namespace fpcomm::problems
