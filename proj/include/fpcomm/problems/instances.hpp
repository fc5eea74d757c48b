#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fpcomm/ff/matrix.hpp"
#include "fpcomm/random.hpp"

namespace fpcomm::problems {

using ff::FpMatrix;
using ff::FpVector;
using ff::PrimeField;

// Every generator re-checks its promise before returning and throws
// PromiseViolation if it does not hold.

struct RankInstance {
  FpMatrix x;
  FpMatrix y;
  std::size_t k = 0;
  std::size_t promisedRank = 0;  // k or k + 1
};

// z of rank `target` uniformly, x uniform, y = z - x.
// Throws InvalidArgument unless k + 1 <= n and target is k or k + 1.
RankInstance gen_rank_instance(std::size_t n, std::uint32_t p, std::size_t target, std::size_t k, Rng& rng);

struct InverseInstance {
  FpMatrix x;
  FpMatrix y;
};

// x + y uniform over GL(n, p).
InverseInstance gen_inverse_instance(std::size_t n, std::uint32_t p, Rng& rng);

struct SlsInstance {
  FpMatrix x;
  FpMatrix y;
  FpVector b;
};

// Throws ZeroVector for b = 0.
SlsInstance gen_sls_instance(std::size_t n, const FpVector& b, Rng& rng);

enum class IpVariant {
  IP,        // unrestricted entries
  IPprime,   // all entries of x and y nonzero
  IPdprime,  // Bob's entries nonzero
};

struct IpInstance {
  FpVector x;
  FpVector y;
  IpVariant variant = IpVariant::IP;
};

// Uniform over the variant's inputs with <x, y> = target (0 or 1), by rejection.
IpInstance gen_ip_instance(std::size_t n, std::uint32_t p, IpVariant variant, std::uint32_t target, Rng& rng);

struct HamInstance {
  std::vector<std::uint8_t> x;
  std::vector<std::uint8_t> y;
  std::size_t k = 0;
};

std::size_t hamming_weight_of_sum(const HamInstance& h);

// weight(x XOR y) = target, target in {k, k + 2}, k + 2 <= n.
HamInstance gen_ham_instance(std::size_t n, std::size_t k, std::size_t target, Rng& rng);

struct SubspaceInstance {
  FpMatrix basisA;  // (n/2) x n, full row rank
  FpMatrix basisB;
};

// Intersection dimension of the two row spaces.
std::size_t intersection_dimension(const SubspaceInstance& s);

// n even, intersectDim in {0, 1}.
SubspaceInstance gen_subspace_instance(std::size_t n, std::uint32_t p, std::size_t intersectDim, Rng& rng);

}  // namespace fpcomm::problems
