#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "fpcomm/problems/instances.hpp"
#include "json.hpp"

namespace fpcomm::problems {

// How the modelled Inverse protocol answers when its input is singular
// (outside the promise).
enum class OffPromisePolicy {
  Adversarial,    // claims zero iff the lower-right block has full rank
  BlockIdentity,  // claims zero iff the lower-right block is singular
  AlwaysZero,
  AlwaysNonzero,
};

// A protocol for Inverse with error exactly delta on promise inputs:
// "is ((M)^-1)_11 zero?" answered correctly, then flipped with probability
// delta, independently per call.
struct NoisyOracle {
  double delta = 0.0;
  OffPromisePolicy policy = OffPromisePolicy::Adversarial;

  bool claims_zero(const FpMatrix& m, Rng& rng) const;
  // Flips a known answer with probability delta.
  bool answer(bool truth, Rng& rng) const;
};

// A -> A1 = [c | A] (random column c) -> A2 = [[a, r], [c, A]] (random first row),
// so that A is the lower-right block of A2.
FpMatrix augment(const FpMatrix& a, Rng& rng);

// One trial: the oracle's "(A2^-1)_11 = 0" claim on the augmented matrix.
// a is (n-1) x (n-1) with rank n-1 or n-2. Throws PromiseViolation otherwise,
// InvalidArgument for p = 2 (see the _p2 variant).
bool reduce_rank_to_inverse(const FpMatrix& a, const NoisyOracle& oracle, Rng& rng);

// p = 2: the oracle is queried on B = G1 A2 G2 with uniform invertible G1, G2.
bool reduce_rank_to_inverse_p2(const FpMatrix& a, const NoisyOracle& oracle, Rng& rng);
// The B above, exposed for uniformity checks.
FpMatrix sandwich(const FpMatrix& a2, Rng& rng);

enum class Reduction {
  Identity,        // the oracle is asked the rank question itself
  RankToInverse,   // p >= 3 augmentation
  RankToInverseP2, // augmentation + invertible sandwich
};

std::string to_string(Reduction r);
std::string to_string(OffPromisePolicy p);

struct AdvantageReport {
  std::string problem;
  std::size_t n = 0;  // dimension of the Inverse instance; Rank inputs are (n-1) x (n-1)
  std::uint32_t p = 0;
  double delta = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string policy;
  double alphaHat = 0.0;   // claim frequency on rank n-1 inputs
  double betaHat = 0.0;    // claim frequency on rank n-2 inputs
  double gap = 0.0;        // betaHat - alphaHat
  double alphaStderr = 0.0;
  double betaStderr = 0.0;
  double stderr_ = 0.0;    // sqrt(alphaStderr^2 + betaStderr^2)
  double p0Hat = -1.0;     // p = 2 only: claim frequency on uniform rank n-1 matrices
};

// Trial t uses streams 2t (rank n-1 side) and 2t+1 (rank n-2 side) of `seed`.
AdvantageReport estimate_advantage(Reduction reduction, std::size_t n, std::uint32_t p, const NoisyOracle& oracle,
                                   std::uint64_t trials, std::uint64_t seed);

// Claim frequency of the oracle on uniform rank-(n-1) n x n matrices.
double estimate_p0(std::size_t n, std::uint32_t p, const NoisyOracle& oracle, std::uint64_t samples, std::uint64_t seed);

struct AmplificationReport {
  std::uint64_t repetitions = 0;  // odd
  double threshold = 0.0;
  std::uint64_t decisions = 0;    // per side
  double errorLow = 0.0;          // rank n-1 inputs judged rank n-2
  double errorHigh = 0.0;         // rank n-2 inputs judged rank n-1
  double target = 0.0;
};

// ceil(2 ln(1/target) / gap^2), rounded up to odd.
std::uint64_t amplification_repetitions(double gap, double target);

// Decides rank n-2 when the claim frequency over the repetitions lies on
// betaHat's side of (alphaHat + betaHat)/2.
AmplificationReport amplify(Reduction reduction, std::size_t n, std::uint32_t p, const NoisyOracle& oracle,
                            const AdvantageReport& measured, double target, std::uint64_t decisions,
                            std::uint64_t seed);

nlohmann::json to_json(const AdvantageReport& r);
nlohmann::json to_json(const AmplificationReport& r);

}  // namespace fpcomm::problems
