#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fpcomm/limits.hpp"
#include "fpcomm/multiparty/protocol.hpp"
#include "fpcomm/multiparty/sampling.hpp"
#include "fpcomm/numeric.hpp"
#include "json.hpp"

namespace fpcomm::multiparty {

// True when the output equals f(g1 g2); never true off dom f.
bool correct_output(const PartitionedProblem& problem, const std::vector<Element>& inputs, int output);

struct RerandomizeRun {
  int output = kUndefinedOutput;
  std::uint64_t familyIndex = 0;
  InputPair mapped{0, 0};
  Transcript transcript;
};

// Draws h from the tape, maps (g1, g2) to h(g1, g2) and runs the two-player
// base protocol on the result with the same tape.
RerandomizeRun rerandomize(const UniformizerFamily& family, const Protocol& base, Element g1, Element g2,
                           RandomTape& tape);

struct RerandomizeReport {
  std::string problem;
  std::string family;
  std::string protocol;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t inputs = 0;
  double baseNuError = 0.0;  // exact for deterministic base protocols
  double errorBound = 0.0;   // |I(f)| * baseNuError
  double worstInputError = 0.0;
  double worstInputStderr = 0.0;
  InputPair worstInput{0, 0};
  double meanInputError = 0.0;
  bool pass = false;  // worstInputError <= errorBound + 3 stderr
};

// Per-input error of the rerandomized protocol over every input in pre(G_i),
// i in I(f), with `trials` runs each. Input k uses tape seeds from stream k.
RerandomizeReport certify_rerandomized(const PartitionedProblem& problem, const UniformizerFamily& family,
                                       const Protocol& base, std::uint64_t trials, std::uint64_t seed,
                                       const ClassWeights& weights = {});

struct SymmetrizeRun {
  int output = kUndefinedOutput;
  std::size_t j = 1;  // the player Bob simulates
  std::uint64_t bitsCharged = 0;
  std::uint64_t totalBits = 0;
  std::vector<Element> shares;
};

// Two-player simulation of an s-player protocol: Bob plays a uniform player j
// with x_j = g2, Alice plays the rest with shares whose cyclic product from
// j+1 to j-1 equals g1. The full product is conjugate to g1 g2 (equal when G
// is abelian). Only bits exchanged with player j are charged.
SymmetrizeRun symmetrize(const Protocol& protocol, Element g1, Element g2, Rng& rng, RandomTape& tape);

struct SymmetrizeReport {
  std::string problem;
  std::string protocol;
  std::size_t players = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double meanCharged = 0.0;
  double stderr_ = 0.0;
  double meanTotal = 0.0;
  std::uint64_t worstCaseBits = 0;
  bool balanced = false;
  bool exact = false;  // sum charged * s == sum total
  bool pass = false;
};

// Inputs drawn from nu. Balanced protocols pass when the charged mean is
// exactly total/s; others when it is at most worst_case_bits/s + 3 stderr.
SymmetrizeReport estimate_symmetrization(const PartitionedProblem& problem, const Protocol& protocol,
                                         std::uint64_t samples, std::uint64_t seed, const ClassWeights& weights = {});

// Exact law of the shares (x_1..x_s) handed to the protocol when (g1, g2) ~ nu.
TupleLaw symmetrized_law(const PartitionedProblem& problem, std::size_t s, const std::vector<Rational>& weights = {},
                         const Limits& limits = {});

// E over j and Alice's shares of the bits charged on a fixed input.
Rational exact_expected_charge(const Protocol& protocol, Element g1, Element g2, const Limits& limits = {});

struct CoinRun {
  int output = kUndefinedOutput;
  std::uint64_t bits = 0;
};

// Two-player protocol with public coins: a coin value fixes every random choice.
using CoinProtocol = std::function<CoinRun(std::uint64_t coins, Element g1, Element g2)>;

CoinProtocol rerandomized_runner(UniformizerFamily family, ProtocolPtr base);

struct FixingEvaluation {
  std::uint64_t coins = 0;
  double error = 0.0;  // under nu, exact
  double cost = 0.0;   // expected bits under nu, exact
};

FixingEvaluation evaluate_fixing(const PartitionedProblem& problem, const CoinProtocol& protocol, std::uint64_t coins,
                                 const ClassWeights& weights = {});

struct DerandomizeResult {
  FixingEvaluation fixing;
  double delta = 0.0;
  double expectedCost = 0.0;  // mean cost over the pilot fixings
  std::uint64_t pilot = 0;
  std::uint64_t samplesUsed = 0;
};

// Samples coin fixings until one has nu-error <= 2 delta and cost <= expectedCost / delta.
// Throws BudgetExhausted with the lowest-error fixing seen when `budget` samples fail.
DerandomizeResult markov_derandomize(const PartitionedProblem& problem, const CoinProtocol& protocol, double delta,
                                     std::uint64_t budget, std::uint64_t seed, const ClassWeights& weights = {},
                                     std::uint64_t pilot = 32);

nlohmann::json to_json(const RerandomizeReport& r);
nlohmann::json to_json(const SymmetrizeReport& r);
nlohmann::json to_json(const DerandomizeResult& r);

}  // namespace fpcomm::multiparty
