#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fpcomm/multiparty/problem.hpp"
#include "fpcomm/multiparty/uniformize.hpp"
#include "fpcomm/random.hpp"

namespace fpcomm::multiparty {

// Shared random string. Fixing the seed fixes every coin a run reads.
class RandomTape {
 public:
  explicit RandomTape(std::uint64_t seed) : seed_(seed), rng_(seed) {}
  std::uint64_t seed() const { return seed_; }
  std::uint64_t below(std::uint64_t bound) { return uniform_below(rng_, bound); }
  bool flip(double prob) { return coin(rng_, prob); }

 private:
  std::uint64_t seed_;
  Rng rng_;
};

// Party 0 is the coordinator, players are 1..s.
inline constexpr std::size_t kCoordinator = 0;

struct Message {
  std::size_t from = 0;
  std::size_t to = 0;
  std::string bits;
};

inline constexpr int kUndefinedOutput = -1;

struct Transcript {
  std::size_t players = 0;
  std::size_t rounds = 0;
  std::vector<Message> messages;  // zero-length messages are not recorded
  std::optional<int> output;

  std::uint64_t total_bits() const;
  // Bits exchanged between the coordinator and player j, both directions.
  std::uint64_t bits_with(std::size_t j) const;
  // One {"from", "to", "bits"} object per line.
  std::string json_lines() const;
};

struct CoordinatorStep {
  std::optional<int> output;         // set to halt
  std::vector<std::string> toPlayers;  // one entry per player, may be empty
};

// Round r: the coordinator speaks first, then every player answers.
class Protocol {
 public:
  Protocol(std::shared_ptr<const PartitionedProblem> problem, std::size_t players);
  virtual ~Protocol() = default;

  virtual std::string name() const = 0;
  virtual std::size_t max_rounds() const { return 8; }
  virtual bool deterministic() const { return true; }
  // Every player exchanges the same number of bits in every run.
  virtual bool balanced() const { return false; }
  virtual std::uint64_t worst_case_bits() const = 0;

  // received[j - 1] lists player j's messages so far, one per round.
  virtual CoordinatorStep coordinator(std::size_t round, const std::vector<std::vector<std::string>>& received,
                                      RandomTape& tape) const = 0;
  // received lists the coordinator's messages to this player, one per round.
  virtual std::string player(std::size_t round, std::size_t j, Element input,
                             const std::vector<std::string>& received, RandomTape& tape) const = 0;

  const PartitionedProblem& problem() const { return *problem_; }
  std::shared_ptr<const PartitionedProblem> problem_ptr() const { return problem_; }
  std::size_t players() const { return players_; }

 protected:
  std::shared_ptr<const PartitionedProblem> problem_;
  std::size_t players_;
};

using ProtocolPtr = std::shared_ptr<const Protocol>;

// Throws DimensionMismatch for a wrong input count and RoundLimitExceeded when
// no output arrives within round_limit rounds (protocol.max_rounds() if 0).
Transcript run_coordinator(const Protocol& protocol, const std::vector<Element>& inputs, RandomTape& tape,
                           std::size_t round_limit = 0);

// Outputs a constant without any communication.
class ConstantProtocol : public Protocol {
 public:
  ConstantProtocol(std::shared_ptr<const PartitionedProblem> problem, std::size_t players, int value);
  std::string name() const override { return "constant"; }
  bool balanced() const override { return true; }
  std::uint64_t worst_case_bits() const override { return 0; }
  CoordinatorStep coordinator(std::size_t, const std::vector<std::vector<std::string>>&, RandomTape&) const override;
  std::string player(std::size_t, std::size_t, Element, const std::vector<std::string>&, RandomTape&) const override;

 private:
  int value_;
};

// Every player sends its encoded input; the coordinator multiplies in player
// order and outputs f of the product (kUndefinedOutput off dom f).
class SendEverything : public Protocol {
 public:
  SendEverything(std::shared_ptr<const PartitionedProblem> problem, std::size_t players);
  std::string name() const override { return "send-everything"; }
  bool balanced() const override { return true; }
  std::uint64_t worst_case_bits() const override;
  CoordinatorStep coordinator(std::size_t round, const std::vector<std::vector<std::string>>& received,
                              RandomTape& tape) const override;
  std::string player(std::size_t round, std::size_t j, Element input, const std::vector<std::string>& received,
                     RandomTape& tape) const override;

 protected:
  virtual std::string payload(std::size_t j, Element input) const;
  virtual Element unpack(std::size_t j, const std::string& bits) const;
  virtual int finish(int value, const std::vector<Element>& inputs, RandomTape& tape) const;
};

// Player 1 appends `extra` padding bits to its input.
class LeaderHeavy : public SendEverything {
 public:
  LeaderHeavy(std::shared_ptr<const PartitionedProblem> problem, std::size_t players, std::size_t extra);
  std::string name() const override { return "leader-heavy"; }
  bool balanced() const override { return extra_ == 0; }
  std::uint64_t worst_case_bits() const override { return SendEverything::worst_case_bits() + extra_; }

 protected:
  std::string payload(std::size_t j, Element input) const override;
  Element unpack(std::size_t j, const std::string& bits) const override;

 private:
  std::size_t extra_;
};

// A player holding the identity sends "0"; others send "1" and the input.
class SkipIdentity : public SendEverything {
 public:
  using SendEverything::SendEverything;
  std::string name() const override { return "skip-identity"; }
  bool balanced() const override { return false; }
  std::uint64_t worst_case_bits() const override { return SendEverything::worst_case_bits() + players_; }

 protected:
  std::string payload(std::size_t j, Element input) const override;
  Element unpack(std::size_t j, const std::string& bits) const override;
};

// Send-everything whose defined 0/1 outputs flip with probability delta, read from the tape.
class NoisyOutput : public SendEverything {
 public:
  NoisyOutput(std::shared_ptr<const PartitionedProblem> problem, std::size_t players, double delta);
  std::string name() const override { return "noisy-output"; }
  bool deterministic() const override { return delta_ == 0.0; }

 protected:
  int finish(int value, const std::vector<Element>& inputs, RandomTape& tape) const override;

 private:
  double delta_;
};

// Two-player send-everything that answers wrongly on a fixed set of inputs.
class ErrorSetProtocol : public SendEverything {
 public:
  ErrorSetProtocol(std::shared_ptr<const PartitionedProblem> problem, std::set<InputPair> errors);
  std::string name() const override { return "error-set"; }
  const std::set<InputPair>& errors() const { return errors_; }

 protected:
  int finish(int value, const std::vector<Element>& inputs, RandomTape& tape) const override;

 private:
  std::set<InputPair> errors_;
};

// The first floor(|I(f)| nu_error |pre(G_i)|) pairs of pre(G_i) in a seeded random
// order, so that the class carries nu-error at most nu_error under uniform
// class weights over I(f).
std::set<InputPair> error_set_in_class(const PartitionedProblem& problem, std::size_t cls, double nu_error,
                                       std::uint64_t seed);

}  // namespace fpcomm::multiparty
