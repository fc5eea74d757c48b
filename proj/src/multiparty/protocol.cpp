#include "fpcomm/multiparty/protocol.hpp"

#include <algorithm>
#include <cmath>

#include "fpcomm/errors.hpp"
#include "json.hpp"

namespace fpcomm::multiparty {

std::uint64_t Transcript::total_bits() const {
  std::uint64_t total = 0;
  for (const auto& m : messages) total += m.bits.size();
  return total;
}

std::uint64_t Transcript::bits_with(std::size_t j) const {
  std::uint64_t total = 0;
  for (const auto& m : messages) {
    if (m.from == j || m.to == j) total += m.bits.size();
  }
  return total;
}

std::string Transcript::json_lines() const {
  std::string out;
  for (const auto& m : messages) {
    out += nlohmann::json{{"from", m.from}, {"to", m.to}, {"bits", m.bits}}.dump();
    out += '\n';
  }
  return out;
}

Protocol::Protocol(std::shared_ptr<const PartitionedProblem> problem, std::size_t players)
    : problem_(std::move(problem)), players_(players) {
  if (!problem_) throw InvalidArgument("protocol: missing problem");
  if (players < 2) throw InvalidArgument("protocol: need at least two players");
}

Transcript run_coordinator(const Protocol& protocol, const std::vector<Element>& inputs, RandomTape& tape,
                           std::size_t round_limit) {
  const std::size_t s = protocol.players();
  if (inputs.size() != s) throw DimensionMismatch("run_coordinator: one input per player");
  const std::size_t limit = round_limit == 0 ? protocol.max_rounds() : round_limit;
  Transcript t;
  t.players = s;
  std::vector<std::vector<std::string>> from_players(s);
  std::vector<std::vector<std::string>> to_players(s);
  for (std::size_t round = 0; round <= limit; ++round) {
    CoordinatorStep step = protocol.coordinator(round, from_players, tape);
    if (step.output) {
      t.output = step.output;
      t.rounds = round;
      return t;
    }
    if (round == limit) break;
    if (step.toPlayers.empty()) step.toPlayers.assign(s, "");
    if (step.toPlayers.size() != s) throw DimensionMismatch("run_coordinator: one coordinator message per player");
    for (std::size_t j = 1; j <= s; ++j) {
      if (!step.toPlayers[j - 1].empty()) t.messages.push_back({kCoordinator, j, step.toPlayers[j - 1]});
      to_players[j - 1].push_back(std::move(step.toPlayers[j - 1]));
    }
    for (std::size_t j = 1; j <= s; ++j) {
      std::string reply = protocol.player(round, j, inputs[j - 1], to_players[j - 1], tape);
      if (!reply.empty()) t.messages.push_back({j, kCoordinator, reply});
      from_players[j - 1].push_back(std::move(reply));
    }
  }
  throw RoundLimitExceeded(protocol.name() + ": no output within " + std::to_string(limit) + " rounds");
}

ConstantProtocol::ConstantProtocol(std::shared_ptr<const PartitionedProblem> problem, std::size_t players, int value)
    : Protocol(std::move(problem), players), value_(value) {}

CoordinatorStep ConstantProtocol::coordinator(std::size_t, const std::vector<std::vector<std::string>>&,
                                              RandomTape&) const {
  return {value_, {}};
}

std::string ConstantProtocol::player(std::size_t, std::size_t, Element, const std::vector<std::string>&,
                                     RandomTape&) const {
  return {};
}

SendEverything::SendEverything(std::shared_ptr<const PartitionedProblem> problem, std::size_t players)
    : Protocol(std::move(problem), players) {}

std::uint64_t SendEverything::worst_case_bits() const { return players_ * problem_->group().encoded_bits(); }

CoordinatorStep SendEverything::coordinator(std::size_t round, const std::vector<std::vector<std::string>>& received,
                                            RandomTape& tape) const {
  if (round == 0) return {std::nullopt, std::vector<std::string>(players_)};
  std::vector<Element> inputs(players_);
  for (std::size_t j = 1; j <= players_; ++j) inputs[j - 1] = unpack(j, received[j - 1].at(0));
  const Group& g = problem_->group();
  Element z = g.identity();
  for (Element x : inputs) z = g.op(z, x);
  const auto v = problem_->value(z);
  return {finish(v ? *v : kUndefinedOutput, inputs, tape), {}};
}

std::string SendEverything::player(std::size_t round, std::size_t j, Element input, const std::vector<std::string>&,
                                   RandomTape&) const {
  return round == 0 ? payload(j, input) : std::string{};
}

std::string SendEverything::payload(std::size_t, Element input) const { return problem_->group().encode(input); }

Element SendEverything::unpack(std::size_t, const std::string& bits) const { return problem_->group().decode(bits); }

int SendEverything::finish(int value, const std::vector<Element>&, RandomTape&) const { return value; }

LeaderHeavy::LeaderHeavy(std::shared_ptr<const PartitionedProblem> problem, std::size_t players, std::size_t extra)
    : SendEverything(std::move(problem), players), extra_(extra) {}

std::string LeaderHeavy::payload(std::size_t j, Element input) const {
  std::string bits = problem_->group().encode(input);
  if (j == 1) bits += std::string(extra_, '0');
  return bits;
}

Element LeaderHeavy::unpack(std::size_t j, const std::string& bits) const {
  const std::size_t w = problem_->group().encoded_bits();
  return problem_->group().decode(j == 1 ? bits.substr(0, w) : bits);
}

std::string SkipIdentity::payload(std::size_t, Element input) const {
  const Group& g = problem_->group();
  return input == g.identity() ? std::string("0") : "1" + g.encode(input);
}

Element SkipIdentity::unpack(std::size_t, const std::string& bits) const {
  const Group& g = problem_->group();
  if (bits.empty()) throw InvalidArgument("skip-identity: empty message");
  return bits[0] == '0' ? g.identity() : g.decode(bits.substr(1));
}

NoisyOutput::NoisyOutput(std::shared_ptr<const PartitionedProblem> problem, std::size_t players, double delta)
    : SendEverything(std::move(problem), players), delta_(delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw InvalidArgument("noisy-output: delta must lie in [0, 1]");
}

int NoisyOutput::finish(int value, const std::vector<Element>&, RandomTape& tape) const {
  const bool flip = tape.flip(delta_);
  if (value != 0 && value != 1) return value;
  return flip ? 1 - value : value;
}

ErrorSetProtocol::ErrorSetProtocol(std::shared_ptr<const PartitionedProblem> problem, std::set<InputPair> errors)
    : SendEverything(std::move(problem), 2), errors_(std::move(errors)) {}

int ErrorSetProtocol::finish(int value, const std::vector<Element>& inputs, RandomTape&) const {
  if (!errors_.count({inputs[0], inputs[1]})) return value;
  return value == 0 ? 1 : 0;
}

std::set<InputPair> error_set_in_class(const PartitionedProblem& problem, std::size_t cls, double nu_error,
                                       std::uint64_t seed) {
  const Group& g = problem.group();
  const auto defined = problem.defined_classes();
  if (std::find(defined.begin(), defined.end(), cls) == defined.end()) {
    throw InvalidArgument("error_set_in_class: class is not in I(f)");
  }
  std::vector<InputPair> pre;
  for (Element g1 = 0; g1 < g.size(); ++g1) {
    const Element inv = g.inverse(g1);
    for (Element z : problem.members(cls)) pre.emplace_back(g1, g.op(inv, z));
  }
  Rng rng(seed);
  std::shuffle(pre.begin(), pre.end(), rng);
  // nu(E) = |E| / (|I(f)| |pre(G_i)|).
  const auto count = static_cast<std::size_t>(
      std::floor(nu_error * static_cast<double>(defined.size()) * static_cast<double>(pre.size()) + 1e-9));
  return {pre.begin(), pre.begin() + static_cast<std::ptrdiff_t>(std::min(count, pre.size()))};
}

}  // namespace fpcomm::multiparty
