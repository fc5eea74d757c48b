#include "fpcomm/multiparty/simulate.hpp"

#include <cmath>

#include "fpcomm/errors.hpp"

namespace fpcomm::multiparty {

namespace {

std::vector<double> class_weights(const PartitionedProblem& problem, const ClassWeights& weights) {
  const std::size_t k = problem.defined_classes().size();
  if (k == 0) throw InvalidArgument("f is nowhere defined");
  if (weights.empty()) return std::vector<double>(k, 1.0 / static_cast<double>(k));
  if (weights.size() != k) throw DimensionMismatch("one weight per class in I(f)");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw InvalidArgument("class weights must be nonnegative");
    total += w;
  }
  if (!(total > 0.0)) throw InvalidArgument("class weights sum to zero");
  std::vector<double> out(weights);
  for (double& w : out) w /= total;
  return out;
}

std::vector<InputPair> preimage(const PartitionedProblem& problem, std::size_t cls) {
  const Group& g = problem.group();
  std::vector<InputPair> pre;
  for (Element g1 = 0; g1 < g.size(); ++g1) {
    const Element inv = g.inverse(g1);
    for (Element z : problem.members(cls)) pre.emplace_back(g1, g.op(inv, z));
  }
  return pre;
}

void require_two_players(const Protocol& p) {
  if (p.players() != 2) throw InvalidArgument(p.name() + ": expected a two-player protocol");
}

// Alice's shares for player j (1-based): cyclic product from j+1 to j-1 equals g1.
std::vector<Element> arrange_shares(const Group& g, std::size_t s, std::size_t j, Element g1, Element g2,
                                    const std::vector<Element>& free) {
  std::vector<Element> xs(s);
  xs[j - 1] = g2;
  Element acc = g.identity();
  std::size_t pos = j % s;  // 0-based index of player j+1
  for (std::size_t k = 0; k + 2 < s; ++k) {
    xs[pos] = free[k];
    acc = g.op(acc, free[k]);
    pos = (pos + 1) % s;
  }
  xs[pos] = g.op(g.inverse(acc), g1);
  return xs;
}

}  // namespace

bool correct_output(const PartitionedProblem& problem, const std::vector<Element>& inputs, int output) {
  const auto v = problem.value(product(problem.group(), inputs));
  return v && *v == output;
}

RerandomizeRun rerandomize(const UniformizerFamily& family, const Protocol& base, Element g1, Element g2,
                           RandomTape& tape) {
  require_two_players(base);
  if (family.group != base.problem().group().name()) throw InvalidArgument("rerandomize: family and protocol groups differ");
  RerandomizeRun run;
  run.familyIndex = tape.below(family.size);
  run.mapped = family.apply(run.familyIndex, g1, g2);
  run.transcript = run_coordinator(base, {run.mapped.first, run.mapped.second}, tape);
  run.output = *run.transcript.output;
  return run;
}

RerandomizeReport certify_rerandomized(const PartitionedProblem& problem, const UniformizerFamily& family,
                                       const Protocol& base, std::uint64_t trials, std::uint64_t seed,
                                       const ClassWeights& weights) {
  if (trials == 0) throw InvalidArgument("certify_rerandomized: trials must be positive");
  const auto w = class_weights(problem, weights);
  const auto defined = problem.defined_classes();
  RerandomizeReport r{problem.name(), family.name, base.name(), trials, seed};

  std::uint64_t k = 0;
  double error_sum = 0.0;
  for (std::size_t c = 0; c < defined.size(); ++c) {
    const auto pre = preimage(problem, defined[c]);
    double base_error = 0.0;
    for (const auto& [g1, g2] : pre) {
      const std::uint64_t runs = base.deterministic() ? 1 : trials;
      Rng stream = make_stream(seed ^ 0x5bd1e995ULL, k);
      std::uint64_t wrong = 0;
      for (std::uint64_t t = 0; t < runs; ++t) {
        RandomTape tape(stream());
        wrong += correct_output(problem, {g1, g2}, *run_coordinator(base, {g1, g2}, tape).output) ? 0 : 1;
      }
      base_error += static_cast<double>(wrong) / static_cast<double>(runs);

      Rng coins = make_stream(seed, k);
      wrong = 0;
      for (std::uint64_t t = 0; t < trials; ++t) {
        RandomTape tape(coins());
        wrong += correct_output(problem, {g1, g2}, rerandomize(family, base, g1, g2, tape).output) ? 0 : 1;
      }
      const double e = static_cast<double>(wrong) / static_cast<double>(trials);
      error_sum += e;
      if (k == 0 || e > r.worstInputError) {
        r.worstInputError = e;
        r.worstInput = {g1, g2};
      }
      ++k;
    }
    r.baseNuError += w[c] * base_error / static_cast<double>(pre.size());
  }
  r.inputs = k;
  r.meanInputError = error_sum / static_cast<double>(k);
  r.worstInputStderr =
      std::sqrt(r.worstInputError * (1.0 - r.worstInputError) / static_cast<double>(trials));
  r.errorBound = static_cast<double>(defined.size()) * r.baseNuError;
  r.pass = r.worstInputError <= r.errorBound + 3.0 * r.worstInputStderr + 1e-12;
  return r;
}

SymmetrizeRun symmetrize(const Protocol& protocol, Element g1, Element g2, Rng& rng, RandomTape& tape) {
  const Group& g = protocol.problem().group();
  const std::size_t s = protocol.players();
  SymmetrizeRun run;
  run.j = 1 + uniform_below(rng, s);
  std::vector<Element> free(s - 2);
  for (auto& x : free) x = g.random(rng);
  run.shares = arrange_shares(g, s, run.j, g1, g2, free);
  const Transcript t = run_coordinator(protocol, run.shares, tape);
  run.output = *t.output;
  run.bitsCharged = t.bits_with(run.j);
  run.totalBits = t.total_bits();
  return run;
}

SymmetrizeReport estimate_symmetrization(const PartitionedProblem& problem, const Protocol& protocol,
                                         std::uint64_t samples, std::uint64_t seed, const ClassWeights& weights) {
  if (samples < 2) throw InvalidArgument("estimate_symmetrization: need at least two samples");
  SymmetrizeReport r{problem.name(), protocol.name(), protocol.players(), samples, seed};
  r.worstCaseBits = protocol.worst_case_bits();
  r.balanced = protocol.balanced();
  Rng inputs = make_stream(seed, 0);
  Rng alice = make_stream(seed, 1);
  Rng coins = make_stream(seed, 2);
  std::uint64_t sum_charged = 0;
  std::uint64_t sum_total = 0;
  double sum_sq = 0.0;
  for (std::uint64_t t = 0; t < samples; ++t) {
    const auto [g1, g2] = sample_subuniform(problem, inputs, weights);
    RandomTape tape(coins());
    const SymmetrizeRun run = symmetrize(protocol, g1, g2, alice, tape);
    sum_charged += run.bitsCharged;
    sum_total += run.totalBits;
    sum_sq += static_cast<double>(run.bitsCharged) * static_cast<double>(run.bitsCharged);
  }
  const double n = static_cast<double>(samples);
  r.meanCharged = static_cast<double>(sum_charged) / n;
  r.meanTotal = static_cast<double>(sum_total) / n;
  const double var = std::max(0.0, (sum_sq - n * r.meanCharged * r.meanCharged) / (n - 1.0));
  r.stderr_ = std::sqrt(var / n);
  r.exact = sum_charged * protocol.players() == sum_total;
  const double s = static_cast<double>(protocol.players());
  r.pass = r.balanced ? r.exact : r.meanCharged <= static_cast<double>(r.worstCaseBits) / s + 3.0 * r.stderr_;
  return r;
}

TupleLaw symmetrized_law(const PartitionedProblem& problem, std::size_t s, const std::vector<Rational>& weights,
                         const Limits& limits) {
  if (s < 2) throw InvalidArgument("symmetrized_law: need at least two players");
  const Group& g = problem.group();
  const auto defined = problem.defined_classes();
  std::vector<Rational> w = weights;
  if (w.empty()) w.assign(defined.size(), Rational(1, static_cast<long>(defined.size())));
  if (w.size() != defined.size()) throw DimensionMismatch("symmetrized_law: one weight per class in I(f)");

  std::uint64_t free_count = 1;
  for (std::size_t k = 0; k + 2 < s; ++k) {
    if (free_count > limits.exact_checks / g.size()) throw SizeLimit("symmetrized_law: too many share choices");
    free_count *= g.size();
  }
  TupleLaw law;
  for (std::size_t c = 0; c < defined.size(); ++c) {
    const auto pre = preimage(problem, defined[c]);
    if (pre.size() * s > limits.exact_checks / free_count) throw SizeLimit("symmetrized_law: enumeration too large");
    const Rational mass = w[c] / Rational(BigInt(pre.size()) * s * free_count);
    std::vector<Element> free(s - 2);
    for (const auto& [g1, g2] : pre) {
      for (std::size_t j = 1; j <= s; ++j) {
        for (std::uint64_t code = 0; code < free_count; ++code) {
          std::uint64_t rest = code;
          for (auto& x : free) {
            x = rest % g.size();
            rest /= g.size();
          }
          law[arrange_shares(g, s, j, g1, g2, free)] += mass;
        }
      }
    }
  }
  return law;
}

Rational exact_expected_charge(const Protocol& protocol, Element g1, Element g2, const Limits& limits) {
  const Group& g = protocol.problem().group();
  const std::size_t s = protocol.players();
  std::uint64_t free_count = 1;
  for (std::size_t k = 0; k + 2 < s; ++k) {
    if (free_count > limits.exact_checks / g.size()) throw SizeLimit("exact_expected_charge: too many share choices");
    free_count *= g.size();
  }
  BigInt total = 0;
  std::vector<Element> free(s - 2);
  for (std::size_t j = 1; j <= s; ++j) {
    for (std::uint64_t code = 0; code < free_count; ++code) {
      std::uint64_t rest = code;
      for (auto& x : free) {
        x = rest % g.size();
        rest /= g.size();
      }
      RandomTape tape(code);
      total += run_coordinator(protocol, arrange_shares(g, s, j, g1, g2, free), tape).bits_with(j);
    }
  }
  return Rational(total, BigInt(s) * free_count);
}

CoinProtocol rerandomized_runner(UniformizerFamily family, ProtocolPtr base) {
  if (!base) throw InvalidArgument("rerandomized_runner: missing base protocol");
  require_two_players(*base);
  return [family = std::move(family), base = std::move(base)](std::uint64_t coins, Element g1, Element g2) {
    RandomTape tape(coins);
    const RerandomizeRun run = rerandomize(family, *base, g1, g2, tape);
    return CoinRun{run.output, run.transcript.total_bits()};
  };
}

FixingEvaluation evaluate_fixing(const PartitionedProblem& problem, const CoinProtocol& protocol, std::uint64_t coins,
                                 const ClassWeights& weights) {
  const auto w = class_weights(problem, weights);
  const auto defined = problem.defined_classes();
  FixingEvaluation e{coins};
  for (std::size_t c = 0; c < defined.size(); ++c) {
    const auto pre = preimage(problem, defined[c]);
    double wrong = 0.0;
    double bits = 0.0;
    for (const auto& [g1, g2] : pre) {
      const CoinRun run = protocol(coins, g1, g2);
      wrong += correct_output(problem, {g1, g2}, run.output) ? 0.0 : 1.0;
      bits += static_cast<double>(run.bits);
    }
    e.error += w[c] * wrong / static_cast<double>(pre.size());
    e.cost += w[c] * bits / static_cast<double>(pre.size());
  }
  return e;
}

DerandomizeResult markov_derandomize(const PartitionedProblem& problem, const CoinProtocol& protocol, double delta,
                                     std::uint64_t budget, std::uint64_t seed, const ClassWeights& weights,
                                     std::uint64_t pilot) {
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("markov_derandomize: delta must lie in (0, 1)");
  if (budget == 0 || pilot == 0) throw InvalidArgument("markov_derandomize: budget and pilot must be positive");
  DerandomizeResult r;
  r.delta = delta;
  r.pilot = pilot;
  Rng pilot_coins = make_stream(seed, 1);
  double cost_sum = 0.0;
  for (std::uint64_t k = 0; k < pilot; ++k) cost_sum += evaluate_fixing(problem, protocol, pilot_coins(), weights).cost;
  r.expectedCost = cost_sum / static_cast<double>(pilot);

  Rng candidates = make_stream(seed, 0);
  FixingEvaluation best;
  for (std::uint64_t k = 0; k < budget; ++k) {
    const FixingEvaluation e = evaluate_fixing(problem, protocol, candidates(), weights);
    if (k == 0 || e.error < best.error) best = e;
    if (e.error <= 2.0 * delta + 1e-12 && e.cost <= r.expectedCost / delta + 1e-9) {
      r.fixing = e;
      r.samplesUsed = k + 1;
      return r;
    }
  }
  throw BudgetExhausted("markov_derandomize: no fixing met the targets within " + std::to_string(budget) + " samples",
                        best.coins, best.error, best.cost);
}

nlohmann::json to_json(const RerandomizeReport& r) {
  return {{"problem", r.problem},
          {"family", r.family},
          {"protocol", r.protocol},
          {"trials", r.trials},
          {"seed", r.seed},
          {"inputs", r.inputs},
          {"baseNuError", r.baseNuError},
          {"errorBound", r.errorBound},
          {"worstInputError", r.worstInputError},
          {"worstInputStderr", r.worstInputStderr},
          {"worstInput", {r.worstInput.first, r.worstInput.second}},
          {"meanInputError", r.meanInputError},
          {"pass", r.pass}};
}

nlohmann::json to_json(const SymmetrizeReport& r) {
  return {{"problem", r.problem},
          {"protocol", r.protocol},
          {"players", r.players},
          {"samples", r.samples},
          {"seed", r.seed},
          {"meanCharged", r.meanCharged},
          {"stderr", r.stderr_},
          {"meanTotal", r.meanTotal},
          {"worstCaseBits", r.worstCaseBits},
          {"balanced", r.balanced},
          {"exact", r.exact},
          {"pass", r.pass}};
}

nlohmann::json to_json(const DerandomizeResult& r) {
  return {{"coins", r.fixing.coins},
          {"error", r.fixing.error},
          {"cost", r.fixing.cost},
          {"delta", r.delta},
          {"expectedCost", r.expectedCost},
          {"pilot", r.pilot},
          {"samplesUsed", r.samplesUsed}};
}

}  // namespace fpcomm::multiparty
