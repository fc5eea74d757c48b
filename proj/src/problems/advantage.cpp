#include "fpcomm/problems/advantage.hpp"

#include <cmath>

#include "fpcomm/errors.hpp"

namespace fpcomm::problems {

bool NoisyOracle::answer(bool truth, Rng& rng) const { return coin(rng, delta) ? !truth : truth; }

bool NoisyOracle::claims_zero(const FpMatrix& m, Rng& rng) const {
  if (!m.is_square()) throw DimensionMismatch("oracle: matrix must be square");
  const std::size_t n = m.rows();
  if (ff::mat_rank(m) == n) return answer(ff::mat_inverse(m)(0, 0) == 0, rng);
  const bool block_full = n == 1 || ff::mat_rank(m.block(1, 1, n - 1, n - 1)) == n - 1;
  switch (policy) {
    case OffPromisePolicy::Adversarial: return block_full;
    case OffPromisePolicy::BlockIdentity: return answer(!block_full, rng);
    case OffPromisePolicy::AlwaysZero: return true;
    case OffPromisePolicy::AlwaysNonzero: return false;
  }
  return false;
}

FpMatrix augment(const FpMatrix& a, Rng& rng) {
  if (!a.is_square()) throw DimensionMismatch("augment: matrix must be square");
  const std::size_t m = a.rows();
  FpMatrix a2(a.field(), m + 1, m + 1);
  a2.paste(a, 1, 1);
  a2.paste(FpMatrix::random(a.field(), m, 1, rng), 1, 0);
  a2.paste(FpMatrix::random(a.field(), 1, m + 1, rng), 0, 0);
  return a2;
}

namespace {

void check_rank_promise(const FpMatrix& a) {
  if (!a.is_square() || a.rows() == 0) throw DimensionMismatch("reduction: input must be square and nonempty");
  const std::size_t r = ff::mat_rank(a);
  // Ranks n-1 and n-2 of the (n-1) x (n-1) input.
  if (r + 1 < a.rows()) throw PromiseViolation("reduction: rank(a) outside {n-1, n-2}");
}

}  // namespace

bool reduce_rank_to_inverse(const FpMatrix& a, const NoisyOracle& oracle, Rng& rng) {
  if (a.modulus() == 2) throw InvalidArgument("reduce_rank_to_inverse: p = 2 uses the sandwiched variant");
  check_rank_promise(a);
  return oracle.claims_zero(augment(a, rng), rng);
}

FpMatrix sandwich(const FpMatrix& a2, Rng& rng) {
  const std::size_t n = a2.rows();
  const FpMatrix g1 = ff::random_invertible(a2.field(), n, rng);
  const FpMatrix g2 = ff::random_invertible(a2.field(), n, rng);
  return g1 * a2 * g2;
}

bool reduce_rank_to_inverse_p2(const FpMatrix& a, const NoisyOracle& oracle, Rng& rng) {
  if (a.modulus() != 2) throw InvalidArgument("reduce_rank_to_inverse_p2: needs p = 2");
  check_rank_promise(a);
  return oracle.claims_zero(sandwich(augment(a, rng), rng), rng);
}

std::string to_string(Reduction r) {
  switch (r) {
    case Reduction::Identity: return "identity";
    case Reduction::RankToInverse: return "rank-to-inverse";
    case Reduction::RankToInverseP2: return "rank-to-inverse-p2";
  }
  return "?";
}

std::string to_string(OffPromisePolicy p) {
  switch (p) {
    case OffPromisePolicy::Adversarial: return "adversarial";
    case OffPromisePolicy::BlockIdentity: return "block-identity";
    case OffPromisePolicy::AlwaysZero: return "always-zero";
    case OffPromisePolicy::AlwaysNonzero: return "always-nonzero";
  }
  return "?";
}

namespace {

bool one_trial(Reduction reduction, std::size_t n, std::uint32_t p, std::size_t rank, const NoisyOracle& oracle,
               Rng& rng) {
  const PrimeField field(p);
  const FpMatrix a = ff::random_of_rank(field, n - 1, rank, rng);
  switch (reduction) {
    case Reduction::Identity: return oracle.answer(rank + 2 == n, rng);
    case Reduction::RankToInverse: return reduce_rank_to_inverse(a, oracle, rng);
    case Reduction::RankToInverseP2: return reduce_rank_to_inverse_p2(a, oracle, rng);
  }
  return false;
}

double wald(double q, std::uint64_t trials) { return std::sqrt(q * (1.0 - q) / static_cast<double>(trials)); }

}  // namespace

AdvantageReport estimate_advantage(Reduction reduction, std::size_t n, std::uint32_t p, const NoisyOracle& oracle,
                                   std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw InvalidArgument("estimate_advantage: trials must be positive");
  if (n < 2) throw InvalidArgument("estimate_advantage: n must be at least 2");
  std::uint64_t low = 0;
  std::uint64_t high = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng r0 = make_stream(seed, 2 * t);
    Rng r1 = make_stream(seed, 2 * t + 1);
    low += one_trial(reduction, n, p, n - 1, oracle, r0) ? 1 : 0;
    high += one_trial(reduction, n, p, n - 2, oracle, r1) ? 1 : 0;
  }
  AdvantageReport rep;
  rep.problem = to_string(reduction);
  rep.n = n;
  rep.p = p;
  rep.delta = oracle.delta;
  rep.trials = trials;
  rep.seed = seed;
  rep.policy = to_string(oracle.policy);
  rep.alphaHat = static_cast<double>(low) / static_cast<double>(trials);
  rep.betaHat = static_cast<double>(high) / static_cast<double>(trials);
  rep.gap = rep.betaHat - rep.alphaHat;
  rep.alphaStderr = wald(rep.alphaHat, trials);
  rep.betaStderr = wald(rep.betaHat, trials);
  rep.stderr_ = std::hypot(rep.alphaStderr, rep.betaStderr);
  if (reduction == Reduction::RankToInverseP2) rep.p0Hat = estimate_p0(n, p, oracle, 10'000, derive_seed(seed, ~0ULL));
  return rep;
}

double estimate_p0(std::size_t n, std::uint32_t p, const NoisyOracle& oracle, std::uint64_t samples, std::uint64_t seed) {
  const PrimeField field(p);
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < samples; ++t) {
    Rng rng = make_stream(seed, t);
    hits += oracle.claims_zero(ff::random_of_rank(field, n, n - 1, rng), rng) ? 1 : 0;
  }
  return static_cast<double>(hits) / static_cast<double>(samples);
}

std::uint64_t amplification_repetitions(double gap, double target) {
  if (!(gap > 0.0) || !(target > 0.0 && target < 1.0)) throw InvalidArgument("amplification: need gap > 0, target in (0,1)");
  auto m = static_cast<std::uint64_t>(std::ceil(2.0 * std::log(1.0 / target) / (gap * gap)));
  if (m % 2 == 0) ++m;
  return m;
}

AmplificationReport amplify(Reduction reduction, std::size_t n, std::uint32_t p, const NoisyOracle& oracle,
                            const AdvantageReport& measured, double target, std::uint64_t decisions,
                            std::uint64_t seed) {
  AmplificationReport rep;
  rep.target = target;
  rep.decisions = decisions;
  rep.repetitions = amplification_repetitions(std::abs(measured.gap), target);
  rep.threshold = (measured.alphaHat + measured.betaHat) / 2.0;
  const bool high_claims_more = measured.betaHat > measured.alphaHat;
  std::uint64_t wrong_low = 0;
  std::uint64_t wrong_high = 0;
  std::uint64_t stream = 0;
  for (std::uint64_t d = 0; d < decisions; ++d) {
    for (int side = 0; side < 2; ++side) {
      const std::size_t rank = side == 0 ? n - 1 : n - 2;
      std::uint64_t claims = 0;
      for (std::uint64_t r = 0; r < rep.repetitions; ++r) {
        Rng rng = make_stream(seed, stream++);
        claims += one_trial(reduction, n, p, rank, oracle, rng) ? 1 : 0;
      }
      const double freq = static_cast<double>(claims) / static_cast<double>(rep.repetitions);
      const bool says_high = high_claims_more ? freq > rep.threshold : freq < rep.threshold;
      if (side == 0 && says_high) ++wrong_low;
      if (side == 1 && !says_high) ++wrong_high;
    }
  }
  rep.errorLow = static_cast<double>(wrong_low) / static_cast<double>(decisions);
  rep.errorHigh = static_cast<double>(wrong_high) / static_cast<double>(decisions);
  return rep;
}

nlohmann::json to_json(const AdvantageReport& r) {
  nlohmann::json j = {
      {"problem", r.problem},
      {"n", r.n},
      {"p", r.p},
      {"delta", r.delta},
      {"trials", r.trials},
      {"alphaHat", r.alphaHat},
      {"betaHat", r.betaHat},
      {"stderr", r.stderr_},
      {"seed", r.seed},
      {"policy", r.policy},
      {"gap", r.gap},
      {"alphaStderr", r.alphaStderr},
      {"betaStderr", r.betaStderr},
  };
  if (r.p0Hat >= 0.0) j["p0Hat"] = r.p0Hat;
  return j;
}

nlohmann::json to_json(const AmplificationReport& r) {
  return {{"repetitions", r.repetitions}, {"threshold", r.threshold}, {"decisions", r.decisions},
          {"errorLow", r.errorLow},       {"errorHigh", r.errorHigh}, {"target", r.target}};
}

}  // namespace fpcomm::problems
