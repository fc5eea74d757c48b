#include "fpcomm/multiparty/sampling.hpp"

#include <numeric>

#include "fpcomm/errors.hpp"

namespace fpcomm::multiparty {

namespace {

std::size_t pick_class(const PartitionedProblem& problem, Rng& rng, const ClassWeights& weights) {
  const auto defined = problem.defined_classes();
  if (defined.empty()) throw InvalidArgument("sub-uniform sampling: f is nowhere defined");
  if (weights.empty()) return defined[uniform_below(rng, defined.size())];
  if (weights.size() != defined.size()) throw DimensionMismatch("sub-uniform sampling: one weight per class in I(f)");
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  return defined[pick(rng)];
}

Element member(const PartitionedProblem& problem, std::size_t i, Rng& rng) {
  if (problem.enumerable()) {
    const auto& m = problem.members(i);
    return m[uniform_below(rng, m.size())];
  }
  for (std::uint64_t attempt = 0; attempt < 100'000'000ULL; ++attempt) {
    const Element z = problem.group().random(rng);
    if (problem.class_of(z) == i) return z;
  }
  throw SizeLimit("sub-uniform sampling: rejection sampling found no class member");
}

}  // namespace

Element product(const Group& g, const std::vector<Element>& xs) {
  Element acc = g.identity();
  for (Element x : xs) acc = g.op(acc, x);
  return acc;
}

InputPair sample_subuniform(const PartitionedProblem& problem, Rng& rng, const ClassWeights& weights) {
  const auto xs = sample_subuniform_s(problem, 2, rng, weights);
  return {xs[0], xs[1]};
}

std::vector<Element> sample_subuniform_s(const PartitionedProblem& problem, std::size_t s, Rng& rng,
                                         const ClassWeights& weights) {
  if (s < 2) throw InvalidArgument("sub-uniform sampling: need at least two players");
  const Group& g = problem.group();
  const std::size_t i = pick_class(problem, rng, weights);
  std::vector<Element> xs(s);
  for (std::size_t k = 0; k + 1 < s; ++k) xs[k] = g.random(rng);
  const Element z = member(problem, i, rng);
  xs[s - 1] = g.op(g.inverse(product(g, {xs.begin(), xs.end() - 1})), z);
  return xs;
}

TupleLaw subuniform_law(const PartitionedProblem& problem, std::size_t s, const std::vector<Rational>& weights,
                        const Limits& limits) {
  if (s < 2) throw InvalidArgument("subuniform_law: need at least two players");
  const Group& g = problem.group();
  const auto defined = problem.defined_classes();
  std::vector<Rational> w = weights;
  if (w.empty()) w.assign(defined.size(), Rational(1, static_cast<long>(defined.size())));
  if (w.size() != defined.size()) throw DimensionMismatch("subuniform_law: one weight per class in I(f)");

  std::uint64_t tuples = 1;
  for (std::size_t k = 0; k < s; ++k) {
    if (tuples > limits.exact_checks / g.size()) throw SizeLimit("subuniform_law: |G|^s exceeds the cap");
    tuples *= g.size();
  }
  TupleLaw law;
  for (std::size_t c = 0; c < defined.size(); ++c) {
    const std::size_t i = defined[c];
    // Uniform over the |G|^(s-1) |G_i| tuples whose product lies in G_i.
    const Rational mass = w[c] / Rational(BigInt(tuples / g.size()) * problem.classes()[i].size);
    std::vector<Element> xs(s, 0);
    for (std::uint64_t code = 0; code < tuples / g.size(); ++code) {
      std::uint64_t rest = code;
      for (std::size_t k = 0; k + 1 < s; ++k) {
        xs[k] = rest % g.size();
        rest /= g.size();
      }
      const Element prefix_inv = g.inverse(product(g, {xs.begin(), xs.end() - 1}));
      for (Element z : problem.members(i)) {
        xs[s - 1] = g.op(prefix_inv, z);
        law[xs] += mass;
      }
    }
  }
  return law;
}

}  // namespace fpcomm::multiparty
