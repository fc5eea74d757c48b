#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "fpcomm/multiparty/problem.hpp"
#include "fpcomm/multiparty/uniformize.hpp"
#include "fpcomm/numeric.hpp"
#include "fpcomm/random.hpp"

namespace fpcomm::multiparty {

// Class weights over I(f) in the order of defined_classes(); empty means uniform.
using ClassWeights = std::vector<double>;

// Sub-uniform law nu: pick i in I(f) by weight, then (g1, g2) uniform on pre(G_i).
InputPair sample_subuniform(const PartitionedProblem& problem, Rng& rng, const ClassWeights& weights = {});

// nu_s: pick i by weight, x_1..x_{s-1} uniform, x_s = (x_1 ... x_{s-1})^-1 z with
// z uniform on G_i, so the ordered product lies in G_i.
std::vector<Element> sample_subuniform_s(const PartitionedProblem& problem, std::size_t s, Rng& rng,
                                         const ClassWeights& weights = {});

using TupleLaw = std::map<std::vector<Element>, Rational>;

// Exact law of nu_s as tuple -> probability. Rational weights, empty means uniform.
// Throws SizeLimit when |G|^s exceeds limits.exact_checks.
TupleLaw subuniform_law(const PartitionedProblem& problem, std::size_t s, const std::vector<Rational>& weights = {},
                        const Limits& limits = {});

// Ordered product x_1 ... x_k.
Element product(const Group& g, const std::vector<Element>& xs);

}  // namespace fpcomm::multiparty
