#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fpcomm/limits.hpp"
#include "fpcomm/multiparty/problem.hpp"
#include "fpcomm/numeric.hpp"
#include "json.hpp"

namespace fpcomm::multiparty {

using InputPair = std::pair<Element, Element>;

// Indexed family H of maps G x G -> G x G. Each map must act on g1 and g2
// separately so both parties can apply it with shared coins.
struct UniformizerFamily {
  std::string name;
  std::string group;  // Group::name() it acts on
  std::uint64_t size = 0;
  std::function<InputPair(std::uint64_t index, Element g1, Element g2)> apply;
};

// (a(g1 - b), a(g2 + b)) for a in GL_n, b in M_n.
UniformizerFamily rank_left_family(std::size_t n, std::uint32_t p, const Limits& limits = {});
// (a(g1 - b)c, a(g2 + b)c) for a, c in GL_n, b in M_n.
UniformizerFamily rank_two_sided_family(std::size_t n, std::uint32_t p, const Limits& limits = {});
// (s(g1 + b), s(g2 + b)) for a coordinate permutation s and b in F_2^n.
UniformizerFamily ham_family(std::size_t n);
// (s^-1 g1 t^-1, t g2 s) for s, t in S_n.
UniformizerFamily cycle_conjugation_family(std::size_t n);
// (s(g1 c), s(g2 c^-1)) for a coordinate permutation s and c in (F_p^*)^n.
UniformizerFamily ipprime_family(std::size_t n, std::uint32_t p);

// Lookup by name: rank-left, rank-two-sided, ham, cycle-conjugation, ipprime.
UniformizerFamily builtin_family(const std::string& name, std::size_t n, std::uint32_t p, const Limits& limits = {});
std::vector<std::string> builtin_family_names();
// The family shipped with each builtin problem.
std::string default_family(const std::string& problem);

struct ClassUniformity {
  std::string label;
  std::uint64_t preimageSize = 0;
  Rational maxTVDeviation = 0;
  bool bijective = true;
};

struct UniformityReport {
  std::string problem;
  std::string params;
  std::string family;
  std::uint64_t familySize = 0;
  std::uint64_t inputPairs = 0;
  Rational maxTVDeviation = 0;
  InputPair worstInput{0, 0};
  bool bijective = true;
  bool pass = false;
  std::vector<ClassUniformity> classes{};
};

// For every i in I(f) and every input in pre(G_i), the exact total-variation
// distance between h(input) for uniform h in H and the uniform law on pre(G_i).
// Passes when every distance is zero. Throws SizeLimit when
// |G|^2 |H| > limits.exact_checks, InvalidArgument on a group mismatch.
UniformityReport verify_uniformizing(const PartitionedProblem& problem, const UniformizerFamily& family,
                                     const Limits& limits = {});

nlohmann::json to_json(const UniformityReport& r);

}  // namespace fpcomm::multiparty
