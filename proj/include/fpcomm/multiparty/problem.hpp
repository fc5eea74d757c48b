#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fpcomm/limits.hpp"
#include "fpcomm/multiparty/group.hpp"

namespace fpcomm::multiparty {

struct ProblemClass {
  std::string label;
  std::optional<int> value;  // f on the class; nullopt when undefined there
  std::uint64_t size = 0;    // 0 when the group was too large to enumerate
};

// A partial function f on a finite group G together with the coarsest
// partition G_1, ..., G_k on which f is constant. Classes inside dom f make
// up I(f). Two-party input (g1, g2) lies in pre(G_i) when g1 g2 is in G_i.
class PartitionedProblem {
 public:
  using Classifier = std::function<std::size_t(Element)>;

  // Empty classes are dropped when G can be enumerated under limits.group_elements.
  PartitionedProblem(std::string name, std::string params, GroupPtr group, std::vector<ProblemClass> classes,
                     Classifier classify, const Limits& limits = {});

  const std::string& name() const { return name_; }
  const std::string& params() const { return params_; }
  const Group& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  const std::vector<ProblemClass>& classes() const { return classes_; }
  std::size_t class_of(Element z) const;
  std::optional<int> value(Element z) const { return classes_[class_of(z)].value; }
  std::vector<std::size_t> defined_classes() const;  // I(f), 0-based
  bool enumerable() const { return !members_.empty(); }
  // Elements of G_i; throws SizeLimit when G was not enumerated.
  const std::vector<Element>& members(std::size_t i) const;
  // |pre(G_i)| = |G| |G_i|.
  std::uint64_t preimage_size(std::size_t i) const;

 private:
  std::string name_;
  std::string params_;
  GroupPtr group_;
  std::vector<ProblemClass> classes_;
  std::vector<std::size_t> remap_;
  Classifier classify_;
  std::vector<std::vector<Element>> members_;
};

// Rank over M_n(F_p): G_1 = full rank (f = 1), G_2 = rank n-1 (f = 0), rest undefined.
PartitionedProblem rank_problem(std::size_t n, std::uint32_t p, const Limits& limits = {});
// Ham over F_2^n: weight k (f = 1), weight k+2 (f = 0), rest undefined.
PartitionedProblem ham_problem(std::size_t n, std::size_t k, const Limits& limits = {});
// IP' over ((F_p^*)^n, .): coordinate sum 0 (f = 1), sum 1 (f = 0), rest undefined.
PartitionedProblem ipprime_problem(std::size_t n, std::uint32_t p, const Limits& limits = {});
// Cycle over S_n: n-cycles (f = 1), everything else (f = 0).
PartitionedProblem cycle_problem(std::size_t n, const Limits& limits = {});
// f = cycle type of the product; one class per conjugacy class of S_n.
PartitionedProblem cycle_type_problem(std::size_t n, const Limits& limits = {});

// Lookup by name: rank (n, p), ham (n, k), ipprime (n, p), cycle (n), cycle-types (n).
// Throws InvalidArgument for an unknown name.
PartitionedProblem builtin_problem(const std::string& name, std::size_t n, std::uint32_t p, std::size_t k,
                                   const Limits& limits = {});
std::vector<std::string> builtin_problem_names();

}  // namespace fpcomm::multiparty
