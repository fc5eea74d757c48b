#include "fpcomm/multiparty/problem.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "fpcomm/errors.hpp"
#include "fpcomm/ff/matrix.hpp"

namespace fpcomm::multiparty {

PartitionedProblem::PartitionedProblem(std::string name, std::string params, GroupPtr group,
                                       std::vector<ProblemClass> classes, Classifier classify,
                                       const Limits& limits)
    : name_(std::move(name)), params_(std::move(params)), group_(std::move(group)), classify_(std::move(classify)) {
  if (classes.empty()) throw InvalidArgument("partitioned problem: no classes");
  remap_.resize(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) remap_[i] = i;
  if (group_->size() > limits.group_elements) {
    classes_ = std::move(classes);
    return;
  }
  std::vector<std::vector<Element>> raw(classes.size());
  for (Element z = 0; z < group_->size(); ++z) {
    const std::size_t c = classify_(z);
    if (c >= classes.size()) throw InvalidArgument("partitioned problem: classifier out of range");
    raw[c].push_back(z);
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (raw[i].empty()) continue;
    remap_[i] = classes_.size();
    classes[i].size = raw[i].size();
    classes_.push_back(std::move(classes[i]));
    members_.push_back(std::move(raw[i]));
  }
}

std::size_t PartitionedProblem::class_of(Element z) const { return remap_.at(classify_(z)); }

std::vector<std::size_t> PartitionedProblem::defined_classes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].value) out.push_back(i);
  }
  return out;
}

const std::vector<Element>& PartitionedProblem::members(std::size_t i) const {
  if (members_.empty()) throw SizeLimit(name_ + ": group too large to enumerate classes");
  return members_.at(i);
}

std::uint64_t PartitionedProblem::preimage_size(std::size_t i) const {
  if (members_.empty()) throw SizeLimit(name_ + ": group too large to enumerate classes");
  return group_->size() * classes_.at(i).size;
}

PartitionedProblem rank_problem(std::size_t n, std::uint32_t p, const Limits& limits) {
  auto g = std::make_shared<MatrixAdditiveGroup>(n, p);
  auto classify = [g, n](Element z) -> std::size_t {
    const std::size_t r = ff::mat_rank(g->matrix(z));
    return r == n ? 0 : (r + 1 == n ? 1 : 2);
  };
  std::vector<ProblemClass> classes{{"rank " + std::to_string(n), 1},
                                    {"rank " + std::to_string(n - 1), 0},
                                    {"rank <= " + std::to_string(n >= 2 ? n - 2 : 0), std::nullopt}};
  return PartitionedProblem("rank", "n=" + std::to_string(n) + ",p=" + std::to_string(p), g, std::move(classes),
                            classify, limits);
}

PartitionedProblem ham_problem(std::size_t n, std::size_t k, const Limits& limits) {
  if (k + 2 > n) throw InvalidArgument("ham_problem: need k + 2 <= n");
  auto g = std::make_shared<BitVectorGroup>(n);
  auto classify = [k](Element z) -> std::size_t {
    const auto w = static_cast<std::size_t>(std::popcount(z));
    return w == k ? 0 : (w == k + 2 ? 1 : 2);
  };
  std::vector<ProblemClass> classes{{"weight " + std::to_string(k), 1},
                                    {"weight " + std::to_string(k + 2), 0},
                                    {"other weights", std::nullopt}};
  return PartitionedProblem("ham", "n=" + std::to_string(n) + ",k=" + std::to_string(k), g, std::move(classes),
                            classify, limits);
}

PartitionedProblem ipprime_problem(std::size_t n, std::uint32_t p, const Limits& limits) {
  auto g = std::make_shared<UnitVectorGroup>(n, p);
  auto classify = [g](Element z) -> std::size_t {
    std::uint64_t sum = 0;
    for (auto v : g->values(z)) sum += v;
    sum %= g->p();
    return sum == 0 ? 0 : (sum == 1 ? 1 : 2);
  };
  std::vector<ProblemClass> classes{{"sum 0", 1}, {"sum 1", 0}, {"other sums", std::nullopt}};
  return PartitionedProblem("ipprime", "n=" + std::to_string(n) + ",p=" + std::to_string(p), g, std::move(classes),
                            classify, limits);
}

PartitionedProblem cycle_problem(std::size_t n, const Limits& limits) {
  auto g = std::make_shared<SymmetricGroup>(n);
  auto classify = [n](Element z) -> std::size_t {
    return cycle_type(perm_from_index(z, n)).front() == n ? 0 : 1;
  };
  std::vector<ProblemClass> classes{{"n-cycles", 1}, {"not n-cycles", 0}};
  return PartitionedProblem("cycle", "n=" + std::to_string(n), g, std::move(classes), classify, limits);
}

namespace {

void partitions(std::size_t rest, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t part = std::min(rest, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(rest - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

PartitionedProblem cycle_type_problem(std::size_t n, const Limits& limits) {
  auto g = std::make_shared<SymmetricGroup>(n);
  std::vector<std::vector<std::size_t>> types;
  std::vector<std::size_t> cur;
  partitions(n, n, cur, types);
  auto lookup = std::make_shared<std::map<std::vector<std::size_t>, std::size_t>>();
  std::vector<ProblemClass> classes;
  for (std::size_t i = 0; i < types.size(); ++i) {
    (*lookup)[types[i]] = i;
    std::string label = "type ";
    for (std::size_t k = 0; k < types[i].size(); ++k) label += (k ? "+" : "") + std::to_string(types[i][k]);
    classes.push_back({label, static_cast<int>(i)});
  }
  auto classify = [n, lookup](Element z) -> std::size_t { return lookup->at(cycle_type(perm_from_index(z, n))); };
  return PartitionedProblem("cycle-types", "n=" + std::to_string(n), g, std::move(classes), classify, limits);
}

PartitionedProblem builtin_problem(const std::string& name, std::size_t n, std::uint32_t p, std::size_t k,
                                   const Limits& limits) {
  if (name == "rank") return rank_problem(n, p, limits);
  if (name == "ham") return ham_problem(n, k, limits);
  if (name == "ipprime") return ipprime_problem(n, p, limits);
  if (name == "cycle") return cycle_problem(n, limits);
  if (name == "cycle-types") return cycle_type_problem(n, limits);
  throw InvalidArgument("unknown problem '" + name + "'");
}

std::vector<std::string> builtin_problem_names() { return {"rank", "ham", "ipprime", "cycle", "cycle-types"}; }

}  // namespace fpcomm::multiparty
