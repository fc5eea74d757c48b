#include "fpcomm/multiparty/uniformize.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>

#include "fpcomm/errors.hpp"
#include "fpcomm/ff/matrix.hpp"

namespace fpcomm::multiparty {

namespace {

std::shared_ptr<std::vector<ff::FpMatrix>> general_linear(std::size_t n, std::uint32_t p, const Limits& limits) {
  const ff::PrimeField field(p);
  const MatrixAdditiveGroup g(n, p);
  if (g.size() > limits.group_elements) throw SizeLimit("GL_n enumeration exceeds the group element cap");
  auto out = std::make_shared<std::vector<ff::FpMatrix>>();
  for (Element z = 0; z < g.size(); ++z) {
    ff::FpMatrix m = g.matrix(z);
    if (ff::mat_rank(m) == n) out->push_back(std::move(m));
  }
  return out;
}

// Moves coordinate i to position s(i).
template <typename T>
std::vector<T> permute(const Perm& s, const std::vector<T>& v) {
  std::vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[s[i]] = v[i];
  return out;
}

}  // namespace

UniformizerFamily rank_left_family(std::size_t n, std::uint32_t p, const Limits& limits) {
  auto gl = general_linear(n, p, limits);
  auto g = std::make_shared<MatrixAdditiveGroup>(n, p);
  const std::uint64_t count = gl->size();
  return {"rank-left", g->name(), count * g->size(), [gl, g, count](std::uint64_t index, Element g1, Element g2) {
            const ff::FpMatrix& a = (*gl)[index % count];
            const ff::FpMatrix b = g->matrix(index / count);
            return InputPair{(a * (g->matrix(g1) - b)).to_index(), (a * (g->matrix(g2) + b)).to_index()};
          }};
}

UniformizerFamily rank_two_sided_family(std::size_t n, std::uint32_t p, const Limits& limits) {
  auto gl = general_linear(n, p, limits);
  auto g = std::make_shared<MatrixAdditiveGroup>(n, p);
  const std::uint64_t count = gl->size();
  return {"rank-two-sided", g->name(), count * count * g->size(),
          [gl, g, count](std::uint64_t index, Element g1, Element g2) {
            const ff::FpMatrix& a = (*gl)[index % count];
            const ff::FpMatrix& c = (*gl)[(index / count) % count];
            const ff::FpMatrix b = g->matrix(index / (count * count));
            return InputPair{(a * (g->matrix(g1) - b) * c).to_index(), (a * (g->matrix(g2) + b) * c).to_index()};
          }};
}

UniformizerFamily ham_family(std::size_t n) {
  const BitVectorGroup g(n);
  const std::uint64_t shifts = g.size();
  auto move_bits = [n](const Perm& s, Element v) {
    Element out = 0;
    for (std::size_t i = 0; i < n; ++i) out |= ((v >> i) & 1U) << s[i];
    return out;
  };
  return {"ham", g.name(), factorial(n) * shifts, [n, shifts, move_bits](std::uint64_t index, Element g1, Element g2) {
            const Element b = index % shifts;
            const Perm s = perm_from_index(index / shifts, n);
            return InputPair{move_bits(s, g1 ^ b), move_bits(s, g2 ^ b)};
          }};
}

UniformizerFamily cycle_conjugation_family(std::size_t n) {
  const SymmetricGroup g(n);
  const std::uint64_t order = g.size();
  return {"cycle-conjugation", g.name(), order * order, [n, order](std::uint64_t index, Element g1, Element g2) {
            const Perm s = perm_from_index(index % order, n);
            const Perm t = perm_from_index(index / order, n);
            const Perm a = compose(compose(invert(s), perm_from_index(g1, n)), invert(t));
            const Perm b = compose(compose(t, perm_from_index(g2, n)), s);
            return InputPair{perm_index(a), perm_index(b)};
          }};
}

UniformizerFamily ipprime_family(std::size_t n, std::uint32_t p) {
  auto g = std::make_shared<UnitVectorGroup>(n, p);
  const std::uint64_t scalings = g->size();
  return {"ipprime", g->name(), factorial(n) * scalings, [g, n, scalings](std::uint64_t index, Element g1, Element g2) {
            const Element c = index % scalings;
            const Perm s = perm_from_index(index / scalings, n);
            const auto a = permute(s, g->values(g->op(g1, c)));
            const auto b = permute(s, g->values(g->op(g2, g->inverse(c))));
            return InputPair{g->from_values(a), g->from_values(b)};
          }};
}

UniformizerFamily builtin_family(const std::string& name, std::size_t n, std::uint32_t p, const Limits& limits) {
  if (name == "rank-left") return rank_left_family(n, p, limits);
  if (name == "rank-two-sided") return rank_two_sided_family(n, p, limits);
  if (name == "ham") return ham_family(n);
  if (name == "cycle-conjugation") return cycle_conjugation_family(n);
  if (name == "ipprime") return ipprime_family(n, p);
  throw InvalidArgument("unknown family '" + name + "'");
}

std::vector<std::string> builtin_family_names() {
  return {"rank-left", "rank-two-sided", "ham", "cycle-conjugation", "ipprime"};
}

std::string default_family(const std::string& problem) {
  if (problem == "rank") return "rank-left";
  if (problem == "ham") return "ham";
  if (problem == "ipprime") return "ipprime";
  if (problem == "cycle" || problem == "cycle-types") return "cycle-conjugation";
  throw InvalidArgument("unknown problem '" + problem + "'");
}

UniformityReport verify_uniformizing(const PartitionedProblem& problem, const UniformizerFamily& family,
                                     const Limits& limits) {
  const Group& g = problem.group();
  if (family.group != g.name()) {
    throw InvalidArgument("verify_uniformizing: family acts on " + family.group + ", problem lives on " + g.name());
  }
  const std::uint64_t order = g.size();
  if (order > limits.group_elements || order * order > limits.exact_checks ||
      family.size > limits.exact_checks / (order * order)) {
    throw SizeLimit("verify_uniformizing: |G|^2 |H| exceeds the exact check cap");
  }

  UniformityReport report{problem.name(), problem.params(), family.name, family.size};
  const BigInt H = family.size;
  for (std::size_t i : problem.defined_classes()) {
    // Every pair of pre(G_i), with its position.
    std::vector<InputPair> pre;
    std::unordered_map<std::uint64_t, std::uint32_t> position;
    for (Element g1 = 0; g1 < order; ++g1) {
      const Element g1inv = g.inverse(g1);
      for (Element z : problem.members(i)) {
        const Element g2 = g.op(g1inv, z);
        position.emplace(g1 * order + g2, static_cast<std::uint32_t>(pre.size()));
        pre.emplace_back(g1, g2);
      }
    }
    ClassUniformity cls{problem.classes()[i].label, pre.size()};
    const BigInt P = pre.size();

    std::vector<std::uint64_t> counts(pre.size());
    for (const InputPair& in : pre) {
      std::fill(counts.begin(), counts.end(), 0);
      std::uint64_t outside = 0;
      for (std::uint64_t h = 0; h < family.size; ++h) {
        const auto [a, b] = family.apply(h, in.first, in.second);
        const auto it = position.find(a * order + b);
        if (it == position.end()) {
          ++outside;
        } else {
          ++counts[it->second];
        }
      }
      // TV = (sum_e |c_e P - H| + outside P) / (2 H P).
      BigInt num = BigInt(outside) * P;
      for (std::uint64_t c : counts) {
        const BigInt d = BigInt(c) * P - H;
        num += d < 0 ? BigInt(-d) : d;
      }
      const Rational tv(num, 2 * H * P);
      if (tv > cls.maxTVDeviation) cls.maxTVDeviation = tv;
      if (tv > report.maxTVDeviation) {
        report.maxTVDeviation = tv;
        report.worstInput = in;
      }
    }

    std::vector<bool> hit(pre.size());
    for (std::uint64_t h = 0; h < family.size && cls.bijective; ++h) {
      std::fill(hit.begin(), hit.end(), false);
      for (const InputPair& in : pre) {
        const auto [a, b] = family.apply(h, in.first, in.second);
        const auto it = position.find(a * order + b);
        if (it == position.end() || hit[it->second]) {
          cls.bijective = false;
          break;
        }
        hit[it->second] = true;
      }
    }
    report.bijective = report.bijective && cls.bijective;
    report.inputPairs += pre.size();
    report.classes.push_back(std::move(cls));
  }
  report.pass = report.maxTVDeviation == 0;
  return report;
}

nlohmann::json to_json(const UniformityReport& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : r.classes) {
    classes.push_back({{"label", c.label},
                       {"preimageSize", c.preimageSize},
                       {"maxTVDeviation", to_double(c.maxTVDeviation)},
                       {"maxTVDeviationExact", to_string(c.maxTVDeviation)},
                       {"bijective", c.bijective}});
  }
  return {{"problem", r.problem},
          {"params", r.params},
          {"family", r.family},
          {"familySize", r.familySize},
          {"inputPairs", r.inputPairs},
          {"maxTVDeviation", to_double(r.maxTVDeviation)},
          {"maxTVDeviationExact", to_string(r.maxTVDeviation)},
          {"worstInput", {r.worstInput.first, r.worstInput.second}},
          {"bijective", r.bijective},
          {"classes", classes},
          {"pass", r.pass}};
}

}  // namespace fpcomm::multiparty
