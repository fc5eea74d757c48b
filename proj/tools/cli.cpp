#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fpcomm/errors.hpp"
#include "fpcomm/ff/counting.hpp"
#include "fpcomm/ff/matrix.hpp"
#include "fpcomm/fourier/spectrum.hpp"
#include "fpcomm/fourier/theta.hpp"
#include "fpcomm/fourier/transform.hpp"
#include "fpcomm/limits.hpp"
#include "fpcomm/multiparty/protocol.hpp"
#include "fpcomm/multiparty/simulate.hpp"
#include "fpcomm/multiparty/uniformize.hpp"
#include "fpcomm/problems/advantage.hpp"
#include "fpcomm/problems/reductions.hpp"
#include "fpcomm/witness/approx_norm.hpp"
#include "fpcomm/witness/certificate.hpp"
#include "json.hpp"

namespace fpcomm::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::size_t n = 0;
  std::uint32_t p = 2;
  std::size_t N = 0;
  std::size_t k = 0;
  std::size_t s = 3;
  std::size_t count = 100;
  std::size_t extra = 0;
  std::size_t cls = 0;
  std::uint64_t budget = 100;
  double delta = 0.1;
  std::string eps;
  std::string problem = "rank";
  std::string family;
  std::string protocol = "send-everything";
  std::string policy = "adversarial";
  std::string from = "rank";
  std::string to = "inverse";
  std::string csv;
  std::optional<std::size_t> thetaN;
};

struct Context {
  Options opt;
  Limits limits;
  Tolerances tol;
};

struct Outcome {
  json results = json::object();
  json verdicts = json::object();
};

// Parameter problems detected by the CLI itself; exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

json big(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max()) return v.convert_to<std::int64_t>();
  return v.str();
}

std::uint64_t need_seed(const Context& ctx) {
  if (!ctx.opt.seed) throw UsageError("this command is randomized and requires --seed");
  return *ctx.opt.seed;
}

std::uint64_t trials_or(const Context& ctx, std::uint64_t fallback) {
  const std::uint64_t t = ctx.opt.trials.value_or(fallback);
  if (t == 0) throw UsageError("--trials must be at least 1");
  return t;
}

// "a/b" or a plain decimal such as 0.25, read exactly.
Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    const std::string frac = text.substr(dot + 1);
    const std::string whole = text.substr(0, dot);
    const bool negative = !whole.empty() && whole[0] == '-';
    BigInt num(whole.empty() || whole == "-" ? std::string("0") : whole);
    if (negative) num = -num;
    const BigInt den = big_pow(10, frac.size());
    num = num * den + (frac.empty() ? BigInt(0) : BigInt(frac));
    return negative ? Rational(-num, den) : Rational(num, den);
  } catch (const std::exception&) {
    throw UsageError("cannot read '" + text + "' as a rational number");
  }
}

void load_config(const std::string& path, Context& ctx) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  const std::map<std::string, std::uint64_t*> caps{{"dft_points", &ctx.limits.dft_points},
                                                  {"spectral_points", &ctx.limits.spectral_points},
                                                  {"lp_points", &ctx.limits.lp_points},
                                                  {"exact_checks", &ctx.limits.exact_checks},
                                                  {"group_elements", &ctx.limits.group_elements}};
  const std::map<std::string, double*> tols{{"transform", &ctx.tol.transform}, {"spectrum", &ctx.tol.spectrum}};
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    auto trim = [](std::string v) {
      const auto b = v.find_first_not_of(" \t\r");
      const auto e = v.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (auto it = caps.find(key); it != caps.end()) {
        *it->second = std::stoull(value);
      } else if (auto jt = tols.find(key); jt != tols.end()) {
        *jt->second = std::stod(value);
        if (!(*jt->second > 0.0)) throw UsageError("tolerances must be positive");
      } else {
        throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": bad value for '" + key + "'");
    }
  }
}

json config_json(const Context& ctx) {
  return {{"seed", ctx.opt.seed ? json(*ctx.opt.seed) : json(nullptr)},
          {"trials", ctx.opt.trials ? json(*ctx.opt.trials) : json(nullptr)},
          {"tolerances", {{"transform", ctx.tol.transform}, {"spectrum", ctx.tol.spectrum}}},
          {"caps",
           {{"dft_points", ctx.limits.dft_points},
            {"spectral_points", ctx.limits.spectral_points},
            {"lp_points", ctx.limits.lp_points},
            {"exact_checks", ctx.limits.exact_checks},
            {"group_elements", ctx.limits.group_elements}}}};
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  body(out);
}

// ---- verify ----------------------------------------------------------------

Outcome verify_fourier(const Context& ctx) {
  const auto& o = ctx.opt;
  const fourier::GroupFunction f = fourier::theta(o.n, o.p, ctx.limits);
  const fourier::FourierTable t = fourier::dft(f, ctx.limits);
  const ff::PrimeField field(o.p);
  double closed_dev = 0.0;
  for (std::uint64_t s = 0; s < t.size(); ++s) {
    const double c = fourier::theta_hat_closed(ff::FpMatrix::from_index(field, o.n, o.n, s));
    closed_dev = std::max(closed_dev, std::abs(t[s] - fourier::Complex(c, 0.0)));
  }
  const double roundtrip = fourier::idft_roundtrip(f, ctx.limits);
  const double parseval = fourier::parseval_gap(f, t);
  const double l1_table = fourier::fourier_l1(t);
  const double l1_closed = fourier::theta_hat_l1_closed(o.n, o.p);
  const double l1_dev = std::abs(l1_table - l1_closed);
  if (!o.csv.empty()) write_file(o.csv, [&](std::ostream& out) { fourier::write_csv(t, out); });

  Outcome r;
  r.results = {{"function", "theta"},
               {"n", o.n},
               {"p", o.p},
               {"points", t.size()},
               {"roundtripError", roundtrip},
               {"parsevalGap", parseval},
               {"closedFormDeviation", closed_dev},
               {"l1Table", l1_table},
               {"l1Closed", l1_closed},
               {"l1Deviation", l1_dev}};
  r.verdicts = {{"roundtrip", roundtrip < ctx.tol.transform},
                {"parseval", parseval < ctx.tol.transform},
                {"closedForm", closed_dev < ctx.tol.transform},
                {"l1", l1_dev < ctx.tol.transform * std::max(1.0, l1_closed)}};
  return r;
}

Outcome verify_spectrum(const Context& ctx) {
  const auto& o = ctx.opt;
  Outcome r;
  double worst = 0.0;
  json cases = json::array();
  if (o.thetaN) {
    const fourier::GroupFunction g = fourier::theta(*o.thetaN, o.p, ctx.limits);
    const auto rep = fourier::verify_spectrum(g, ctx.limits);
    worst = rep.maxDeviation;
    r.results = {{"function", "theta"}, {"n", *o.thetaN}, {"p", o.p}, {"N", g.N}, {"maxDeviation", worst},
                 {"singularValues", rep.singularValues}};
  } else {
    const std::uint64_t seed = need_seed(ctx);
    if (o.count == 0) throw UsageError("--count must be at least 1");
    for (std::size_t c = 0; c < o.count; ++c) {
      Rng rng = make_stream(seed, c);
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      std::vector<fourier::Complex> values(fourier::domain_size(o.p, o.N));
      for (auto& v : values) {
        const double re = u(rng);
        v = {re, u(rng)};
      }
      const auto rep = fourier::verify_spectrum(fourier::GroupFunction::make(o.p, o.N, std::move(values)), ctx.limits);
      worst = std::max(worst, rep.maxDeviation);
      cases.push_back(rep.maxDeviation);
    }
    r.results = {{"function", "random"}, {"p", o.p}, {"N", o.N}, {"count", o.count}, {"maxDeviation", worst},
                 {"deviations", cases}};
  }
  r.verdicts = {{"singularValuesMatch", worst < ctx.tol.spectrum}};
  return r;
}

Outcome verify_census(const Context& ctx) {
  const auto& o = ctx.opt;
  const auto formula = ff::rank_census_formula(o.n, o.p);
  const auto counted = ff::rank_census_enumerated(o.n, o.p, ctx.limits.group_elements);
  json f = json::array();
  json e = json::array();
  for (std::size_t r = 0; r <= o.n; ++r) {
    f.push_back(big(formula.counts[r]));
    e.push_back(big(counted.counts[r]));
  }
  const Rational alpha = ff::rank_ratio_alpha(o.n, o.p);
  const Rational census_alpha(counted.counts[o.n], counted.counts[o.n - 1]);
  if (!o.csv.empty()) {
    write_file(o.csv, [&](std::ostream& out) {
      out << "rank,formula,enumerated\n";
      for (std::size_t r = 0; r <= o.n; ++r) out << r << ',' << formula.counts[r] << ',' << counted.counts[r] << '\n';
    });
  }
  Outcome r;
  r.results = {{"n", o.n},
               {"p", o.p},
               {"formula", f},
               {"enumerated", e},
               {"total", big(counted.total())},
               {"alpha", to_string(alpha)},
               {"censusAlpha", to_string(census_alpha)}};
  r.verdicts = {{"formulaMatchesEnumeration", formula.counts == counted.counts},
                {"totalIsPToNSquared", counted.total() == big_pow(o.p, o.n * o.n)},
                {"alphaMatchesCensus", alpha == census_alpha}};
  return r;
}

Outcome verify_uniformizing(const Context& ctx) {
  const auto& o = ctx.opt;
  const auto problem = multiparty::builtin_problem(o.problem, o.n, o.p, o.k, ctx.limits);
  const std::string family_name = o.family.empty() ? multiparty::default_family(o.problem) : o.family;
  const auto family = multiparty::builtin_family(family_name, o.n, o.p, ctx.limits);
  const auto rep = multiparty::verify_uniformizing(problem, family, ctx.limits);
  Outcome r;
  r.results = multiparty::to_json(rep);
  r.verdicts = {{"zeroDeviation", rep.pass}, {"bijective", rep.bijective}};
  return r;
}

Outcome verify_concat(const Context& ctx) {
  const auto& o = ctx.opt;
  const multiparty::MatrixAdditiveGroup g(o.n, o.p);
  if (g.size() > ctx.limits.group_elements || g.size() * g.size() > ctx.limits.exact_checks) {
    throw SizeLimit("verify concat: p^(2n^2) pairs exceed the exact check cap");
  }
  std::uint64_t pairs = 0;
  std::uint64_t mismatches = 0;
  for (multiparty::Element a = 0; a < g.size(); ++a) {
    const ff::FpMatrix x = g.matrix(a);
    for (multiparty::Element b = 0; b < g.size(); ++b) {
      const ff::FpMatrix y = g.matrix(b);
      const auto c = problems::additive_to_concat(x, y);
      if (problems::concat_rank(c) != ff::mat_rank(x + y) + o.n) ++mismatches;
      ++pairs;
    }
  }
  Outcome r;
  r.results = {{"n", o.n}, {"p", o.p}, {"pairs", pairs}, {"mismatches", mismatches}};
  r.verdicts = {{"concatRankIdentity", mismatches == 0}};
  return r;
}

// ---- certify ---------------------------------------------------------------

Outcome certify_rank(const Context& ctx) {
  const auto& o = ctx.opt;
  if (o.eps.empty()) throw UsageError("certify rank requires --eps");
  const Rational eps = parse_rational(o.eps);
  if (!(eps > 0 && eps < 1)) throw UsageError("--eps must lie in (0, 1)");
  const double eps_d = to_double(eps);
  const witness::WitnessCertificate cert = witness::rank_witness_bound(o.n, o.p, eps_d);
  if (!(cert.bound > 0.0)) {
    throw NonpositiveBound("the rank witness gives a nonpositive bound at n=" + std::to_string(o.n) +
                           ", p=" + std::to_string(o.p) + ", eps=" + o.eps +
                           ": correlation minus outside mass minus eps times ||psi||_1 is not positive");
  }
  const double constant = witness::rank_bound_constant(o.n, o.p, eps_d);
  const witness::BoundReport bound = witness::comm_bound_main_term(cert, o.p, o.n * o.n);

  Outcome r;
  r.results = {{"n", o.n},
               {"p", o.p},
               {"eps", to_string(eps)},
               {"certificate", witness::to_json(cert)},
               {"boundReport", witness::to_json(bound)},
               {"constant", constant}};
  r.verdicts = json::object();
  if (o.p == 2 && o.n >= 10) r.verdicts["constantAbove0.028"] = constant > 0.028;
  if (o.p >= 3) r.verdicts["constantAbove0.08"] = constant > 0.08;

  const bool lp_in_scope =
      o.p == 2 && o.n * o.n < 64 && (std::uint64_t{1} << (o.n * o.n)) <= ctx.limits.lp_points;
  if (lp_in_scope) {
    const auto exact = witness::rank_witness_bound_exact(o.n, 2, eps);
    const auto lp = witness::approx_fourier_l1_exact(witness::rank_sign_function(o.n, 2, ctx.limits), eps, ctx.limits);
    r.results["exactCertificate"] = witness::to_json(exact);
    r.results["lpOptimum"] = to_string(lp.optimum);
    r.results["lpOptimumValue"] = to_double(lp.optimum);
    r.results["tight"] = exact.bound == lp.optimum;
    r.verdicts["weakDuality"] = exact.bound <= lp.optimum;
  } else {
    r.results["lpOptimum"] = nullptr;
  }
  r.verdicts["positiveBound"] = true;
  return r;
}

// ---- simulate --------------------------------------------------------------

problems::OffPromisePolicy parse_policy(const std::string& name) {
  using problems::OffPromisePolicy;
  for (auto p : {OffPromisePolicy::Adversarial, OffPromisePolicy::BlockIdentity, OffPromisePolicy::AlwaysZero,
                 OffPromisePolicy::AlwaysNonzero}) {
    if (problems::to_string(p) == name) return p;
  }
  throw UsageError("unknown policy '" + name + "'");
}

Outcome simulate_reduction(const Context& ctx) {
  const auto& o = ctx.opt;
  if (o.from != "rank" || o.to != "inverse") throw UsageError("only --from rank --to inverse is simulated");
  if (o.n < 2) throw UsageError("--n must be at least 2 (Rank inputs are (n-1) x (n-1))");
  if (!(o.delta >= 0.0 && o.delta < 0.5)) throw UsageError("--delta must lie in [0, 1/2)");
  const std::uint64_t seed = need_seed(ctx);
  const std::uint64_t trials = trials_or(ctx, 100000);
  const problems::NoisyOracle oracle{o.delta, parse_policy(o.policy)};
  const auto reduction = o.p == 2 ? problems::Reduction::RankToInverseP2 : problems::Reduction::RankToInverse;
  const auto rep = problems::estimate_advantage(reduction, o.n, o.p, oracle, trials, seed);
  const double target = o.p == 2 ? 17.0 / 80.0 : 1.0 / 18.0;
  Outcome r;
  r.results = problems::to_json(rep);
  r.results["reduction"] = problems::to_string(reduction);
  r.results["targetGap"] = target;
  const double measured = o.p == 2 ? std::abs(rep.gap) : rep.gap;
  r.verdicts = {{"gapAtLeastTarget", measured >= target - 3.0 * rep.stderr_}};
  return r;
}

multiparty::UniformizerFamily family_for(const Context& ctx, bool prefer_uniformizing) {
  const auto& o = ctx.opt;
  std::string name = o.family;
  if (name.empty()) {
    name = multiparty::default_family(o.problem);
    if (prefer_uniformizing && o.problem == "rank") name = "rank-two-sided";
  }
  return multiparty::builtin_family(name, o.n, o.p, ctx.limits);
}

Outcome simulate_symmetrize(const Context& ctx) {
  const auto& o = ctx.opt;
  const std::uint64_t seed = need_seed(ctx);
  const std::uint64_t samples = trials_or(ctx, 10000);
  if (samples < 2) throw UsageError("--trials must be at least 2 for symmetrize");
  if (o.s < 2) throw UsageError("--s must be at least 2");
  auto problem = std::make_shared<const multiparty::PartitionedProblem>(
      multiparty::builtin_problem(o.problem, o.n, o.p, o.k, ctx.limits));
  std::unique_ptr<multiparty::Protocol> protocol;
  if (o.protocol == "send-everything") {
    protocol = std::make_unique<multiparty::SendEverything>(problem, o.s);
  } else if (o.protocol == "leader-heavy") {
    protocol = std::make_unique<multiparty::LeaderHeavy>(
        problem, o.s, o.extra == 0 ? problem->group().encoded_bits() : o.extra);
  } else if (o.protocol == "skip-identity") {
    protocol = std::make_unique<multiparty::SkipIdentity>(problem, o.s);
  } else {
    throw UsageError("unknown protocol '" + o.protocol + "'");
  }
  const auto rep = multiparty::estimate_symmetrization(*problem, *protocol, samples, seed);
  Outcome r;
  r.results = multiparty::to_json(rep);
  r.results["params"] = problem->params();
  r.results["costPerPlayer"] = static_cast<double>(rep.worstCaseBits) / static_cast<double>(o.s);
  r.verdicts = {{rep.balanced ? "chargedEqualsTotalOverS" : "chargedWithinCostOverS", rep.pass}};
  return r;
}

Outcome simulate_rerandomize(const Context& ctx) {
  const auto& o = ctx.opt;
  const std::uint64_t seed = need_seed(ctx);
  const std::uint64_t trials = trials_or(ctx, 10000);
  if (!(o.delta >= 0.0 && o.delta < 1.0)) throw UsageError("--delta must lie in [0, 1)");
  auto problem = std::make_shared<const multiparty::PartitionedProblem>(
      multiparty::builtin_problem(o.problem, o.n, o.p, o.k, ctx.limits));
  const auto defined = problem->defined_classes();
  if (o.cls >= defined.size()) throw UsageError("--class must index a class of I(f)");
  const auto family = family_for(ctx, true);
  const auto errors = multiparty::error_set_in_class(*problem, defined[o.cls], o.delta, derive_seed(seed, 7));
  const multiparty::ErrorSetProtocol base(problem, errors);
  const auto rep = multiparty::certify_rerandomized(*problem, family, base, trials, seed);
  const double target = static_cast<double>(defined.size()) * o.delta;
  Outcome r;
  r.results = multiparty::to_json(rep);
  r.results["params"] = problem->params();
  r.results["injectedErrors"] = errors.size();
  r.results["delta"] = o.delta;
  r.results["target"] = target;
  r.verdicts = {{"worstWithinMeasuredBound", rep.pass},
                {"worstWithinTarget", rep.worstInputError <= target + 3.0 * rep.worstInputStderr + 1e-12}};
  return r;
}

Outcome simulate_derandomize(const Context& ctx) {
  const auto& o = ctx.opt;
  const std::uint64_t seed = need_seed(ctx);
  if (!(o.delta > 0.0 && o.delta < 1.0)) throw UsageError("--delta must lie in (0, 1)");
  if (o.budget == 0) throw UsageError("--budget must be at least 1");
  auto problem = std::make_shared<const multiparty::PartitionedProblem>(
      multiparty::builtin_problem(o.problem, o.n, o.p, o.k, ctx.limits));
  auto base = std::make_shared<multiparty::NoisyOutput>(problem, 2, o.delta);
  const auto family = family_for(ctx, true);
  const auto runner = multiparty::rerandomized_runner(family, base);
  Outcome r;
  r.results = {{"problem", problem->name()}, {"params", problem->params()}, {"family", family.name},
               {"delta", o.delta}, {"budget", o.budget}};
  try {
    const auto res = multiparty::markov_derandomize(*problem, runner, o.delta, o.budget, seed);
    r.results["fixing"] = multiparty::to_json(res);
    r.verdicts = {{"found", true},
                  {"errorWithinTwoDelta", res.fixing.error <= 2.0 * o.delta + 1e-12},
                  {"costWithinMarkov", res.fixing.cost <= res.expectedCost / o.delta + 1e-9}};
  } catch (const BudgetExhausted& e) {
    r.results["best"] = {{"coins", e.bestCoins}, {"error", e.bestError}, {"cost", e.bestCost}};
    r.verdicts = {{"found", false}};
  }
  return r;
}

bool all_true(const json& verdicts) {
  for (const auto& [name, v] : verdicts.items()) {
    if (!v.get<bool>()) return false;
  }
  return true;
}

std::string joined(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) out += (out.empty() ? "" : " ") + a;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Context ctx;
  Options& o = ctx.opt;

  CLI::App app{"Finite-field communication complexity toolkit", "fpcomm"};
  app.require_subcommand(1);
  app.add_option("--config", o.config, "key=value file overriding caps and tolerances");

  std::function<Outcome(const Context&)> handler;
  std::string command;
  auto bind = [&](CLI::App* sub, std::string name, std::function<Outcome(const Context&)> fn) {
    sub->callback([&, name, fn] {
      command = name;
      handler = fn;
    });
  };
  auto seeded = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "master seed");
    sub->add_option("--trials", o.trials, "trial or sample count");
  };

  auto* verify = app.add_subcommand("verify", "exhaustive and property checks");
  verify->require_subcommand(1);
  auto* vf = verify->add_subcommand("fourier", "DFT of theta: round trip, Parseval, closed form");
  vf->add_option("--n", o.n)->required();
  vf->add_option("--p", o.p)->required();
  vf->add_option("--csv", o.csv, "write the Fourier table as CSV");
  bind(vf, "verify fourier", verify_fourier);
  auto* vs = verify->add_subcommand("spectrum", "singular values of F[x, y] = g(x + y) against p^N |g^|");
  vs->add_option("--p", o.p)->required();
  vs->add_option("--N", o.N);
  vs->add_option("--count", o.count, "random functions to test");
  vs->add_option("--theta-n", o.thetaN, "test g = theta(n, p) instead of random functions");
  seeded(vs);
  bind(vs, "verify spectrum", verify_spectrum);
  auto* vc = verify->add_subcommand("census", "rank census: product formula against enumeration");
  vc->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  vc->add_option("--p", o.p)->required();
  vc->add_option("--csv", o.csv, "write the census as CSV");
  bind(vc, "verify census", verify_census);
  auto* vu = verify->add_subcommand("uniformizing", "exact uniformity of a family on every pre(G_i)");
  vu->add_option("--problem", o.problem)->required();
  vu->add_option("--n", o.n)->required();
  vu->add_option("--p", o.p);
  vu->add_option("--k", o.k);
  vu->add_option("--family", o.family);
  bind(vu, "verify uniformizing", verify_uniformizing);
  auto* vk = verify->add_subcommand("concat", "rank(x + y) + n = rank of the concatenation, all pairs");
  vk->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  vk->add_option("--p", o.p)->required();
  bind(vk, "verify concat", verify_concat);

  auto* certify = app.add_subcommand("certify", "witness certificates");
  certify->require_subcommand(1);
  auto* cr = certify->add_subcommand("rank", "rank witness bound, main term and LP cross-check");
  cr->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  cr->add_option("--p", o.p)->required();
  cr->add_option("--eps", o.eps)->required();
  bind(cr, "certify rank", certify_rank);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo experiments");
  simulate->require_subcommand(1);
  auto* sr = simulate->add_subcommand("reduction", "Rank -> Inverse with a noisy Inverse protocol");
  sr->add_option("--from", o.from);
  sr->add_option("--to", o.to);
  sr->add_option("--n", o.n)->required();
  sr->add_option("--p", o.p)->required();
  sr->add_option("--delta", o.delta);
  sr->add_option("--policy", o.policy, "adversarial, block-identity, always-zero, always-nonzero");
  seeded(sr);
  bind(sr, "simulate reduction", simulate_reduction);
  auto* ss = simulate->add_subcommand("symmetrize", "two-player simulation of an s-player protocol");
  ss->add_option("--problem", o.problem);
  ss->add_option("--n", o.n)->required();
  ss->add_option("--p", o.p);
  ss->add_option("--k", o.k);
  ss->add_option("--s", o.s);
  ss->add_option("--protocol", o.protocol, "send-everything, leader-heavy, skip-identity");
  ss->add_option("--extra", o.extra, "padding bits for leader-heavy");
  seeded(ss);
  bind(ss, "simulate symmetrize", simulate_symmetrize);
  auto* sx = simulate->add_subcommand("rerandomize", "per-input error after applying a uniformizing family");
  sx->add_option("--problem", o.problem);
  sx->add_option("--n", o.n)->required();
  sx->add_option("--p", o.p);
  sx->add_option("--k", o.k);
  sx->add_option("--delta", o.delta, "nu-error injected into the base protocol");
  sx->add_option("--class", o.cls, "index into I(f) of the class carrying the errors");
  sx->add_option("--family", o.family);
  seeded(sx);
  bind(sx, "simulate rerandomize", simulate_rerandomize);
  auto* sd = simulate->add_subcommand("derandomize", "Markov search for a good coin fixing");
  sd->add_option("--problem", o.problem);
  sd->add_option("--n", o.n)->required();
  sd->add_option("--p", o.p);
  sd->add_option("--k", o.k);
  sd->add_option("--delta", o.delta);
  sd->add_option("--budget", o.budget);
  sd->add_option("--family", o.family);
  seeded(sd);
  bind(sd, "simulate derandomize", simulate_derandomize);

  std::vector<const char*> argv{"fpcomm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "fpcomm: " << e.what() << "\n";
    return 2;
  }

  json doc{{"schemaVersion", kSchemaVersion}, {"command", command}, {"argv", joined(args)}};
  try {
    if (!o.config.empty()) load_config(o.config, ctx);
    doc["config"] = config_json(ctx);
    Outcome outcome = handler(ctx);
    const bool pass = all_true(outcome.verdicts);
    doc["results"] = std::move(outcome.results);
    doc["verdicts"] = outcome.verdicts;
    doc["pass"] = pass;
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    doc["wallTimeMs"] = ms.count();
    out << doc.dump(2) << "\n";
    err << command << ": " << (pass ? "PASS" : "FAIL");
    for (const auto& [name, v] : doc["verdicts"].items()) {
      if (!v.get<bool>()) err << " [" << name << " failed]";
    }
    err << "\n";
    return pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::string type = "error";
    if (dynamic_cast<const UsageError*>(&e)) type = "usage";
    else if (dynamic_cast<const SizeLimit*>(&e)) type = "size-limit";
    else if (dynamic_cast<const NonpositiveBound*>(&e)) type = "nonpositive-bound";
    else if (dynamic_cast<const PromiseViolation*>(&e)) type = "promise-violation";
    else if (dynamic_cast<const InvalidArgument*>(&e)) type = "invalid-argument";
    else if (dynamic_cast<const UnsupportedField*>(&e)) type = "unsupported-field";
    doc["error"] = {{"type", type}, {"message", e.what()}};
    doc["pass"] = false;
    out << doc.dump(2) << "\n";
    err << command << ": " << type << ": " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fpcomm::cli
