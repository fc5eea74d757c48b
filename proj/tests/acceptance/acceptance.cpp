// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fpcomm/ff/counting.hpp"
#include "fpcomm/ff/matrix.hpp"
#include "fpcomm/fourier/spectrum.hpp"
#include "fpcomm/fourier/theta.hpp"
#include "fpcomm/fourier/transform.hpp"
#include "fpcomm/multiparty/protocol.hpp"
#include "fpcomm/multiparty/simulate.hpp"
#include "fpcomm/multiparty/uniformize.hpp"
#include "fpcomm/problems/advantage.hpp"
#include "fpcomm/problems/reductions.hpp"
#include "fpcomm/witness/approx_norm.hpp"
#include "fpcomm/witness/certificate.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace fpcomm;
using fpcomm::ff::FpMatrix;
using fpcomm::ff::PrimeField;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  if (!pass) ++failures;
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
}

void info(const std::string& what, const std::string& detail) {
  std::printf("[INFO] %s (%s)\n", what.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<FpMatrix> all_matrices(std::uint32_t p, std::size_t n) {
  const PrimeField f(p);
  std::vector<FpMatrix> out;
  for (std::uint64_t i = 0; i < oracle::ipow(p, n * n); ++i) out.push_back(FpMatrix::from_index(f, n, n, i));
  return out;
}

std::vector<BigInt> brute_census(std::uint32_t p, std::size_t n) {
  std::vector<BigInt> counts(n + 1, 0);
  for (const auto& m : all_matrices(p, n)) counts[oracle::brute_rank(m)] += 1;
  return counts;
}

// Full-rank indicator by brute rank.
std::vector<std::complex<double>> oracle_theta(std::uint32_t p, std::size_t n) {
  std::vector<std::complex<double>> v;
  for (const auto& m : all_matrices(p, n)) v.emplace_back(oracle::brute_rank(m) == n ? 1.0 : 0.0, 0.0);
  return v;
}

// ---------------------------------------------------------------------------

void criterion1() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (auto [n, p] : {std::pair<std::size_t, std::uint32_t>{1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}}) {
    const auto census = brute_census(p, n);
    BigInt total = 0;
    for (std::size_t r = 0; r <= n; ++r) {
      ok = ok && ff::count_rank_matrices(n, p, r) == census[r];
      total += census[r];
    }
    ok = ok && total == big_pow(p, n * n);
    detail += "(" + std::to_string(n) + "," + std::to_string(p) + ") ";
  }
  const double secs = seconds_since(t0);
  report(1, ok && secs < 10.0, "rank census formula = enumeration, sum = p^(n^2)", detail + "in " + fmt(secs) + " s");
}

void criterion2() {
  bool ok = true;
  double worst = 0.0;
  double worst_l1 = 0.0;
  bool exact_ok = true;
  for (auto [n, p] : {std::pair<std::size_t, std::uint32_t>{1, 2}, {2, 2}, {1, 3}, {2, 3}}) {
    const auto hat = oracle::naive_dft(oracle_theta(p, n), p, n * n);
    const PrimeField f(p);
    double l1 = 0.0;
    for (std::uint64_t s = 0; s < hat.size(); ++s) {
      const double closed = fourier::theta_hat_closed(FpMatrix::from_index(f, n, n, s));
      worst = std::max(worst, std::abs(hat[s] - std::complex<double>(closed, 0.0)));
      l1 += std::abs(hat[s]);
    }
    worst_l1 = std::max(worst_l1, std::abs(l1 - fourier::theta_hat_l1_closed(n, p)));
    exact_ok = exact_ok && fourier::theta_hat_l1_exact(n, p) ==
                               [&] {
                                 // sum over ranks of census * |closed value|
                                 const auto census = brute_census(p, n);
                                 Rational acc = 0;
                                 for (std::size_t r = 0; r <= n; ++r)
                                   acc += Rational(census[r]) * abs(fourier::theta_hat_by_rank(n, p, r));
                                 return acc;
                               }();
    if (p == 2) {
      // Exact Walsh sum: theta^(s) = 2^-N sum_x (-1)^<s,x> theta(x).
      const auto mats = all_matrices(2, n);
      for (std::uint64_t s = 0; s < mats.size(); ++s) {
        Rational acc = 0;
        for (std::uint64_t x = 0; x < mats.size(); ++x) {
          if (oracle::brute_rank(mats[x]) != n) continue;
          acc += __builtin_popcountll(s & x) % 2 == 0 ? 1 : -1;
        }
        acc /= Rational(mats.size());
        exact_ok = exact_ok && acc == fourier::theta_hat_closed_exact(mats[s]);
      }
    }
  }
  ok = worst < 1e-9 && worst_l1 < 1e-9 && exact_ok;
  report(2, ok, "theta^ closed form = brute-force DFT, exact at p=2, ||theta^||_1 closed = table",
         "max dev " + fmt(worst) + ", l1 dev " + fmt(worst_l1) + ", exact " + (exact_ok ? "yes" : "no"));
}

void criterion3() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  auto check = [&](const fourier::GroupFunction& g) {
    const auto sv = fourier::singular_values(fourier::plus_composed_matrix(g));
    const auto hat = oracle::naive_dft(g.values, g.p, g.N);
    std::vector<double> mags;
    const double scale = static_cast<double>(g.size());
    for (const auto& c : hat) mags.push_back(scale * std::abs(c));
    std::sort(mags.begin(), mags.end(), std::greater<>());
    for (std::size_t i = 0; i < mags.size(); ++i) worst = std::max(worst, std::abs(sv[i] - mags[i]));
  };
  std::uint64_t stream = 0;
  for (auto [p, N] : {std::pair<std::uint32_t, std::size_t>{2, 1}, {2, 2}, {2, 4}, {3, 1}, {3, 2}}) {
    for (int k = 0; k < 100; ++k) {
      Rng rng = make_stream(2024, stream++);
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      std::vector<fourier::Complex> values(fourier::domain_size(p, N));
      for (auto& v : values) {
        const double re = u(rng);
        v = {re, u(rng)};
      }
      check(fourier::GroupFunction::make(p, N, std::move(values)));
    }
  }
  check(fourier::theta(1, 2));
  check(fourier::theta(2, 2));
  const double secs = seconds_since(t0);
  report(3, worst < 1e-6 && secs < 60.0, "singular values of F = p^N |g^| (500 random g + theta n=1,2)",
         "max dev " + fmt(worst) + " in " + fmt(secs) + " s");
}

void criterion4() {
  const Rational quarter(1, 4);
  const auto c1 = witness::rank_witness_bound_exact(1, 2, quarter);
  const auto lp1 = witness::approx_fourier_l1_exact(witness::rank_sign_function(1, 2), quarter);
  const bool tight = c1.bound == Rational(3, 4) && lp1.optimum == Rational(3, 4);
  const auto c2 = witness::rank_witness_bound_exact(2, 2, quarter);
  const auto lp2 = witness::approx_fourier_l1_exact(witness::rank_sign_function(2, 2), quarter);
  const bool weak = c2.bound == Rational(15, 16) && c2.bound <= lp2.optimum;
  // Direct evaluation of 2(1 + (p - p^(1-n))/(p-1)) - (1+eps) prod_{k<n} (1+p^k)/p^k.
  auto direct = [](double n, double p, double eps) {
    double prod = 1.0;
    for (int k = 0; k < n; ++k) prod *= (1.0 + std::pow(p, k)) / std::pow(p, k);
    return 2.0 * (1.0 + (p - std::pow(p, 1.0 - n)) / (p - 1.0)) - (1.0 + eps) * prod;
  };
  const double k2 = witness::rank_bound_constant(10, 2, 0.25);
  const double k3 = witness::rank_bound_constant(10, 3, 0.25);
  const bool constants = k2 > 0.028 && k3 > 0.08 && std::abs(k2 - direct(10, 2, 0.25)) < 1e-12 &&
                         std::abs(k3 - direct(10, 3, 0.25)) < 1e-12;
  report(4, tight && weak && constants, "witness bound: tight at n=1, weak duality at n=2, large-n constants",
         "n=1 bound " + to_string(c1.bound) + " LP " + to_string(lp1.optimum) + "; n=2 bound " + to_string(c2.bound) +
             " <= LP " + to_string(lp2.optimum) + "; constants " + fmt(k2) + " (p=2), " + fmt(k3) + " (p=3)");
}

void criterion5() {
  const auto t0 = Clock::now();
  // Inverse -> SLS: t_1 of (x' + y') t = b equals ((x + y)^-1)_11, by Cramer's rule.
  bool sls = true;
  std::uint64_t sls_cases = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const PrimeField f(p);
    const auto mats = all_matrices(p, 2);
    for (const auto& m : mats) {
      const std::int64_t det = (static_cast<std::int64_t>(m(0, 0)) * m(1, 1) - static_cast<std::int64_t>(m(0, 1)) * m(1, 0));
      const ff::Elem d = f.reduce(det);
      if (d == 0) continue;
      const ff::Elem inv11 = f.mul(m(1, 1), f.inv(d));
      for (const auto& x : mats) {
        const FpMatrix y = m - x;
        for (std::uint64_t bi = 1; bi < p * p; ++bi) {
          const ff::FpVector b(f, {static_cast<std::int64_t>(bi % p), static_cast<std::int64_t>(bi / p)});
          const auto red = problems::reduce_inverse_to_sls(x, y, b);
          const FpMatrix s = red.x + red.y;
          const std::int64_t sdet = static_cast<std::int64_t>(s(0, 0)) * s(1, 1) - static_cast<std::int64_t>(s(0, 1)) * s(1, 0);
          const std::int64_t num = static_cast<std::int64_t>(b[0]) * s(1, 1) - static_cast<std::int64_t>(s(0, 1)) * b[1];
          const ff::Elem sd = f.reduce(sdet);
          sls = sls && sd != 0 && f.mul(f.reduce(num), f.inv(sd)) == inv11;
          ++sls_cases;
        }
      }
    }
  }
  // Concatenation: rank(x + y) + n = rank([[x, -I], [y, I]]), all 256 pairs at n=2, p=2.
  bool concat = true;
  std::uint64_t pairs = 0;
  const auto m2 = all_matrices(2, 2);
  for (const auto& x : m2) {
    for (const auto& y : m2) {
      const auto c = problems::additive_to_concat(x, y);
      concat = concat && oracle::brute_rank(ff::vstack(c.top, c.bottom)) == oracle::brute_rank(x + y) + 2;
      ++pairs;
    }
  }
  const problems::NoisyOracle oracle3{0.05, problems::OffPromisePolicy::Adversarial};
  const auto r3 = problems::estimate_advantage(problems::Reduction::RankToInverse, 3, 3, oracle3, 100000, 17);
  const bool gap3 = r3.gap >= 1.0 / 18.0 - 3.0 * r3.stderr_;
  const auto r2 = problems::estimate_advantage(problems::Reduction::RankToInverseP2, 3, 2, oracle3, 100000, 17);
  const bool gap2 = std::abs(r2.gap) >= 17.0 / 80.0 - 3.0 * r2.stderr_;
  const double secs = seconds_since(t0);
  report(5, sls && concat && gap3 && gap2 && secs < 300.0,
         "reductions: Inverse->SLS and concatenation exhaustive, Rank->Inverse gaps 1/18 (p=3) and 17/80 (p=2)",
         std::string("SLS ") + (sls ? "ok" : "FAILED") + " on " + std::to_string(sls_cases) + " cases; concat " +
             (concat ? "ok" : "FAILED") + " on " + std::to_string(pairs) + " pairs; p=3 gap " + fmt(r3.gap) + " vs " +
             fmt(1.0 / 18.0) + " - 3*" + fmt(r3.stderr_) + (gap3 ? " ok" : " FAILED") + "; p=2 |gap| " +
             fmt(std::abs(r2.gap)) + " vs " + fmt(17.0 / 80.0) + " - 3*" + fmt(r2.stderr_) +
             (gap2 ? " ok" : " FAILED") + "; " + fmt(secs) + " s");
}

void criterion6() {
  const auto t0 = Clock::now();
  using namespace fpcomm::multiparty;
  struct Case {
    std::string label;
    PartitionedProblem problem;
    UniformizerFamily family;
  };
  std::vector<Case> cases;
  cases.push_back({"rank n=1 p=2", rank_problem(1, 2), rank_left_family(1, 2)});
  cases.push_back({"rank n=2 p=2", rank_problem(2, 2), rank_left_family(2, 2)});
  cases.push_back({"rank n=1 p=3", rank_problem(1, 3), rank_left_family(1, 3)});
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{2, 0}, {3, 0}, {3, 1}, {4, 0}, {4, 1}, {4, 2}}) {
    cases.push_back({"ham n=" + std::to_string(n) + " k=" + std::to_string(k), ham_problem(n, k), ham_family(n)});
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    cases.push_back({"cycle n=" + std::to_string(n), cycle_problem(n), cycle_conjugation_family(n)});
  }
  bool ok = true;
  std::string failed;
  for (const auto& c : cases) {
    const auto r = verify_uniformizing(c.problem, c.family);
    if (!r.pass) {
      ok = false;
      failed += " " + c.label + " (TV " + to_string(r.maxTVDeviation) + ")";
    }
  }
  const double secs = seconds_since(t0);
  report(6, ok && secs < 120.0, "Rank, Ham and Cycle uniformizing families have zero TV deviation",
         std::to_string(cases.size()) + " cases in " + fmt(secs) + " s" + (ok ? "" : "; nonzero:" + failed));

  const auto two = verify_uniformizing(rank_problem(2, 2), rank_two_sided_family(2, 2));
  info("rank n=2 p=2 with the two-sided family (a(g1-b)c, a(g2+b)c)",
       two.pass ? "zero deviation" : "TV " + to_string(two.maxTVDeviation));
  for (std::size_t n : {3, 4}) {
    const auto ct = verify_uniformizing(cycle_type_problem(n), cycle_conjugation_family(n));
    info("cycle-type classes, n=" + std::to_string(n) + ", conjugation family",
         ct.pass ? "zero deviation" : "TV " + to_string(ct.maxTVDeviation));
  }
  const auto ip = verify_uniformizing(ipprime_problem(2, 3), ipprime_family(2, 3));
  info("IP' candidate family, n=2 p=3", ip.pass ? "zero deviation" : "TV " + to_string(ip.maxTVDeviation));
}

void criterion7() {
  using namespace fpcomm::multiparty;
  const std::uint64_t samples = 10000;
  bool ok = true;
  std::string detail;
  auto rank22 = std::make_shared<const PartitionedProblem>(rank_problem(2, 2));
  for (std::size_t s : {2, 3, 5}) {
    const SendEverything all(rank22, s);
    Rng inputs = make_stream(31, s);
    Rng alice = make_stream(32, s);
    std::uint64_t charged = 0;
    std::uint64_t total = 0;
    for (std::uint64_t t = 0; t < samples; ++t) {
      const auto [g1, g2] = sample_subuniform(*rank22, inputs);
      RandomTape tape(t);
      const auto run = symmetrize(all, g1, g2, alice, tape);
      charged += run.bitsCharged;
      total += run.totalBits;
    }
    const bool exact = charged * s == total;
    ok = ok && exact;
    detail += "s=" + std::to_string(s) + " mean " + fmt(static_cast<double>(charged) / samples) + " = " +
              fmt(static_cast<double>(total) / samples / static_cast<double>(s)) + (exact ? "; " : " MISMATCH; ");
  }
  auto rank12 = std::make_shared<const PartitionedProblem>(rank_problem(1, 2));
  const LeaderHeavy lead(rank12, 3, 2);
  const SkipIdentity skip(rank12, 3);
  for (const Protocol* proto : {static_cast<const Protocol*>(&lead), static_cast<const Protocol*>(&skip)}) {
    Rng inputs = make_stream(41, 0);
    Rng alice = make_stream(42, 0);
    double sum = 0.0;
    double sq = 0.0;
    for (std::uint64_t t = 0; t < samples; ++t) {
      const auto [g1, g2] = sample_subuniform(*rank12, inputs);
      RandomTape tape(t);
      const double b = static_cast<double>(symmetrize(*proto, g1, g2, alice, tape).bitsCharged);
      sum += b;
      sq += b * b;
    }
    const double mean = sum / samples;
    const double se = std::sqrt((sq / samples - mean * mean) / (samples - 1));
    const double bound = static_cast<double>(proto->worst_case_bits()) / 3.0;
    const bool within = mean <= bound + 3.0 * se;
    ok = ok && within;
    detail += proto->name() + " s=3 mean " + fmt(mean) + " <= " + fmt(bound) + " + 3*" + fmt(se) +
              (within ? "; " : " EXCEEDED; ");
  }
  report(7, ok, "symmetrization charges totalBits/s (exact when balanced, within 3 sigma otherwise)", detail);
}

// Exact worst rerandomized error: every input of rank n or n-1, averaged over every member of the family.
double exact_worst_error(const multiparty::UniformizerFamily& family, const std::set<multiparty::InputPair>& errors,
                         std::size_t n, std::uint32_t p) {
  const PrimeField f(p);
  const auto mats = all_matrices(p, n);
  double worst = 0.0;
  for (std::uint64_t a = 0; a < mats.size(); ++a) {
    for (std::uint64_t b = 0; b < mats.size(); ++b) {
      const std::size_t r = oracle::brute_rank(mats[a] + mats[b]);
      if (r + 1 < n) continue;
      std::uint64_t wrong = 0;
      for (std::uint64_t i = 0; i < family.size; ++i) wrong += errors.count(family.apply(i, a, b));
      worst = std::max(worst, static_cast<double>(wrong) / static_cast<double>(family.size));
    }
  }
  return worst;
}

void criterion8() {
  using namespace fpcomm::multiparty;
  const auto t0 = Clock::now();
  auto rank22 = std::make_shared<const PartitionedProblem>(rank_problem(2, 2));
  const auto family = rank_two_sided_family(2, 2);
  bool ok = true;
  std::string detail;
  for (std::size_t cls : {0, 1}) {
    const auto errors = error_set_in_class(*rank22, cls, 0.1, 100 + cls);
    const ErrorSetProtocol base(rank22, errors);
    const auto r = certify_rerandomized(*rank22, family, base, 10000, 200 + cls);
    const double exact = exact_worst_error(family, errors, 2, 2);
    const bool within = r.baseNuError <= 0.1 && r.worstInputError <= 0.2 + 3.0 * r.worstInputStderr && exact <= 0.2;
    ok = ok && within;
    detail += "errors in " + rank22->classes()[cls].label + ": nu-error " + fmt(r.baseNuError) + ", sampled worst " +
              fmt(r.worstInputError) + " +- " + fmt(r.worstInputStderr) + ", exact worst " + fmt(exact) +
              (within ? "; " : " EXCEEDED; ");
  }
  report(8, ok, "rerandomized worst-case error <= 0.2 + 3 sigma, Rank n=2 p=2, nu-error 0.1",
         detail + fmt(seconds_since(t0)) + " s");

  const auto errors = error_set_in_class(*rank22, 1, 0.1, 101);
  info("same experiment with the left family (a(g1-b), a(g2+b)), errors in the rank-1 class",
       "exact worst " + fmt(exact_worst_error(rank_left_family(2, 2), errors, 2, 2)));
}

void criterion9() {
  bool ok = true;
  std::string detail;
  for (auto [n, p] : {std::pair<std::size_t, std::uint32_t>{1, 2}, {2, 2}, {2, 3}}) {
    const auto census = brute_census(p, n);
    const Rational ratio(census[n], census[n - 1]);
    const Rational alpha = ff::rank_ratio_alpha(n, p);
    ok = ok && alpha == ratio;
    detail += "(" + std::to_string(n) + "," + std::to_string(p) + ") " + to_string(alpha) + " vs " + to_string(ratio) + "; ";
  }
  report(9, ok, "alpha ratio = census ratio, exact", detail);
}

void criterion10() {
  const std::vector<std::vector<std::string>> commands{
      {"verify", "fourier", "--n", "2", "--p", "3"},
      {"verify", "spectrum", "--p", "2", "--N", "2", "--count", "20", "--seed", "5"},
      {"verify", "census", "--n", "2", "--p", "3"},
      {"verify", "uniformizing", "--problem", "ham", "--n", "3", "--k", "1"},
      {"verify", "concat", "--n", "1", "--p", "3"},
      {"certify", "rank", "--n", "2", "--p", "2", "--eps", "0.25"},
      {"simulate", "reduction", "--n", "3", "--p", "3", "--delta", "0.05", "--trials", "20000", "--seed", "9"},
      {"simulate", "symmetrize", "--problem", "rank", "--n", "1", "--p", "2", "--s", "3", "--protocol",
       "skip-identity", "--trials", "5000", "--seed", "9"},
      {"simulate", "rerandomize", "--problem", "rank", "--n", "1", "--p", "3", "--delta", "0.2", "--trials", "500",
       "--seed", "9"},
      {"simulate", "derandomize", "--problem", "rank", "--n", "1", "--p", "2", "--delta", "0.1", "--seed", "9"},
  };
  bool ok = true;
  std::string detail;
  for (const auto& cmd : commands) {
    std::string payload[2];
    int code[2];
    for (int run = 0; run < 2; ++run) {
      std::ostringstream out;
      std::ostringstream err;
      code[run] = cli::run(cmd, out, err);
      auto doc = nlohmann::json::parse(out.str());
      doc.erase("wallTimeMs");
      payload[run] = doc.dump();
    }
    const bool same = payload[0] == payload[1] && code[0] == code[1];
    ok = ok && same;
    if (!same) detail += " differs: " + cmd[0] + " " + cmd[1] + ";";
  }
  report(10, ok, "CLI payloads are byte-identical across two runs with fixed seeds",
         std::to_string(commands.size()) + " commands" + detail);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                    criterion6, criterion7, criterion8, criterion9, criterion10};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      ++failures;
      std::printf("[FAIL] criterion raised: %s\n", e.what());
    }
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
