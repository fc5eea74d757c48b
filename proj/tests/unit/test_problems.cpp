#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "fpcomm/errors.hpp"
#include "fpcomm/problems/advantage.hpp"
#include "fpcomm/problems/instances.hpp"
#include "fpcomm/problems/reductions.hpp"
#include "oracles.hpp"

using namespace fpcomm;
using namespace fpcomm::problems;

namespace {

std::vector<FpMatrix> all_matrices(std::uint32_t p, std::size_t rows, std::size_t cols) {
  const PrimeField f(p);
  std::vector<FpMatrix> out;
  const std::uint64_t total = oracle::ipow(p, rows * cols);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(FpMatrix::from_index(f, rows, cols, i));
  return out;
}

// Inverse entry (1,1) by cofactor: det(lower-right block) / det(m), checked via
// brute rank only (det != 0 iff rank full); returns whether it is zero.
bool top_left_inverse_zero(const FpMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return false;
  return oracle::brute_rank(m.block(1, 1, n - 1, n - 1)) < n - 1;
}

}  // namespace

TEST_CASE("rank instances keep their promise") {
  Rng rng = make_stream(31, 0);
  for (std::size_t target : {1u, 2u}) {
    for (int i = 0; i < 200; ++i) {
      const auto inst = gen_rank_instance(2, 2, target, 1, rng);
      CHECK(oracle::brute_rank(inst.x + inst.y) == target);
    }
  }
  for (int i = 0; i < 50; ++i) {
    const auto z0 = gen_rank_instance(1, 2, 0, 0, rng);
    CHECK((z0.x + z0.y)(0, 0) == 0);
    const auto z1 = gen_rank_instance(1, 2, 1, 0, rng);
    CHECK((z1.x + z1.y)(0, 0) == 1);
  }
  CHECK_THROWS_AS(gen_rank_instance(2, 2, 3, 2, rng), InvalidArgument);
  CHECK_THROWS_AS(gen_rank_instance(2, 2, 0, 1, rng), InvalidArgument);

  // x is uniform over all 16 matrices.
  std::map<std::uint64_t, std::uint64_t> counts;
  const int draws = 32000;
  for (int i = 0; i < draws; ++i) ++counts[gen_rank_instance(2, 2, 1, 1, rng).x.to_index()];
  CHECK(oracle::chi2_statistic(counts, draws / 16.0, 16) < oracle::chi2_critical(15));
}

TEST_CASE("other generators keep their promise") {
  Rng rng = make_stream(32, 0);
  for (int i = 0; i < 100; ++i) {
    const auto inv = gen_inverse_instance(3, 5, rng);
    CHECK(oracle::brute_rank(inv.x + inv.y) == 3);
    const PrimeField f5(5);
    CHECK_THROWS_AS(gen_sls_instance(3, FpVector(f5, 3), rng), ZeroVector);
    CHECK(gen_sls_instance(3, FpVector(f5, {0, 0, 2}), rng).b[2] == 2);

    for (auto variant : {IpVariant::IP, IpVariant::IPprime, IpVariant::IPdprime}) {
      for (std::uint32_t t : {0u, 1u}) {
        const auto ip = gen_ip_instance(4, 5, variant, t, rng);
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < 4; ++j) {
          acc += std::uint64_t{ip.x[j]} * ip.y[j];
          if (variant != IpVariant::IP) CHECK(ip.y[j] != 0);
          if (variant == IpVariant::IPprime) CHECK(ip.x[j] != 0);
        }
        CHECK(acc % 5 == t);
      }
    }
    for (std::size_t target : {2u, 4u}) {
      const auto h = gen_ham_instance(6, 2, target, rng);
      std::size_t w = 0;
      for (std::size_t j = 0; j < 6; ++j) w += h.x[j] != h.y[j] ? 1 : 0;
      CHECK(w == target);
    }
    for (std::size_t d : {0u, 1u}) {
      const auto s = gen_subspace_instance(4, 3, d, rng);
      CHECK(oracle::brute_rank(s.basisA) == 2);
      CHECK(oracle::brute_rank(s.basisB) == 2);
      CHECK(oracle::brute_rank(ff::vstack(s.basisA, s.basisB)) == 4 - d);
    }
  }
  CHECK_THROWS_AS(gen_subspace_instance(3, 2, 0, rng), InvalidArgument);
  CHECK_THROWS_AS(gen_ham_instance(3, 2, 2, rng), InvalidArgument);
}

TEST_CASE("subspace generator covers every pair at n=2, p=2") {
  Rng rng = make_stream(33, 0);
  // Three lines in F_2^2; dimension 0 pairs are the 6 ordered distinct pairs,
  // dimension 1 pairs are the 3 equal ones.
  for (std::size_t d : {0u, 1u}) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (int i = 0; i < 2000; ++i) {
      const auto s = gen_subspace_instance(2, 2, d, rng);
      REQUIRE(!s.basisA.row(0).is_zero());
      REQUIRE(!s.basisB.row(0).is_zero());
      const bool same = s.basisA == s.basisB;
      CHECK(same == (d == 1));
      seen.insert({s.basisA.to_index(), s.basisB.to_index()});
    }
    CHECK(seen.size() == (d == 0 ? 6u : 3u));
  }
}

TEST_CASE("inverse to SLS identity is exhaustive over GL(2,2) and GL(2,3)") {
  for (std::uint32_t p : {2u, 3u}) {
    const PrimeField f(p);
    const auto mats = all_matrices(p, 2, 2);
    for (std::uint64_t bi = 1; bi < oracle::ipow(p, 2); ++bi) {
      const FpVector b(f, {static_cast<std::int64_t>(bi % p), static_cast<std::int64_t>(bi / p)});
      const FpMatrix q = canonical_q(b);
      CHECK(q * b == FpVector::unit(f, 2, 0));
      CHECK(canonical_q(b) == q);
      for (const auto& z : mats) {
        if (oracle::brute_rank(z) < 2) continue;
        const FpMatrix x = mats[(z.to_index() * 7 + bi) % mats.size()];
        const FpMatrix y = z - x;
        const auto sls = reduce_inverse_to_sls(x, y, b);
        const FpVector t = ff::solve_linear(sls.x + sls.y, sls.b);
        CHECK((t[0] == 0) == top_left_inverse_zero(z));
        CHECK(t[0] == ff::mat_inverse(z)(0, 0));
      }
    }
  }
  const PrimeField f3(3);
  CHECK(canonical_q(FpVector::unit(f3, 3, 0)) == FpMatrix::identity(f3, 3));
  CHECK_THROWS_AS(canonical_q(FpVector(f3, 3)), ZeroVector);
}

TEST_CASE("concatenation rank identity is exhaustive at n=2") {
  for (std::uint32_t p : {2u, 3u}) {
    const auto mats = all_matrices(p, 2, 2);
    std::uint64_t pairs = 0;
    for (const auto& x : mats) {
      for (const auto& y : mats) {
        const auto c = additive_to_concat(x, y);
        CHECK(c.top.cols() == 4);
        CHECK(oracle::brute_rank(ff::vstack(c.top, c.bottom)) == oracle::brute_rank(x + y) + 2);
        ++pairs;
      }
    }
    CHECK(pairs == oracle::ipow(p, 8));
  }
  const PrimeField f2(2);
  CHECK_THROWS_AS(additive_to_concat(FpMatrix(f2, 2, 2), FpMatrix(f2, 3, 3)), DimensionMismatch);
}

TEST_CASE("parity fix and padding") {
  const PrimeField f2(2);
  CHECK(concat_parity_fix(FpMatrix::identity(f2, 2)) == FpMatrix::identity(f2, 3));
  for (const auto& m : all_matrices(2, 2, 2)) {
    const FpMatrix out = concat_parity_fix(m);
    const bool inv = oracle::brute_rank(m) == 2;
    CHECK((oracle::brute_rank(out) == 3) == inv);
    if (inv) CHECK(ff::mat_inverse(out)(0, 0) == ff::mat_inverse(m)(0, 0));
    const FpMatrix padded = pad_rank(m, 3);
    CHECK(oracle::brute_rank(padded) == oracle::brute_rank(m));
  }
  CHECK(ff::mat_rank(pad_rank(FpMatrix::identity(f2, 2), 4)) == 2);
  CHECK(pad_rank(FpMatrix(f2, 2, 2), 4) == FpMatrix(f2, 4, 4));
  CHECK_THROWS_AS(pad_rank(FpMatrix(f2, 3, 3), 2), DimensionMismatch);
}

TEST_CASE("IP'' to IP' and GIP") {
  const PrimeField f3(3), f5(5), f2(2);
  const auto red = ip_dprime_to_prime(FpVector(f3, {0, 2, 0, 1}), FpVector(f3, {1, 1, 2, 2}));
  CHECK(red.indexMessage == "1010");
  CHECK(red.reduced.x.size() == 2);
  const auto same = ip_dprime_to_prime(FpVector(f3, {1, 2}), FpVector(f3, {1, 1}));
  CHECK(same.indexMessage == "00");
  CHECK(same.reduced.x == FpVector(f3, {1, 2}));
  CHECK_THROWS_AS(ip_dprime_to_prime(FpVector(f3, {1, 2}), FpVector(f3, {0, 1})), PromiseViolation);
  CHECK_THROWS_AS(ip_dprime_to_prime(FpVector(f2, {1}), FpVector(f2, {1})), InvalidArgument);
  Rng rng = make_stream(34, 0);
  for (int i = 0; i < 1000; ++i) {
    const auto inst = gen_ip_instance(6, 5, IpVariant::IPdprime, static_cast<std::uint32_t>(i % 2), rng);
    const auto r = ip_dprime_to_prime(inst.x, inst.y);
    CHECK(ff::dot(r.reduced.x, r.reduced.y) == ff::dot(inst.x, inst.y));
    for (std::size_t j = 0; j < r.reduced.x.size(); ++j) CHECK(r.reduced.x[j] != 0);
  }

  const FpVector a(f5, {1, 2, 3}), b(f5, {4, 0, 2});
  CHECK(gip_eval({a, b}) == ff::dot(a, b));
  CHECK(gip_eval({a, FpVector(f5, 3), b}) == 0);
  CHECK(gip_eval({FpVector(f3, {1, 2}), FpVector(f3, {2, 2}), FpVector(f3, {1, 1})}) == 0);
  CHECK_THROWS_AS(gip_eval({a, FpVector(f5, 2)}), DimensionMismatch);
  CHECK_THROWS_AS(gip_eval({}), InvalidArgument);
}

TEST_CASE("noisy oracle flip rate") {
  const PrimeField f3(3);
  const NoisyOracle oracle{0.05, OffPromisePolicy::Adversarial};
  Rng rng = make_stream(35, 0);
  const FpMatrix id = FpMatrix::identity(f3, 3);
  const int calls = 40000;
  int flips = 0;
  for (int i = 0; i < calls; ++i) flips += oracle.claims_zero(id, rng) ? 1 : 0;
  const double rate = static_cast<double>(flips) / calls;
  CHECK(std::abs(rate - 0.05) <= 3.0 * std::sqrt(0.05 * 0.95 / calls));
  const NoisyOracle zero{0.0, OffPromisePolicy::AlwaysZero};
  CHECK(zero.claims_zero(FpMatrix(f3, 2, 2), rng));
  CHECK(!NoisyOracle{0.0, OffPromisePolicy::AlwaysNonzero}.claims_zero(FpMatrix(f3, 2, 2), rng));
}

TEST_CASE("augmentation keeps the input as lower-right block") {
  Rng rng = make_stream(36, 0);
  const PrimeField f3(3);
  const FpMatrix a = ff::random_of_rank(f3, 2, 1, rng);
  const FpMatrix a2 = augment(a, rng);
  CHECK(a2.block(1, 1, 2, 2) == a);
  const PrimeField f2(2);
  CHECK_THROWS_AS(reduce_rank_to_inverse(FpMatrix(f3, 3, 3), NoisyOracle{}, rng), PromiseViolation);
  CHECK_THROWS_AS(reduce_rank_to_inverse(FpMatrix::identity(f2, 2), NoisyOracle{}, rng), InvalidArgument);
  // Sandwich preserves rank.
  for (int i = 0; i < 200; ++i) {
    const FpMatrix m = augment(ff::random_of_rank(f2, 2, 1 + i % 2, rng), rng);
    CHECK(ff::mat_rank(sandwich(m, rng)) == ff::mat_rank(m));
  }
}

TEST_CASE("sandwich is uniform over rank classes at n=2, p=2") {
  const PrimeField f2(2);
  Rng rng = make_stream(37, 0);
  for (std::size_t r : {1u, 2u}) {
    const FpMatrix start = ff::random_of_rank(f2, 2, r, rng);
    const std::size_t classes = r == 1 ? 9 : 6;
    std::map<std::uint64_t, std::uint64_t> counts;
    const int draws = 27000;
    for (int i = 0; i < draws; ++i) ++counts[sandwich(start, rng).to_index()];
    CHECK(counts.size() == classes);
    CHECK(oracle::chi2_statistic(counts, static_cast<double>(draws) / classes, classes) <
          oracle::chi2_critical(static_cast<double>(classes - 1)));
  }
}

TEST_CASE("advantage estimates match exact predictions") {
  // Identity reduction with a perfect oracle.
  const auto id = estimate_advantage(Reduction::Identity, 3, 3, NoisyOracle{0.0}, 500, 1);
  CHECK(id.alphaHat == 0.0);
  CHECK(id.betaHat == 1.0);

  const std::uint64_t trials = 20000;
  auto near = [](double est, double truth, double se) { return std::abs(est - truth) <= 4.0 * se + 1e-12; };

  // p = 3, adversarial: alpha = (1-1/p)/20 + 1/p, beta = 19/20 (1-1/p)^2.
  const auto adv = estimate_advantage(Reduction::RankToInverse, 3, 3, NoisyOracle{0.05}, trials, 2);
  CHECK(near(adv.alphaHat, (2.0 / 3.0) / 20.0 + 1.0 / 3.0, adv.alphaStderr));
  CHECK(near(adv.betaHat, 0.95 * 4.0 / 9.0, adv.betaStderr));

  // Noiseless: beta = (1-1/p)^2 under the adversarial policy.
  const auto clean = estimate_advantage(Reduction::RankToInverse, 3, 3, NoisyOracle{0.0}, trials, 3);
  CHECK(clean.betaHat >= 4.0 / 9.0 - 3.0 * clean.betaStderr);

  // Block-identity answers make the reduction exact up to delta.
  const auto block = estimate_advantage(Reduction::RankToInverse, 3, 5, NoisyOracle{0.1, OffPromisePolicy::BlockIdentity},
                                        trials, 4);
  CHECK(near(block.alphaHat, 0.1, block.alphaStderr));
  CHECK(near(block.betaHat, 0.9, block.betaStderr));

  // p = 2: q = P((B^-1)_11 = 0) over GL(3,2), pb = P(lower-right block full | rank 2).
  double gl = 0, gl_zero = 0, r2 = 0, r2_block = 0;
  for (const auto& m : all_matrices(2, 3, 3)) {
    const std::size_t r = oracle::brute_rank(m);
    if (r == 3) {
      ++gl;
      gl_zero += top_left_inverse_zero(m) ? 1 : 0;
    } else if (r == 2) {
      ++r2;
      r2_block += oracle::brute_rank(m.block(1, 1, 2, 2)) == 2 ? 1 : 0;
    }
  }
  const double q = gl_zero / gl;
  const double pb = r2_block / r2;
  const double d = 0.05;
  const double claim_inv = q * (1 - d) + (1 - q) * d;
  const auto p2 = estimate_advantage(Reduction::RankToInverseP2, 3, 2, NoisyOracle{d}, trials, 5);
  CHECK(near(p2.alphaHat, 0.5 * claim_inv + 0.5 * pb, p2.alphaStderr));
  CHECK(near(p2.betaHat, 0.25 * claim_inv + 0.625 * pb, p2.betaStderr));
  CHECK(near(p2.p0Hat, pb, std::sqrt(pb * (1 - pb) / 10000.0)));
}

TEST_CASE("amplification drives the error down") {
  CHECK(amplification_repetitions(0.5, 0.05) % 2 == 1);
  CHECK(amplification_repetitions(1.0 / 18.0, 0.05) >= static_cast<std::uint64_t>(2.0 * std::log(20.0) * 324.0));
  const NoisyOracle oracle{0.3, OffPromisePolicy::BlockIdentity};
  const auto measured = estimate_advantage(Reduction::RankToInverse, 3, 3, oracle, 4000, 6);
  const auto amp = amplify(Reduction::RankToInverse, 3, 3, oracle, measured, 0.05, 200, 7);
  CHECK(amp.errorLow < 0.05);
  CHECK(amp.errorHigh < 0.05);
  const auto j = to_json(measured);
  for (const char* key : {"problem", "n", "p", "delta", "trials", "alphaHat", "betaHat", "stderr", "seed"}) CHECK(j.contains(key));
}
