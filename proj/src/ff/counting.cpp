#include "fpcomm/ff/counting.hpp"

#include <string>

#include "fpcomm/errors.hpp"
#include "fpcomm/ff/matrix.hpp"

namespace fpcomm::ff {

namespace {

void require_prime(std::uint64_t p) { (void)PrimeField(p); }

}  // namespace

BigInt count_rank_matrices(std::uint64_t n, std::uint64_t p, std::uint64_t r) {
  require_prime(p);
  if (r > n) throw InvalidArgument("count_rank_matrices: r > n");
  const BigInt pn = big_pow(p, n);
  const BigInt pr = big_pow(p, r);
  BigInt num = 1;
  BigInt den = 1;
  BigInt tail = 1;
  for (std::uint64_t k = 0; k < r; ++k) {
    const BigInt pk = big_pow(p, k);
    num *= pn - pk;
    den *= pr - pk;
    tail *= pn - pk;
  }
  return num / den * tail;
}

BigInt gaussian_binomial(std::uint64_t n, std::uint64_t r, std::uint64_t p) {
  require_prime(p);
  if (r > n) throw InvalidArgument("gaussian_binomial: r > n");
  BigInt num = 1;
  BigInt den = 1;
  for (std::uint64_t i = 0; i < r; ++i) {
    num *= big_pow(p, n - i) - 1;
    den *= big_pow(p, i + 1) - 1;
  }
  return num / den;
}

BigInt general_linear_order(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  const BigInt pn = big_pow(p, n);
  BigInt order = 1;
  for (std::uint64_t k = 0; k < n; ++k) order *= pn - big_pow(p, k);
  return order;
}

Rational rank_ratio_alpha(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  if (n == 0) throw InvalidArgument("rank_ratio_alpha: n must be positive");
  const BigInt pn1 = big_pow(p, n) - 1;
  Rational factor = Rational(1) + Rational(BigInt(1), pn1);
  return factor * Rational(BigInt((p - 1) * (p - 1)), BigInt(p));
}

BigInt RankCensus::total() const {
  BigInt sum = 0;
  for (const BigInt& c : counts) sum += c;
  return sum;
}

RankCensus rank_census_formula(std::uint64_t n, std::uint64_t p) {
  RankCensus census{n, p, {}};
  for (std::uint64_t r = 0; r <= n; ++r) census.counts.push_back(count_rank_matrices(n, p, r));
  return census;
}

RankCensus rank_census_enumerated(std::uint64_t n, std::uint64_t p, std::uint64_t cap) {
  const PrimeField field(p);
  const BigInt size = big_pow(p, n * n);
  if (size > cap) {
    throw SizeLimit("rank census enumeration of " + size.str() + " matrices exceeds cap " + std::to_string(cap));
  }
  const auto total = size.convert_to<std::uint64_t>();
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    ++counts[mat_rank(FpMatrix::from_index(field, n, n, idx))];
  }
  RankCensus census{n, p, {}};
  for (std::uint64_t c : counts) census.counts.emplace_back(c);
  return census;
}

}  // namespace fpcomm::ff
