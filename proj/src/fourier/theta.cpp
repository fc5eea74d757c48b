#include "fpcomm/fourier/theta.hpp"

#include <cmath>
#include <string>

#include "fpcomm/errors.hpp"

namespace fpcomm::fourier {

GroupFunction theta(std::size_t n, std::uint32_t p, const Limits& limits) {
  if (n == 0) throw InvalidArgument("theta: n must be positive");
  const ff::PrimeField field(p);
  const std::uint64_t size = domain_size(p, n * n);
  if (size > limits.dft_points) {
    throw SizeLimit("theta: p^(n^2) = " + std::to_string(size) + " exceeds cap " + std::to_string(limits.dft_points));
  }
  std::vector<Complex> values(size);
  for (std::uint64_t x = 0; x < size; ++x) {
    values[x] = ff::mat_rank(ff::FpMatrix::from_index(field, n, n, x)) == n ? 1.0 : 0.0;
  }
  return GroupFunction{p, n * n, std::move(values)};
}

Rational theta_hat_by_rank(std::uint64_t n, std::uint64_t p, std::uint64_t r) {
  if (r > n) throw InvalidArgument("theta_hat_by_rank: rank exceeds n");
  BigInt prod = 1;
  for (std::uint64_t k = 1; k <= n - r; ++k) prod *= big_pow(p, k) - 1;
  Rational value(prod, big_pow(p, n * (n + 1) / 2));
  return r % 2 == 0 ? value : Rational(-value);
}

Rational theta_hat_closed_exact(const ff::FpMatrix& s) {
  if (!s.is_square()) throw DimensionMismatch("theta_hat_closed: matrix is not square");
  return theta_hat_by_rank(s.rows(), s.modulus(), ff::mat_rank(s));
}

double theta_hat_closed(const ff::FpMatrix& s) { return to_double(theta_hat_closed_exact(s)); }

Rational theta_hat_l1_exact(std::uint64_t n, std::uint64_t p) {
  BigInt num = 1;
  BigInt den = big_pow(p, n);
  for (std::uint64_t k = 1; k <= n; ++k) num *= big_pow(p, k) - 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    const BigInt pk = big_pow(p, k);
    num *= 1 + pk;
    den *= pk;
  }
  return Rational(num, den);
}

double theta_hat_l1_log2(std::uint64_t n, std::uint64_t p) {
  // p^k - 1 = p^k (1 - p^-k) and 1 + p^k = p^k (1 + p^-k); the p^k factors cancel
  // against the p^k denominators, leaving p^(-n + n(n+1)/2).
  const double lp = std::log2(static_cast<double>(p));
  const double pd = static_cast<double>(p);
  double acc = (-static_cast<double>(n) + static_cast<double>(n * (n + 1) / 2)) * lp;
  for (std::uint64_t k = 1; k <= n; ++k) acc += std::log1p(-std::pow(pd, -static_cast<double>(k))) / std::log(2.0);
  for (std::uint64_t k = 0; k < n; ++k) acc += std::log1p(std::pow(pd, -static_cast<double>(k))) / std::log(2.0);
  return acc;
}

double theta_hat_l1_closed(std::uint64_t n, std::uint64_t p) {
  if (n <= 16) return to_double(theta_hat_l1_exact(n, p));
  return std::exp2(theta_hat_l1_log2(n, p));
}

}  // namespace fpcomm::fourier
