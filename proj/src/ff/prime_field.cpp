#include "fpcomm/ff/prime_field.hpp"

#include <string>

#include "fpcomm/errors.hpp"

namespace fpcomm::ff {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
  if (p >= (1ULL << 31U) || !is_prime(p)) {
    throw InvalidArgument("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1 % p_;
  Elem base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw InvalidArgument("zero has no inverse");
  return pow(a, p_ - 2);
}

}  // namespace fpcomm::ff
