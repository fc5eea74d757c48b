#pragma once

#include <cstdint>

namespace fpcomm::ff {

using Elem = std::uint32_t;

bool is_prime(std::uint64_t n);

// Arithmetic modulo a prime p < 2^31. Elements are kept canonical in [0, p).
class PrimeField {
 public:
  // Throws InvalidArgument unless p is a prime below 2^31.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Elem reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }
  Elem add(Elem a, Elem b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  // Throws InvalidArgument for a = 0.
  Elem inv(Elem a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

}  // namespace fpcomm::ff
