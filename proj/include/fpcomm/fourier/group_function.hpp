#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fpcomm::fourier {

using Complex = std::complex<double>;

// Points of F_p^N are indexed by little-endian base-p digits: coordinate k
// carries weight p^k. For matrix domains the coordinates are the row-major
// entries, matching FpMatrix::to_index.
std::uint64_t domain_size(std::uint32_t p, std::size_t N);
std::vector<std::uint32_t> point_digits(std::uint64_t index, std::uint32_t p, std::size_t N);
std::uint64_t point_index(const std::vector<std::uint32_t>& digits, std::uint32_t p);
// x + y in F_p^N, on indices.
std::uint64_t add_points(std::uint64_t x, std::uint64_t y, std::uint32_t p, std::size_t N);
// <s, x> mod p, on indices.
std::uint32_t pairing(std::uint64_t s, std::uint64_t x, std::uint32_t p, std::size_t N);

// f : F_p^N -> C.
struct GroupFunction {
  std::uint32_t p = 2;
  std::size_t N = 0;
  std::vector<Complex> values;

  // Throws InvalidArgument for a non-prime p, a wrong value count or
  // non-finite entries.
  static GroupFunction make(std::uint32_t p, std::size_t N, std::vector<Complex> values);
  static GroupFunction real(std::uint32_t p, std::size_t N, const std::vector<double>& values);
  static GroupFunction delta(std::uint32_t p, std::size_t N, std::uint64_t at = 0);
  static GroupFunction constant(std::uint32_t p, std::size_t N, Complex c);

  std::uint64_t size() const noexcept { return values.size(); }
  const Complex& operator[](std::uint64_t i) const { return values[i]; }
};

// Coefficient table f^ over frequencies s in F_p^N.
struct FourierTable {
  std::uint32_t p = 2;
  std::size_t N = 0;
  std::vector<Complex> coefficients;

  std::uint64_t size() const noexcept { return coefficients.size(); }
  const Complex& operator[](std::uint64_t s) const { return coefficients[s]; }
};

// Sign function defined on part of F_p^N: +1, -1 or undefined (0).
struct PartialSignFunction {
  std::uint32_t p = 2;
  std::size_t N = 0;
  std::vector<std::int8_t> classes;

  // Throws InvalidArgument for values outside {-1, 0, +1}, a wrong count, or
  // no defined point at all.
  static PartialSignFunction make(std::uint32_t p, std::size_t N, std::vector<std::int8_t> classes);
  // Everywhere undefined; only usable with operations that accept it.
  static PartialSignFunction undefined(std::uint32_t p, std::size_t N);

  bool defined(std::uint64_t x) const { return classes[x] != 0; }
  std::uint64_t size() const noexcept { return classes.size(); }
};

}  // namespace fpcomm::fourier
