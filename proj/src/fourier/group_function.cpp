#include "fpcomm/fourier/group_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fpcomm/errors.hpp"
#include "fpcomm/ff/prime_field.hpp"

namespace fpcomm::fourier {

std::uint64_t domain_size(std::uint32_t p, std::size_t N) {
  std::uint64_t size = 1;
  for (std::size_t k = 0; k < N; ++k) {
    if (size > std::numeric_limits<std::uint64_t>::max() / p) {
      throw SizeLimit("domain F_" + std::to_string(p) + "^" + std::to_string(N) + " does not fit in 64 bits");
    }
    size *= p;
  }
  return size;
}

std::vector<std::uint32_t> point_digits(std::uint64_t index, std::uint32_t p, std::size_t N) {
  std::vector<std::uint32_t> digits(N);
  for (auto& d : digits) {
    d = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return digits;
}

std::uint64_t point_index(const std::vector<std::uint32_t>& digits, std::uint32_t p) {
  std::uint64_t index = 0;
  for (std::size_t k = digits.size(); k-- > 0;) index = index * p + digits[k];
  return index;
}

std::uint64_t add_points(std::uint64_t x, std::uint64_t y, std::uint32_t p, std::size_t N) {
  std::uint64_t out = 0;
  std::uint64_t weight = 1;
  for (std::size_t k = 0; k < N; ++k) {
    out += ((x % p + y % p) % p) * weight;
    x /= p;
    y /= p;
    weight *= p;
  }
  return out;
}

std::uint32_t pairing(std::uint64_t s, std::uint64_t x, std::uint32_t p, std::size_t N) {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < N; ++k) {
    acc += (s % p) * (x % p);
    s /= p;
    x /= p;
  }
  return static_cast<std::uint32_t>(acc % p);
}

GroupFunction GroupFunction::make(std::uint32_t p, std::size_t N, std::vector<Complex> values) {
  if (!ff::is_prime(p)) throw InvalidArgument("group function: p = " + std::to_string(p) + " is not prime");
  if (values.size() != domain_size(p, N)) throw InvalidArgument("group function: expected p^N values");
  for (const Complex& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw InvalidArgument("group function: non-finite value");
  }
  return GroupFunction{p, N, std::move(values)};
}

GroupFunction GroupFunction::real(std::uint32_t p, std::size_t N, const std::vector<double>& values) {
  return make(p, N, std::vector<Complex>(values.begin(), values.end()));
}

GroupFunction GroupFunction::delta(std::uint32_t p, std::size_t N, std::uint64_t at) {
  std::vector<Complex> values(domain_size(p, N), 0.0);
  values.at(at) = 1.0;
  return make(p, N, std::move(values));
}

GroupFunction GroupFunction::constant(std::uint32_t p, std::size_t N, Complex c) {
  return make(p, N, std::vector<Complex>(domain_size(p, N), c));
}

PartialSignFunction PartialSignFunction::make(std::uint32_t p, std::size_t N, std::vector<std::int8_t> classes) {
  if (!ff::is_prime(p)) throw InvalidArgument("partial sign function: p is not prime");
  if (classes.size() != domain_size(p, N)) throw InvalidArgument("partial sign function: expected p^N classes");
  bool any_defined = false;
  for (std::int8_t c : classes) {
    if (c < -1 || c > 1) throw InvalidArgument("partial sign function: class outside {-1, 0, +1}");
    any_defined = any_defined || c != 0;
  }
  if (!any_defined) throw InvalidArgument("partial sign function: no defined point");
  return PartialSignFunction{p, N, std::move(classes)};
}

PartialSignFunction PartialSignFunction::undefined(std::uint32_t p, std::size_t N) {
  if (!ff::is_prime(p)) throw InvalidArgument("partial sign function: p is not prime");
  return PartialSignFunction{p, N, std::vector<std::int8_t>(domain_size(p, N), 0)};
}

}  // namespace fpcomm::fourier
