#include "fpcomm/fourier/transform.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "fpcomm/errors.hpp"

namespace fpcomm::fourier {

namespace {

void check_cap(std::uint64_t size, std::uint64_t cap, const char* what) {
  if (size > cap) {
    throw SizeLimit(std::string(what) + ": " + std::to_string(size) + " points exceed cap " + std::to_string(cap));
  }
}

// w^-k for k = 0..p-1, exact at multiples of a quarter turn.
std::vector<Complex> inverse_roots(std::uint32_t p) {
  std::vector<Complex> roots(p);
  for (std::uint32_t k = 0; k < p; ++k) {
    if ((4ULL * k) % p == 0) {
      switch ((4ULL * k) / p) {
        case 0: roots[k] = {1.0, 0.0}; break;
        case 1: roots[k] = {0.0, -1.0}; break;
        case 2: roots[k] = {-1.0, 0.0}; break;
        default: roots[k] = {0.0, 1.0}; break;
      }
    } else {
      roots[k] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p));
    }
  }
  return roots;
}

std::vector<std::uint32_t> digit_table(std::uint64_t size, std::uint32_t p, std::size_t N) {
  std::vector<std::uint32_t> table(size * N);
  for (std::uint64_t x = 0; x < size; ++x) {
    std::uint64_t v = x;
    for (std::size_t k = 0; k < N; ++k) {
      table[x * N + k] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
  }
  return table;
}

}  // namespace

FourierTable dft(const GroupFunction& f, const Limits& limits) {
  const std::uint64_t size = f.size();
  check_cap(size, limits.dft_points, "dft");
  const std::uint32_t p = f.p;
  const std::size_t N = f.N;
  const auto roots = inverse_roots(p);
  const auto digits = digit_table(size, p, N);
  const double scale = 1.0 / static_cast<double>(size);

  FourierTable out{p, N, std::vector<Complex>(size)};
  for (std::uint64_t s = 0; s < size; ++s) {
    const std::uint32_t* sd = &digits[s * N];
    Complex acc = 0.0;
    for (std::uint64_t x = 0; x < size; ++x) {
      const std::uint32_t* xd = &digits[x * N];
      std::uint64_t ip = 0;
      for (std::size_t k = 0; k < N; ++k) ip += static_cast<std::uint64_t>(sd[k]) * xd[k];
      acc += roots[ip % p] * f.values[x];
    }
    out.coefficients[s] = acc * scale;
  }
  return out;
}

GroupFunction as_function(const FourierTable& t) { return GroupFunction{t.p, t.N, t.coefficients}; }

GroupFunction inverse_dft(const FourierTable& t, const Limits& limits) {
  GroupFunction conj_hat{t.p, t.N, t.coefficients};
  for (Complex& c : conj_hat.values) c = std::conj(c);
  const FourierTable twice = dft(conj_hat, limits);
  const double scale = static_cast<double>(t.size());
  GroupFunction out{t.p, t.N, std::vector<Complex>(t.size())};
  for (std::uint64_t x = 0; x < t.size(); ++x) out.values[x] = std::conj(twice.coefficients[x]) * scale;
  return out;
}

double idft_roundtrip(const GroupFunction& f, const Limits& limits) {
  const GroupFunction back = inverse_dft(dft(f, limits), limits);
  double worst = 0.0;
  for (std::uint64_t x = 0; x < f.size(); ++x) worst = std::max(worst, std::abs(back.values[x] - f.values[x]));
  return worst;
}

double parseval_gap(const GroupFunction& f, const FourierTable& t) {
  double lhs = 0.0;
  for (const Complex& c : t.coefficients) lhs += std::norm(c);
  double rhs = 0.0;
  for (const Complex& v : f.values) rhs += std::norm(v);
  rhs /= static_cast<double>(f.size());
  return std::abs(lhs - rhs);
}

double fourier_l1(const FourierTable& t) {
  double sum = 0.0;
  for (const Complex& c : t.coefficients) sum += std::abs(c);
  return sum;
}

double fourier_linf(const FourierTable& t) {
  double best = 0.0;
  for (const Complex& c : t.coefficients) best = std::max(best, std::abs(c));
  return best;
}

std::vector<Rational> dft_exact_p2(std::span<const Rational> f, std::size_t N, const Limits& limits) {
  const std::uint64_t size = domain_size(2, N);
  if (f.size() != size) throw InvalidArgument("dft_exact_p2: expected 2^N values");
  check_cap(size, limits.dft_points, "dft_exact_p2");
  const Rational scale(BigInt(1), BigInt(size));
  std::vector<Rational> out(size);
  for (std::uint64_t s = 0; s < size; ++s) {
    Rational acc = 0;
    for (std::uint64_t x = 0; x < size; ++x) {
      if (std::popcount(s & x) % 2 == 0) {
        acc += f[x];
      } else {
        acc -= f[x];
      }
    }
    out[s] = acc * scale;
  }
  return out;
}

void write_csv(const FourierTable& t, std::ostream& out) {
  out << "s_digits,re,im\n";
  char buf[64];
  for (std::uint64_t s = 0; s < t.size(); ++s) {
    const auto digits = point_digits(s, t.p, t.N);
    for (std::size_t k = 0; k < digits.size(); ++k) {
      if (t.p > 10 && k > 0) out << ':';
      out << digits[k];
    }
    std::snprintf(buf, sizeof buf, ",%.17g", t.coefficients[s].real());
    out << buf;
    std::snprintf(buf, sizeof buf, ",%.17g\n", t.coefficients[s].imag());
    out << buf;
  }
}

}  // namespace fpcomm::fourier
