#pragma once

// Test-only reference computations. Nothing here calls the elimination,
// transform or closed-form code paths it is used to check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <vector>

#include "fpcomm/ff/matrix.hpp"

namespace oracle {

using fpcomm::ff::Elem;
using fpcomm::ff::FpMatrix;

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Rank as the largest subset of rows admitting no nontrivial vanishing
// combination; every coefficient vector is enumerated.
inline std::size_t brute_rank(const FpMatrix& m) {
  const std::size_t rows = m.rows();
  const std::uint64_t p = m.modulus();
  std::size_t best = 0;
  for (std::uint64_t subset = 1; subset < (1ULL << rows); ++subset) {
    std::vector<std::size_t> chosen;
    for (std::size_t r = 0; r < rows; ++r)
      if (subset >> r & 1U) chosen.push_back(r);
    if (chosen.size() <= best) continue;
    bool independent = true;
    const std::uint64_t combos = ipow(p, chosen.size());
    for (std::uint64_t c = 1; c < combos && independent; ++c) {
      std::uint64_t code = c;
      std::vector<std::uint64_t> coeff(chosen.size());
      for (auto& k : coeff) {
        k = code % p;
        code /= p;
      }
      bool vanishes = true;
      for (std::size_t col = 0; col < m.cols() && vanishes; ++col) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < chosen.size(); ++i) acc += coeff[i] * m(chosen[i], col);
        vanishes = acc % p == 0;
      }
      if (vanishes) independent = false;
    }
    if (independent) best = chosen.size();
  }
  return best;
}

// Naive character sum, straight from the definition, with p^-N normalisation.
inline std::vector<std::complex<double>> naive_dft(const std::vector<std::complex<double>>& f,
                                                   std::uint64_t p, std::size_t N) {
  const std::uint64_t size = ipow(p, N);
  std::vector<std::complex<double>> out(size);
  for (std::uint64_t s = 0; s < size; ++s) {
    std::complex<double> acc = 0;
    for (std::uint64_t x = 0; x < size; ++x) {
      std::uint64_t a = s, b = x, ip = 0;
      for (std::size_t k = 0; k < N; ++k) {
        ip += (a % p) * (b % p);
        a /= p;
        b /= p;
      }
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(ip % p) / static_cast<double>(p);
      acc += std::polar(1.0, angle) * f[x];
    }
    out[s] = acc / static_cast<double>(size);
  }
  return out;
}

// Upper 0.999 quantile of chi-square(df), Wilson-Hilferty approximation.
inline double chi2_critical(double df) {
  const double z = 3.09;
  const double a = 2.0 / (9.0 * df);
  const double t = 1.0 - a + z * std::sqrt(a);
  return df * t * t * t;
}

template <typename Key>
double chi2_statistic(const std::map<Key, std::uint64_t>& observed, double expected_each,
                      std::size_t categories) {
  double stat = 0;
  for (const auto& [key, count] : observed) {
    const double d = static_cast<double>(count) - expected_each;
    stat += d * d / expected_each;
  }
  // Categories never observed contribute expected_each each.
  stat += static_cast<double>(categories - observed.size()) * expected_each;
  return stat;
}

}  // namespace oracle
