#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "fpcomm/fourier/group_function.hpp"
#include "fpcomm/limits.hpp"
#include "fpcomm/numeric.hpp"

namespace fpcomm::fourier {

// f^(s) = p^-N sum_x w^(-<s,x>) f(x), w = exp(2 pi i / p). Naive O(p^2N) sum,
// one fixed summation order per coefficient. Throws SizeLimit when
// p^N > limits.dft_points.
FourierTable dft(const GroupFunction& f, const Limits& limits = {});

// The same transform read as a function on F_p^N (so it can be transformed again).
GroupFunction as_function(const FourierTable& t);

// Reconstruction f = p^N conj( (conj f^)^ ).
GroupFunction inverse_dft(const FourierTable& t, const Limits& limits = {});

// max |reconstructed - f| after a forward transform and the reconstruction above.
double idft_roundtrip(const GroupFunction& f, const Limits& limits = {});

// | sum_s |f^(s)|^2 - p^-N sum_x |f(x)|^2 |
double parseval_gap(const GroupFunction& f, const FourierTable& t);

double fourier_l1(const FourierTable& t);
double fourier_linf(const FourierTable& t);

// Exact transform over F_2^N, where w = -1: f^(s) = 2^-N sum_x (-1)^<s,x> f(x).
std::vector<Rational> dft_exact_p2(std::span<const Rational> f, std::size_t N, const Limits& limits = {});

// CSV with header "s_digits,re,im". Digits are little-endian, concatenated for
// p <= 10 and ':'-separated otherwise.
void write_csv(const FourierTable& t, std::ostream& out);

}  // namespace fpcomm::fourier
