#pragma once

#include <cstddef>
#include <vector>

#include "fpcomm/fourier/group_function.hpp"
#include "fpcomm/limits.hpp"

namespace fpcomm::fourier {

// Dense square complex matrix, row-major.
struct ComplexMatrix {
  std::size_t n = 0;
  std::vector<Complex> data;

  explicit ComplexMatrix(std::size_t size = 0) : n(size), data(size * size) {}
  Complex& operator()(std::size_t r, std::size_t c) { return data[r * n + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data[r * n + c]; }
};

// F[x, y] = g(x + y). Throws SizeLimit when p^N > limits.spectral_points.
ComplexMatrix plus_composed_matrix(const GroupFunction& g, const Limits& limits = {});

// A^dagger A.
ComplexMatrix gram(const ComplexMatrix& a);

// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, ascending.
// Iterates until the off-diagonal Frobenius norm is at most rel_tol times the
// full Frobenius norm.
std::vector<double> hermitian_eigenvalues(ComplexMatrix a, double rel_tol = 1e-12, int max_sweeps = 100);

// Singular values, descending, from the Hermitian dilation of F.
std::vector<double> singular_values(const ComplexMatrix& f);

struct SpectrumReport {
  std::vector<double> singularValues;           // descending
  std::vector<double> scaledFourierMagnitudes;  // p^N |g^(s)|, descending
  double maxDeviation = 0.0;
};

// Throws SizeLimit when p^N > limits.spectral_points.
SpectrumReport verify_spectrum(const GroupFunction& g, const Limits& limits = {});

}  // namespace fpcomm::fourier
