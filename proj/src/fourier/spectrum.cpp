#include "fpcomm/fourier/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "fpcomm/errors.hpp"
#include "fpcomm/fourier/transform.hpp"

namespace fpcomm::fourier {

ComplexMatrix plus_composed_matrix(const GroupFunction& g, const Limits& limits) {
  const std::uint64_t size = g.size();
  if (size > limits.spectral_points) {
    throw SizeLimit("plus_composed_matrix: p^N = " + std::to_string(size) + " exceeds cap " +
                    std::to_string(limits.spectral_points));
  }
  ComplexMatrix f(size);
  for (std::uint64_t x = 0; x < size; ++x) {
    for (std::uint64_t y = 0; y < size; ++y) f(x, y) = g.values[add_points(x, y, g.p, g.N)];
  }
  return f;
}

ComplexMatrix gram(const ComplexMatrix& a) {
  ComplexMatrix out(a.n);
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t j = i; j < a.n; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < a.n; ++k) acc += std::conj(a(k, i)) * a(k, j);
      out(i, j) = acc;
      out(j, i) = std::conj(acc);
    }
    out(i, i) = out(i, i).real();
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(ComplexMatrix a, double rel_tol, int max_sweeps) {
  const std::size_t n = a.n;
  double total = 0.0;
  for (const Complex& v : a.data) total += std::norm(v);
  const double threshold = rel_tol * rel_tol * total;

  auto off_diagonal = [&] {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) off += std::norm(a(i, j));
      }
    }
    return off;
  };

  for (int sweep = 0; sweep < max_sweeps && off_diagonal() > threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        // Phase step: scale row/column q so that a(p, q) becomes real and positive.
        const Complex phase = a(p, q) / mag;
        for (std::size_t k = 0; k < n; ++k) {
          a(k, q) *= std::conj(phase);
          a(q, k) *= phase;
        }
        a(p, q) = mag;
        a(q, p) = mag;
        // Real rotation zeroing (p, q).
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex kp = a(k, p);
          const Complex kq = a(k, q);
          a(k, p) = c * kp - s * kq;
          a(k, q) = s * kp + c * kq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex pk = a(p, k);
          const Complex qk = a(q, k);
          a(p, k) = c * pk - s * qk;
          a(q, k) = s * pk + c * qk;
        }
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> singular_values(const ComplexMatrix& f) {
  // Eigenvalues of [[0, F], [F^dagger, 0]] are +-sigma_i; the top half are the
  // singular values, with no square root to blur the ones near zero.
  const std::size_t n = f.n;
  ComplexMatrix h(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      h(i, n + j) = f(i, j);
      h(n + j, i) = std::conj(f(i, j));
    }
  }
  const std::vector<double> eig = hermitian_eigenvalues(std::move(h));
  std::vector<double> sv(eig.rbegin(), eig.rbegin() + static_cast<std::ptrdiff_t>(n));
  for (double& v : sv) v = std::max(v, 0.0);
  return sv;
}

SpectrumReport verify_spectrum(const GroupFunction& g, const Limits& limits) {
  SpectrumReport report;
  report.singularValues = singular_values(plus_composed_matrix(g, limits));
  const FourierTable t = dft(g, limits);
  const double scale = static_cast<double>(g.size());
  for (const Complex& c : t.coefficients) report.scaledFourierMagnitudes.push_back(scale * std::abs(c));
  std::sort(report.scaledFourierMagnitudes.begin(), report.scaledFourierMagnitudes.end(), std::greater<>());
  for (std::size_t i = 0; i < report.singularValues.size(); ++i) {
    report.maxDeviation =
        std::max(report.maxDeviation, std::abs(report.singularValues[i] - report.scaledFourierMagnitudes[i]));
  }
  return report;
}

}  // namespace fpcomm::fourier
