#include "fpcomm/witness/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fpcomm/errors.hpp"
#include "fpcomm/ff/matrix.hpp"
#include "fpcomm/fourier/theta.hpp"
#include "fpcomm/fourier/transform.hpp"

namespace fpcomm::witness {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidArgument("epsilon must lie in (0, 1)");
}

void check_epsilon(const Rational& epsilon) {
  if (epsilon <= 0 || epsilon >= 1) throw InvalidArgument("epsilon must lie in (0, 1)");
}

double safe_log2(double v) { return v > 0.0 ? std::log2(v) : kNaN; }

// log2(p^-n prod_{k=1}^n (p^k - 1)).
double log2_scale(std::uint64_t n, std::uint64_t p) {
  const double lp = std::log2(static_cast<double>(p));
  double acc = -static_cast<double>(n) * lp;
  for (std::uint64_t k = 1; k <= n; ++k) {
    acc += static_cast<double>(k) * lp + std::log1p(-std::pow(static_cast<double>(p), -static_cast<double>(k))) / std::log(2.0);
  }
  return acc;
}

// Exact path for rank_witness_bound below this n; log-space above.
constexpr std::uint64_t kExactRankN = 24;

}  // namespace

WitnessCertificate ExactCertificate::to_double() const {
  WitnessCertificate c;
  c.epsilon = fpcomm::to_double(epsilon);
  c.correlation = fpcomm::to_double(correlation);
  c.outsideMass = fpcomm::to_double(outsideMass);
  c.witnessL1 = fpcomm::to_double(witnessL1);
  c.dualDenominator = fpcomm::to_double(dualDenominator);
  c.bound = fpcomm::to_double(bound);
  c.log2Bound = safe_log2(c.bound);
  return c;
}

WitnessCertificate dual_bound(const fourier::PartialSignFunction& g, const fourier::GroupFunction& psi,
                              double epsilon, const Limits& limits) {
  if (g.p != psi.p || g.N != psi.N) throw DimensionMismatch("dual_bound: g and psi live on different domains");
  check_epsilon(epsilon);
  bool nonzero = false;
  for (const auto& v : psi.values) {
    if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v.real()))) {
      throw InvalidArgument("dual_bound: psi must be real-valued");
    }
    nonzero = nonzero || v.real() != 0.0;
  }
  if (!nonzero) throw ZeroWitness("dual_bound: psi is identically zero");

  WitnessCertificate c;
  c.epsilon = epsilon;
  for (std::uint64_t x = 0; x < psi.size(); ++x) {
    const double v = psi.values[x].real();
    c.witnessL1 += std::abs(v);
    if (g.defined(x)) {
      c.correlation += g.classes[x] * v;
    } else {
      c.outsideMass += std::abs(v);
    }
  }
  c.dualDenominator = static_cast<double>(psi.size()) * fourier::fourier_linf(fourier::dft(psi, limits));
  c.bound = (c.correlation - c.outsideMass - epsilon * c.witnessL1) / c.dualDenominator;
  c.log2Bound = safe_log2(c.bound);
  return c;
}

ExactCertificate dual_bound_exact(const fourier::PartialSignFunction& g, const std::vector<Rational>& psi,
                                  const Rational& epsilon, const Limits& limits) {
  if (g.p != 2) throw UnsupportedField("dual_bound_exact: only p = 2 has a rational transform");
  if (psi.size() != g.size()) throw DimensionMismatch("dual_bound_exact: g and psi live on different domains");
  check_epsilon(epsilon);
  if (std::all_of(psi.begin(), psi.end(), [](const Rational& v) { return v == 0; })) {
    throw ZeroWitness("dual_bound_exact: psi is identically zero");
  }
  ExactCertificate c;
  c.epsilon = epsilon;
  for (std::uint64_t x = 0; x < psi.size(); ++x) {
    const Rational a = abs(psi[x]);
    c.witnessL1 += a;
    if (g.defined(x)) {
      c.correlation += g.classes[x] * psi[x];
    } else {
      c.outsideMass += a;
    }
  }
  Rational linf = 0;
  for (const Rational& v : fourier::dft_exact_p2(psi, g.N, limits)) linf = std::max(linf, Rational(abs(v)));
  c.dualDenominator = Rational(psi.size()) * linf;
  c.bound = (c.correlation - c.outsideMass - epsilon * c.witnessL1) / c.dualDenominator;
  return c;
}

fourier::PartialSignFunction rank_sign_function(std::size_t n, std::uint32_t p, const Limits& limits) {
  if (n == 0) throw InvalidArgument("rank_sign_function: n must be positive");
  const ff::PrimeField field(p);
  const std::uint64_t size = fourier::domain_size(p, n * n);
  if (size > limits.dft_points) throw SizeLimit("rank_sign_function: p^(n^2) exceeds cap");
  std::vector<std::int8_t> classes(size, 0);
  for (std::uint64_t x = 0; x < size; ++x) {
    const std::size_t r = ff::mat_rank(ff::FpMatrix::from_index(field, n, n, x));
    if (r == n) classes[x] = 1;
    if (r + 1 == n) classes[x] = -1;
  }
  return fourier::PartialSignFunction::make(p, n * n, std::move(classes));
}

fourier::GroupFunction rank_witness(std::size_t n, std::uint32_t p, const Limits& limits) {
  const fourier::FourierTable t = fourier::dft(fourier::theta(n, p, limits), limits);
  fourier::GroupFunction psi{p, n * n, t.coefficients};
  if (n % 2 == 1) {
    for (auto& v : psi.values) v = -v;
  }
  // theta^ is real: it only depends on rank(s), and rank(-s) = rank(s).
  for (auto& v : psi.values) v = v.real();
  return psi;
}

Rational rank_bound_constant_exact(std::uint64_t n, std::uint64_t p, const Rational& epsilon) {
  if (n == 0) throw InvalidArgument("rank_bound_constant: n must be positive");
  const Rational pr(p);
  const Rational first = 1 + (pr - Rational(BigInt(1), big_pow(p, n - 1))) / (pr - 1);
  Rational s = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    const BigInt pk = big_pow(p, k);
    s *= Rational(1 + pk, pk);
  }
  return 2 * first - (1 + epsilon) * s;
}

double rank_bound_constant(std::uint64_t n, std::uint64_t p, double epsilon) {
  if (n == 0) throw InvalidArgument("rank_bound_constant: n must be positive");
  const double pd = static_cast<double>(p);
  const double first = 1.0 + (pd - std::pow(pd, 1.0 - static_cast<double>(n))) / (pd - 1.0);
  double s = 1.0;
  for (std::uint64_t k = 0; k < n; ++k) s *= 1.0 + std::pow(pd, -static_cast<double>(k));
  return 2.0 * first - (1.0 + epsilon) * s;
}

ExactCertificate rank_witness_bound_exact(std::uint64_t n, std::uint64_t p, const Rational& epsilon) {
  if (n == 0) throw InvalidArgument("rank_witness_bound: n must be positive");
  check_epsilon(epsilon);
  BigInt prod = 1;
  for (std::uint64_t k = 1; k <= n; ++k) prod *= big_pow(p, k) - 1;
  const Rational scale(prod, big_pow(p, n));
  const Rational pr(p);
  ExactCertificate c;
  c.epsilon = epsilon;
  c.correlation = (1 + (pr - Rational(BigInt(1), big_pow(p, n - 1))) / (pr - 1)) * scale;
  c.witnessL1 = fourier::theta_hat_l1_exact(n, p);
  c.outsideMass = c.witnessL1 - c.correlation;
  c.dualDenominator = 1;
  c.bound = c.correlation - c.outsideMass - epsilon * c.witnessL1;
  return c;
}

WitnessCertificate rank_witness_bound(std::uint64_t n, std::uint64_t p, double epsilon) {
  if (n == 0) throw InvalidArgument("rank_witness_bound: n must be positive");
  check_epsilon(epsilon);
  const double constant = rank_bound_constant(n, p, epsilon);
  const double log_scale = log2_scale(n, p);
  WitnessCertificate c;
  if (n <= kExactRankN) {
    // Rational epsilon carrying the double exactly.
    const Rational eps_exact(epsilon);
    c = rank_witness_bound_exact(n, p, eps_exact).to_double();
  } else {
    const double pd = static_cast<double>(p);
    const double first = 1.0 + (pd - std::pow(pd, 1.0 - static_cast<double>(n))) / (pd - 1.0);
    double s = 1.0;
    for (std::uint64_t k = 0; k < n; ++k) s *= 1.0 + std::pow(pd, -static_cast<double>(k));
    const double scale = std::exp2(log_scale);
    c.epsilon = epsilon;
    c.correlation = first * scale;
    c.witnessL1 = s * scale;
    c.outsideMass = c.witnessL1 - c.correlation;
    c.dualDenominator = 1.0;
    c.bound = constant * scale;
  }
  c.log2Bound = constant > 0.0 ? std::log2(constant) + log_scale : kNaN;
  return c;
}

BoundReport comm_bound_main_term(const WitnessCertificate& cert, std::uint64_t p, std::uint64_t N) {
  if (!(cert.bound > 0.0)) throw NonpositiveBound("comm_bound_main_term: certificate bound is not positive");
  const double lb = std::isfinite(cert.log2Bound) ? cert.log2Bound : std::log2(cert.bound);
  BoundReport r;
  r.log2TraceNormLower = static_cast<double>(N) * std::log2(static_cast<double>(p)) + lb;
  r.traceNormLower = std::exp2(r.log2TraceNormLower);
  r.mainTermBits = 2.0 * lb;
  r.caveat = kMainTermCaveat;
  return r;
}

namespace {

nlohmann::json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

nlohmann::json to_json(const WitnessCertificate& cert) {
  return {
      {"epsilon", cert.epsilon},
      {"correlation", number_or_null(cert.correlation)},
      {"outsideMass", number_or_null(cert.outsideMass)},
      {"witnessL1", number_or_null(cert.witnessL1)},
      {"dualDenominator", number_or_null(cert.dualDenominator)},
      {"bound", number_or_null(cert.bound)},
      {"log2Bound", number_or_null(cert.log2Bound)},
      {"mainTermBits", number_or_null(2.0 * cert.log2Bound)},
  };
}

nlohmann::json to_json(const ExactCertificate& cert) {
  const WitnessCertificate d = cert.to_double();
  return {
      {"epsilon", to_string(cert.epsilon)},
      {"correlation", to_string(cert.correlation)},
      {"outsideMass", to_string(cert.outsideMass)},
      {"witnessL1", to_string(cert.witnessL1)},
      {"dualDenominator", to_string(cert.dualDenominator)},
      {"bound", to_string(cert.bound)},
      {"mainTermBits", number_or_null(2.0 * d.log2Bound)},
  };
}

nlohmann::json to_json(const BoundReport& report) {
  return {
      {"traceNormLower", number_or_null(report.traceNormLower)},
      {"log2TraceNormLower", report.log2TraceNormLower},
      {"mainTermBits", report.mainTermBits},
      {"caveat", report.caveat},
  };
}

}  // namespace fpcomm::witness
