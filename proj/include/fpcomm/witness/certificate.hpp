#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpcomm/fourier/group_function.hpp"
#include "fpcomm/limits.hpp"
#include "fpcomm/numeric.hpp"
#include "json.hpp"

namespace fpcomm::witness {

// Lower bound on ||g^||_1^eps from a witness psi:
//   bound = (correlation - outsideMass - epsilon * witnessL1) / dualDenominator
// with correlation = <g, psi dom(g)>, outsideMass = ||psi (1 - dom(g))||_1,
// witnessL1 = ||psi||_1 and dualDenominator = p^N ||psi^||_inf.
struct WitnessCertificate {
  double epsilon = 0.0;
  double correlation = 0.0;
  double outsideMass = 0.0;
  double witnessL1 = 0.0;
  double dualDenominator = 0.0;
  double bound = 0.0;
  // log2(bound); stays finite when the terms themselves overflow. NaN if bound <= 0.
  double log2Bound = 0.0;
};

// Same quotient in exact arithmetic (p = 2 witnesses are real and rational).
struct ExactCertificate {
  Rational epsilon;
  Rational correlation;
  Rational outsideMass;
  Rational witnessL1;
  Rational dualDenominator;
  Rational bound;

  WitnessCertificate to_double() const;
};

// psi must be real-valued. Throws DimensionMismatch when (p, N) differ,
// ZeroWitness for psi = 0, InvalidArgument for epsilon outside (0, 1) or a
// non-real psi, SizeLimit above limits.dft_points.
WitnessCertificate dual_bound(const fourier::PartialSignFunction& g, const fourier::GroupFunction& psi,
                              double epsilon, const Limits& limits = {});

// Exact p = 2 version; psi is indexed like the points of F_2^N.
ExactCertificate dual_bound_exact(const fourier::PartialSignFunction& g, const std::vector<Rational>& psi,
                                  const Rational& epsilon, const Limits& limits = {});

// Sign function of the rank problem: +1 on full rank, -1 on rank n-1,
// undefined elsewhere.
fourier::PartialSignFunction rank_sign_function(std::size_t n, std::uint32_t p, const Limits& limits = {});

// Witness (-1)^n theta^ on F_p^(n x n).
fourier::GroupFunction rank_witness(std::size_t n, std::uint32_t p, const Limits& limits = {});

// The rank certificate from closed forms only. Exact for moderate n, log-space beyond.
WitnessCertificate rank_witness_bound(std::uint64_t n, std::uint64_t p, double epsilon);
ExactCertificate rank_witness_bound_exact(std::uint64_t n, std::uint64_t p, const Rational& epsilon);

// 2(1 + (p - p^(1-n))/(p-1)) - (1+eps) prod_{k<n} (1+p^k)/p^k.
double rank_bound_constant(std::uint64_t n, std::uint64_t p, double epsilon);
Rational rank_bound_constant_exact(std::uint64_t n, std::uint64_t p, const Rational& epsilon);

struct BoundReport {
  double traceNormLower = 0.0;        // p^N * bound (may be inf for huge N)
  double log2TraceNormLower = 0.0;
  double mainTermBits = 0.0;          // 2 log2(bound)
  std::string caveat;
};

inline constexpr const char* kMainTermCaveat =
    "main term only: the additive O(log n + log 1/delta) terms and the hidden constant are omitted";

// Throws NonpositiveBound when cert.bound <= 0.
BoundReport comm_bound_main_term(const WitnessCertificate& cert, std::uint64_t p, std::uint64_t N);

nlohmann::json to_json(const WitnessCertificate& cert);
nlohmann::json to_json(const ExactCertificate& cert);
nlohmann::json to_json(const BoundReport& report);

}  // namespace fpcomm::witness
