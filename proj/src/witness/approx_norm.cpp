#include "fpcomm/witness/approx_norm.hpp"

#include <bit>
#include <string>

#include "fpcomm/errors.hpp"
#include "fpcomm/fourier/transform.hpp"
#include "fpcomm/witness/simplex.hpp"

namespace fpcomm::witness {

ApproxNormLP approx_fourier_l1_exact(const fourier::PartialSignFunction& g, const Rational& epsilon,
                                     const Limits& limits) {
  if (g.p != 2) throw UnsupportedField("approx_fourier_l1_exact: only p = 2 is supported");
  if (epsilon <= 0 || epsilon >= 1) throw InvalidArgument("epsilon must lie in (0, 1)");
  const std::uint64_t size = g.size();
  if (size > limits.lp_points) {
    throw SizeLimit("approx_fourier_l1_exact: 2^N = " + std::to_string(size) + " exceeds cap " +
                    std::to_string(limits.lp_points));
  }

  // phi = lo + u with 0 <= u <= width; variables are u (first) then t_s >= |phi^(s)|.
  std::vector<Rational> lo(size);
  std::vector<Rational> width(size);
  for (std::uint64_t x = 0; x < size; ++x) {
    switch (g.classes[x]) {
      case 1: lo[x] = 1 - epsilon; width[x] = 2 * epsilon; break;
      case -1: lo[x] = -1 - epsilon; width[x] = 2 * epsilon; break;
      default: lo[x] = -1 - epsilon; width[x] = 2 + 2 * epsilon; break;
    }
  }
  const Rational h(BigInt(1), BigInt(size));
  auto character = [&](std::uint64_t s, std::uint64_t x) { return std::popcount(s & x) % 2 == 0 ? h : Rational(-h); };

  LinearProgram lp(2 * size);
  std::vector<Rational> objective(2 * size, Rational(0));
  for (std::uint64_t s = 0; s < size; ++s) objective[size + s] = 1;
  lp.set_objective(objective);
  for (std::uint64_t s = 0; s < size; ++s) {
    Rational shift = 0;  // phi^(s) at u = 0
    std::vector<Rational> plus(2 * size, Rational(0));
    std::vector<Rational> minus(2 * size, Rational(0));
    for (std::uint64_t x = 0; x < size; ++x) {
      const Rational c = character(s, x);
      shift += c * lo[x];
      plus[x] = -c;
      minus[x] = c;
    }
    plus[size + s] = 1;
    minus[size + s] = 1;
    lp.add_constraint(plus, Sense::GreaterEqual, shift);     // t_s - phi^(s) >= 0
    lp.add_constraint(minus, Sense::GreaterEqual, -shift);   // t_s + phi^(s) >= 0
  }
  for (std::uint64_t x = 0; x < size; ++x) {
    std::vector<Rational> row(2 * size, Rational(0));
    row[x] = 1;
    lp.add_constraint(row, Sense::LessEqual, width[x]);
  }

  const LpSolution sol = lp.minimize();
  if (sol.status != LpStatus::Optimal) throw Error("approx_fourier_l1_exact: simplex did not reach an optimum");

  ApproxNormLP out;
  out.N = g.N;
  out.epsilon = epsilon;
  out.optimum = sol.value;
  out.pivots = sol.pivots;
  out.optimizer.resize(size);
  for (std::uint64_t x = 0; x < size; ++x) out.optimizer[x] = lo[x] + sol.x[x];
  return out;
}

}  // namespace fpcomm::witness
