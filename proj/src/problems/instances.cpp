#include "fpcomm/problems/instances.hpp"

#include <algorithm>
#include <string>

#include "fpcomm/errors.hpp"

namespace fpcomm::problems {

namespace {

void promise(bool holds, const char* what) {
  if (!holds) throw PromiseViolation(std::string("generator broke its promise: ") + what);
}

FpVector random_vector(const PrimeField& field, std::size_t n, bool nonzero_entries, Rng& rng) {
  std::vector<ff::Elem> v(n);
  const std::uint32_t p = field.modulus();
  for (auto& e : v) {
    e = nonzero_entries ? static_cast<ff::Elem>(1 + uniform_below(rng, p - 1)) : static_cast<ff::Elem>(uniform_below(rng, p));
  }
  return FpVector(field, std::move(v));
}

}  // namespace

RankInstance gen_rank_instance(std::size_t n, std::uint32_t p, std::size_t target, std::size_t k, Rng& rng) {
  if (k + 1 > n) throw InvalidArgument("gen_rank_instance: need k + 1 <= n");
  if (target != k && target != k + 1) throw InvalidArgument("gen_rank_instance: target must be k or k + 1");
  const PrimeField field(p);
  const FpMatrix z = ff::random_of_rank(field, n, target, rng);
  FpMatrix x = FpMatrix::random(field, n, n, rng);
  FpMatrix y = z - x;
  promise(ff::mat_rank(x + y) == target, "rank(x + y)");
  return RankInstance{std::move(x), std::move(y), k, target};
}

InverseInstance gen_inverse_instance(std::size_t n, std::uint32_t p, Rng& rng) {
  const PrimeField field(p);
  const FpMatrix z = ff::random_invertible(field, n, rng);
  FpMatrix x = FpMatrix::random(field, n, n, rng);
  FpMatrix y = z - x;
  promise(ff::mat_rank(x + y) == n, "x + y invertible");
  return InverseInstance{std::move(x), std::move(y)};
}

SlsInstance gen_sls_instance(std::size_t n, const FpVector& b, Rng& rng) {
  if (b.size() != n) throw DimensionMismatch("gen_sls_instance: b has the wrong length");
  if (b.is_zero()) throw ZeroVector("gen_sls_instance: b must be nonzero");
  InverseInstance inv = gen_inverse_instance(n, b.field().modulus(), rng);
  return SlsInstance{std::move(inv.x), std::move(inv.y), b};
}

IpInstance gen_ip_instance(std::size_t n, std::uint32_t p, IpVariant variant, std::uint32_t target, Rng& rng) {
  if (target > 1) throw InvalidArgument("gen_ip_instance: target must be 0 or 1");
  if (n == 0) throw InvalidArgument("gen_ip_instance: n must be positive");
  const PrimeField field(p);
  const bool x_nonzero = variant == IpVariant::IPprime;
  const bool y_nonzero = variant != IpVariant::IP;
  if (p == 2 && x_nonzero && y_nonzero && (n % 2) != target) {
    throw InvalidArgument("gen_ip_instance: over F_2 with all-one vectors <x,y> = n mod 2");
  }
  for (;;) {
    FpVector x = random_vector(field, n, x_nonzero, rng);
    FpVector y = random_vector(field, n, y_nonzero, rng);
    if (ff::dot(x, y) != target) continue;
    return IpInstance{std::move(x), std::move(y), variant};
  }
}

std::size_t hamming_weight_of_sum(const HamInstance& h) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < h.x.size(); ++i) w += (h.x[i] ^ h.y[i]) & 1U;
  return w;
}

HamInstance gen_ham_instance(std::size_t n, std::size_t k, std::size_t target, Rng& rng) {
  if (k + 2 > n) throw InvalidArgument("gen_ham_instance: need k + 2 <= n");
  if (target != k && target != k + 2) throw InvalidArgument("gen_ham_instance: target must be k or k + 2");
  std::vector<std::size_t> positions(n);
  for (std::size_t i = 0; i < n; ++i) positions[i] = i;
  // Partial Fisher-Yates: the first `target` positions form a uniform subset.
  for (std::size_t i = 0; i < target; ++i) std::swap(positions[i], positions[i + uniform_below(rng, n - i)]);
  HamInstance h;
  h.k = k;
  h.x.resize(n);
  h.y.resize(n);
  for (auto& b : h.x) b = static_cast<std::uint8_t>(uniform_below(rng, 2));
  h.y = h.x;
  for (std::size_t i = 0; i < target; ++i) h.y[positions[i]] ^= 1U;
  promise(hamming_weight_of_sum(h) == target, "weight(x + y)");
  return h;
}

std::size_t intersection_dimension(const SubspaceInstance& s) {
  return ff::mat_rank(s.basisA) + ff::mat_rank(s.basisB) - ff::mat_rank(ff::vstack(s.basisA, s.basisB));
}

SubspaceInstance gen_subspace_instance(std::size_t n, std::uint32_t p, std::size_t intersectDim, Rng& rng) {
  if (n == 0 || n % 2 != 0) throw InvalidArgument("gen_subspace_instance: n must be even and positive");
  if (intersectDim > 1) throw InvalidArgument("gen_subspace_instance: intersection dimension must be 0 or 1");
  const PrimeField field(p);
  const std::size_t h = n / 2;
  const FpMatrix g = ff::random_invertible(field, n, rng);
  FpMatrix a = g.block(0, 0, h, n);
  FpMatrix b(field, h, n);
  if (intersectDim == 0) {
    b = g.block(h, 0, h, n);
  } else {
    b.paste(g.block(0, 0, 1, n), 0, 0);
    if (h > 1) b.paste(g.block(h, 0, h - 1, n), 1, 0);
  }
  // Random bases of the same row spaces.
  a = ff::random_invertible(field, h, rng) * a;
  b = ff::random_invertible(field, h, rng) * b;
  SubspaceInstance s{std::move(a), std::move(b)};
  promise(ff::mat_rank(s.basisA) == h && ff::mat_rank(s.basisB) == h, "full row rank bases");
  promise(intersection_dimension(s) == intersectDim, "intersection dimension");
  return s;
}

}  // namespace fpcomm::problems
