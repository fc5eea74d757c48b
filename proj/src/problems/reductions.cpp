#include "fpcomm/problems/reductions.hpp"

#include "fpcomm/errors.hpp"

namespace fpcomm::problems {

FpMatrix canonical_q(const FpVector& b) {
  if (b.is_zero()) throw ZeroVector("canonical_q: b must be nonzero");
  const PrimeField& field = b.field();
  const std::size_t n = b.size();
  FpMatrix m(field, n, n);
  for (std::size_t r = 0; r < n; ++r) m.set(r, 0, b[r]);
  std::size_t filled = 1;
  for (std::size_t i = 0; i < n && filled < n; ++i) {
    FpMatrix trial = m;
    trial.set(i, filled, 1);
    if (ff::mat_rank(trial.block(0, 0, n, filled + 1)) == filled + 1) {
      m = std::move(trial);
      ++filled;
    }
  }
  return ff::mat_inverse(m);
}

SlsInstance reduce_inverse_to_sls(const FpMatrix& x, const FpMatrix& y, const FpVector& b) {
  if (x.rows() != b.size() || y.rows() != b.size()) throw DimensionMismatch("reduce_inverse_to_sls: size mismatch");
  const FpMatrix q_inv = ff::mat_inverse(canonical_q(b));
  return SlsInstance{q_inv * x, q_inv * y, b};
}

ConcatInstance additive_to_concat(const FpMatrix& x, const FpMatrix& y) {
  if (!x.is_square() || x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimensionMismatch("additive_to_concat: x and y must be square of equal size");
  }
  const FpMatrix id = FpMatrix::identity(x.field(), x.rows());
  return ConcatInstance{ff::hstack(x, -id), ff::hstack(y, id)};
}

std::size_t concat_rank(const ConcatInstance& c) { return ff::mat_rank(ff::vstack(c.top, c.bottom)); }

FpMatrix concat_parity_fix(const FpMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("concat_parity_fix: matrix must be square");
  FpMatrix out(m.field(), m.rows() + 1, m.cols() + 1);
  out.paste(m, 0, 0);
  out.set(m.rows(), m.cols(), 1);
  return out;
}

FpMatrix pad_rank(const FpMatrix& x, std::size_t n) {
  if (!x.is_square() || x.rows() > n) throw DimensionMismatch("pad_rank: need a square k x k matrix with k <= n");
  FpMatrix out(x.field(), n, n);
  out.paste(x, 0, 0);
  return out;
}

IpReduction ip_dprime_to_prime(const FpVector& x, const FpVector& y) {
  if (x.size() != y.size() || x.field() != y.field()) throw DimensionMismatch("ip_dprime_to_prime: size mismatch");
  if (x.field().modulus() == 2) throw InvalidArgument("ip_dprime_to_prime: needs p > 2");
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y[j] == 0) throw PromiseViolation("ip_dprime_to_prime: Bob's vector has a zero entry");
  }
  std::string mask;
  std::vector<ff::Elem> rx;
  std::vector<ff::Elem> ry;
  for (std::size_t j = 0; j < x.size(); ++j) {
    mask.push_back(x[j] == 0 ? '1' : '0');
    if (x[j] != 0) {
      rx.push_back(x[j]);
      ry.push_back(y[j]);
    }
  }
  return IpReduction{std::move(mask),
                     IpInstance{FpVector(x.field(), std::move(rx)), FpVector(x.field(), std::move(ry)), IpVariant::IPprime}};
}

ff::Elem gip_eval(const std::vector<FpVector>& vectors) {
  if (vectors.empty()) throw InvalidArgument("gip_eval: no vectors");
  const PrimeField& field = vectors.front().field();
  const std::size_t n = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != n || v.field() != field) throw DimensionMismatch("gip_eval: vectors differ in length or field");
  }
  ff::Elem sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    ff::Elem prod = 1;
    for (const auto& v : vectors) prod = field.mul(prod, v[j]);
    sum = field.add(sum, prod);
  }
  return sum;
}

}  // namespace fpcomm::problems
