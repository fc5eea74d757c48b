#include "fpcomm/multiparty/group.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "fpcomm/errors.hpp"
#include "fpcomm/fourier/group_function.hpp"

namespace fpcomm::multiparty {

namespace {

std::size_t bits_for(std::uint64_t values) {
  return values <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(values - 1));
}

std::string to_bits(std::uint64_t v, std::size_t width) {
  std::string out(width, '0');
  for (std::size_t i = 0; i < width; ++i) out[width - 1 - i] = ((v >> i) & 1U) ? '1' : '0';
  return out;
}

std::uint64_t from_bits(const std::string& bits, std::size_t begin, std::size_t width) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < width; ++i) v = (v << 1U) | (bits.at(begin + i) == '1' ? 1U : 0U);
  return v;
}

}  // namespace

std::string Group::describe(Element a) const { return std::to_string(a); }

std::size_t Group::encoded_bits() const { return bits_for(size()); }

std::string Group::encode(Element a) const { return to_bits(a, encoded_bits()); }

Element Group::decode(const std::string& bits) const {
  if (bits.size() != encoded_bits()) throw InvalidArgument("decode: wrong message width");
  return from_bits(bits, 0, bits.size());
}

bool Group::abelian() const {
  const std::uint64_t n = std::min<std::uint64_t>(size(), 64);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (op(a, b) != op(b, a)) return false;
    }
  }
  return true;
}

MatrixAdditiveGroup::MatrixAdditiveGroup(std::size_t n, std::uint32_t p)
    : n_(n), field_(p), size_(fourier::domain_size(p, n * n)), entry_bits_(bits_for(p)) {
  if (n == 0) throw InvalidArgument("matrix group: n must be positive");
}

std::string MatrixAdditiveGroup::name() const {
  return "M_" + std::to_string(n_) + "(F_" + std::to_string(field_.modulus()) + ")";
}

Element MatrixAdditiveGroup::op(Element a, Element b) const {
  return fourier::add_points(a, b, field_.modulus(), n_ * n_);
}

Element MatrixAdditiveGroup::inverse(Element a) const {
  const std::uint32_t p = field_.modulus();
  Element out = 0;
  Element weight = 1;
  for (std::size_t k = 0; k < n_ * n_; ++k) {
    out += ((p - a % p) % p) * weight;
    a /= p;
    weight *= p;
  }
  return out;
}

std::string MatrixAdditiveGroup::describe(Element a) const { return matrix(a).to_string(); }

std::size_t MatrixAdditiveGroup::encoded_bits() const { return n_ * n_ * entry_bits_; }

std::string MatrixAdditiveGroup::encode(Element a) const {
  std::string out;
  const std::uint32_t p = field_.modulus();
  for (std::size_t k = 0; k < n_ * n_; ++k) {
    out += to_bits(a % p, entry_bits_);
    a /= p;
  }
  return out;
}

Element MatrixAdditiveGroup::decode(const std::string& bits) const {
  if (bits.size() != encoded_bits()) throw InvalidArgument("decode: wrong message width");
  const std::uint32_t p = field_.modulus();
  Element out = 0;
  Element weight = 1;
  for (std::size_t k = 0; k < n_ * n_; ++k) {
    out += from_bits(bits, k * entry_bits_, entry_bits_) * weight;
    weight *= p;
  }
  return out;
}

BitVectorGroup::BitVectorGroup(std::size_t n) : n_(n) {
  if (n == 0 || n > 40) throw InvalidArgument("bit vector group: n must lie in [1, 40]");
}

std::string BitVectorGroup::name() const { return "F_2^" + std::to_string(n_); }

UnitVectorGroup::UnitVectorGroup(std::size_t n, std::uint32_t p)
    : n_(n), field_(p), size_(fourier::domain_size(p - 1, n)) {
  if (n == 0) throw InvalidArgument("unit vector group: n must be positive");
}

std::string UnitVectorGroup::name() const {
  return "(F_" + std::to_string(field_.modulus()) + "^*)^" + std::to_string(n_);
}

std::vector<ff::Elem> UnitVectorGroup::values(Element a) const {
  const std::uint32_t q = field_.modulus() - 1;
  std::vector<ff::Elem> v(n_);
  for (auto& e : v) {
    e = static_cast<ff::Elem>(a % q + 1);
    a /= q;
  }
  return v;
}

Element UnitVectorGroup::from_values(const std::vector<ff::Elem>& v) const {
  const std::uint32_t q = field_.modulus() - 1;
  Element out = 0;
  for (std::size_t k = v.size(); k-- > 0;) out = out * q + (v[k] - 1);
  return out;
}

Element UnitVectorGroup::op(Element a, Element b) const {
  auto va = values(a);
  const auto vb = values(b);
  for (std::size_t k = 0; k < n_; ++k) va[k] = field_.mul(va[k], vb[k]);
  return from_values(va);
}

Element UnitVectorGroup::inverse(Element a) const {
  auto v = values(a);
  for (auto& e : v) e = field_.inv(e);
  return from_values(v);
}

std::string UnitVectorGroup::describe(Element a) const {
  std::string out = "(";
  const auto v = values(a);
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + ")";
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

Perm perm_from_index(std::uint64_t index, std::size_t n) {
  std::vector<std::uint8_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  Perm out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t f = factorial(n - 1 - i);
    const std::uint64_t d = index / f;
    index %= f;
    out[i] = pool[d];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return out;
}

std::uint64_t perm_index(const Perm& perm) {
  const std::size_t n = perm.size();
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += perm[j] < perm[i] ? 1 : 0;
    index += smaller * factorial(n - 1 - i);
  }
  return index;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm invert(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<std::uint8_t>(i);
  return out;
}

std::vector<std::size_t> cycle_type(const Perm& perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> lengths;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      if (j >= n) throw InvalidArgument("not a permutation");
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::size_t cycle_count(const Perm& perm) {
  std::vector<bool> hit(perm.size(), false);
  for (auto v : perm) {
    if (v >= perm.size() || hit[v]) throw InvalidArgument("cycle_count: not a permutation");
    hit[v] = true;
  }
  return cycle_type(perm).size();
}

SymmetricGroup::SymmetricGroup(std::size_t n) : n_(n), size_(factorial(n)) {
  if (n == 0 || n > 12) throw InvalidArgument("symmetric group: n must lie in [1, 12]");
}

std::string SymmetricGroup::name() const { return "S_" + std::to_string(n_); }

Element SymmetricGroup::op(Element a, Element b) const {
  return perm_index(compose(perm_from_index(a, n_), perm_from_index(b, n_)));
}

Element SymmetricGroup::inverse(Element a) const { return perm_index(invert(perm_from_index(a, n_))); }

std::string SymmetricGroup::describe(Element a) const {
  const Perm p = perm_from_index(a, n_);
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) out += (i ? " " : "") + std::to_string(p[i] + 1);
  return out + "]";
}

}  // namespace fpcomm::multiparty
