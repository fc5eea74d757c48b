#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fpcomm/ff/matrix.hpp"
#include "fpcomm/random.hpp"

namespace fpcomm::multiparty {

using Element = std::uint64_t;

// Finite group on element codes 0..size()-1.
class Group {
 public:
  virtual ~Group() = default;

  virtual std::string name() const = 0;
  virtual std::uint64_t size() const = 0;
  virtual Element identity() const = 0;
  virtual Element op(Element a, Element b) const = 0;
  virtual Element inverse(Element a) const = 0;
  virtual std::string describe(Element a) const;

  // Fixed-width wire format used by the protocols.
  virtual std::size_t encoded_bits() const;
  virtual std::string encode(Element a) const;
  virtual Element decode(const std::string& bits) const;

  Element random(Rng& rng) const { return uniform_below(rng, size()); }
  bool abelian() const;
};

using GroupPtr = std::shared_ptr<const Group>;

// (M_n(F_p), +); codes are FpMatrix::to_index. Each entry takes ceil(log2 p) bits.
class MatrixAdditiveGroup : public Group {
 public:
  MatrixAdditiveGroup(std::size_t n, std::uint32_t p);
  std::string name() const override;
  std::uint64_t size() const override { return size_; }
  Element identity() const override { return 0; }
  Element op(Element a, Element b) const override;
  Element inverse(Element a) const override;
  std::string describe(Element a) const override;
  std::size_t encoded_bits() const override;
  std::string encode(Element a) const override;
  Element decode(const std::string& bits) const override;

  std::size_t n() const { return n_; }
  const ff::PrimeField& field() const { return field_; }
  ff::FpMatrix matrix(Element a) const { return ff::FpMatrix::from_index(field_, n_, n_, a); }

 private:
  std::size_t n_;
  ff::PrimeField field_;
  std::uint64_t size_;
  std::size_t entry_bits_;
};

// (F_2^n, XOR); bit i of the code is coordinate i.
class BitVectorGroup : public Group {
 public:
  explicit BitVectorGroup(std::size_t n);
  std::string name() const override;
  std::uint64_t size() const override { return std::uint64_t{1} << n_; }
  Element identity() const override { return 0; }
  Element op(Element a, Element b) const override { return a ^ b; }
  Element inverse(Element a) const override { return a; }
  std::size_t n() const { return n_; }

 private:
  std::size_t n_;
};

// ((F_p^*)^n, pointwise product); digit d in base p-1 stands for d + 1.
class UnitVectorGroup : public Group {
 public:
  UnitVectorGroup(std::size_t n, std::uint32_t p);
  std::string name() const override;
  std::uint64_t size() const override { return size_; }
  Element identity() const override { return 0; }
  Element op(Element a, Element b) const override;
  Element inverse(Element a) const override;
  std::string describe(Element a) const override;

  std::size_t n() const { return n_; }
  std::uint32_t p() const { return field_.modulus(); }
  std::vector<ff::Elem> values(Element a) const;
  Element from_values(const std::vector<ff::Elem>& v) const;

 private:
  std::size_t n_;
  ff::PrimeField field_;
  std::uint64_t size_;
};

using Perm = std::vector<std::uint8_t>;  // image of 0..n-1

Perm perm_from_index(std::uint64_t index, std::size_t n);  // Lehmer code
std::uint64_t perm_index(const Perm& perm);
Perm compose(const Perm& a, const Perm& b);  // (a o b)(i) = a(b(i))
Perm invert(const Perm& a);
std::size_t cycle_count(const Perm& perm);  // fixed points count as cycles
std::vector<std::size_t> cycle_type(const Perm& perm);  // descending cycle lengths
std::uint64_t factorial(std::size_t n);

// (S_n, o); codes are Lehmer indices.
class SymmetricGroup : public Group {
 public:
  explicit SymmetricGroup(std::size_t n);
  std::string name() const override;
  std::uint64_t size() const override { return size_; }
  Element identity() const override { return 0; }
  Element op(Element a, Element b) const override;
  Element inverse(Element a) const override;
  std::string describe(Element a) const override;
  std::size_t n() const { return n_; }

 private:
  std::size_t n_;
  std::uint64_t size_;
};

}  // namespace fpcomm::multiparty
