#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "fpcomm/ff/prime_field.hpp"
#include "fpcomm/random.hpp"

namespace fpcomm::ff {

class FpVector {
 public:
  FpVector(PrimeField field, std::size_t size);
  // Entries are reduced mod p.
  FpVector(PrimeField field, std::initializer_list<std::int64_t> values);
  FpVector(PrimeField field, std::vector<Elem> values);

  static FpVector unit(PrimeField field, std::size_t size, std::size_t i);
  static FpVector random(PrimeField field, std::size_t size, Rng& rng);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return data_.size(); }
  Elem operator[](std::size_t i) const { return data_[i]; }
  void set(std::size_t i, std::int64_t v) { data_[i] = field_.reduce(v); }
  std::span<const Elem> entries() const noexcept { return data_; }
  bool is_zero() const noexcept;

  bool operator==(const FpVector&) const = default;

 private:
  PrimeField field_;
  std::vector<Elem> data_;
};

Elem dot(const FpVector& a, const FpVector& b);

// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  // Row lists; entries are reduced mod p. Throws DimensionMismatch on ragged rows.
  FpMatrix(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static FpMatrix identity(PrimeField field, std::size_t n);
  static FpMatrix zero(PrimeField field, std::size_t rows, std::size_t cols) {
    return FpMatrix(field, rows, cols);
  }
  static FpMatrix random(PrimeField field, std::size_t rows, std::size_t cols, Rng& rng);

  // Points of F_p^(rows*cols) are indexed by little-endian base-p digits of the
  // row-major entries: entry k carries weight p^k.
  static FpMatrix from_index(PrimeField field, std::size_t rows, std::size_t cols,
                             std::uint64_t index);
  std::uint64_t to_index() const;

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t modulus() const noexcept { return field_.modulus(); }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = field_.reduce(v); }
  std::span<const Elem> entries() const noexcept { return data_; }

  FpMatrix transpose() const;
  FpMatrix operator+(const FpMatrix& rhs) const;
  FpMatrix operator-(const FpMatrix& rhs) const;
  FpMatrix operator-() const;
  FpMatrix operator*(const FpMatrix& rhs) const;
  FpVector operator*(const FpVector& v) const;

  FpVector row(std::size_t r) const;
  FpVector col(std::size_t c) const;
  // Rows [r0, r0+nr) x cols [c0, c0+nc).
  FpMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  // Copies src into this matrix with its top-left corner at (r0, c0).
  void paste(const FpMatrix& src, std::size_t r0, std::size_t c0);

  bool operator==(const FpMatrix&) const = default;

  std::string to_string() const;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

FpMatrix hstack(const FpMatrix& left, const FpMatrix& right);
FpMatrix vstack(const FpMatrix& top, const FpMatrix& bottom);

// Exact Gaussian elimination; pivot = first nonzero entry in the column.
std::size_t mat_rank(const FpMatrix& m);
// Throws DimensionMismatch if not square, SingularMatrix if rank < n.
FpMatrix mat_inverse(const FpMatrix& m);
// Solves m t = b. Throws DimensionMismatch or SingularMatrix.
FpVector solve_linear(const FpMatrix& m, const FpVector& b);

// Uniform over GL(n, F_p) by rejection on uniform matrices.
FpMatrix random_invertible(PrimeField field, std::size_t n, Rng& rng);
// Uniform over n x n matrices of rank exactly r: G1 * diag(I_r, 0) * G2.
FpMatrix random_of_rank(PrimeField field, std::size_t n, std::size_t r, Rng& rng);

}  // namespace fpcomm::ff
