#include "fpcomm/ff/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "fpcomm/errors.hpp"

namespace fpcomm::ff {

FpVector::FpVector(PrimeField field, std::size_t size) : field_(field), data_(size, 0) {}

FpVector::FpVector(PrimeField field, std::initializer_list<std::int64_t> values)
    : field_(field) {
  data_.reserve(values.size());
  for (std::int64_t v : values) data_.push_back(field_.reduce(v));
}

FpVector::FpVector(PrimeField field, std::vector<Elem> values)
    : field_(field), data_(std::move(values)) {
  for (Elem& v : data_) v = field_.reduce(v);
}

FpVector FpVector::unit(PrimeField field, std::size_t size, std::size_t i) {
  FpVector v(field, size);
  v.set(i, 1);
  return v;
}

FpVector FpVector::random(PrimeField field, std::size_t size, Rng& rng) {
  FpVector v(field, size);
  for (std::size_t i = 0; i < size; ++i) v.data_[i] = static_cast<Elem>(uniform_below(rng, field.modulus()));
  return v;
}

bool FpVector::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

Elem dot(const FpVector& a, const FpVector& b) {
  if (a.size() != b.size() || a.field() != b.field()) {
    throw DimensionMismatch("dot: vectors differ in length or field");
  }
  const PrimeField& f = a.field();
  Elem acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

FpMatrix::FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix::FpMatrix(PrimeField field,
                   std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (std::int64_t v : r) data_.push_back(field_.reduce(v));
  }
}

FpMatrix FpMatrix::identity(PrimeField field, std::size_t n) {
  FpMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % field.modulus();
  return m;
}

FpMatrix FpMatrix::random(PrimeField field, std::size_t rows, std::size_t cols, Rng& rng) {
  FpMatrix m(field, rows, cols);
  for (Elem& e : m.data_) e = static_cast<Elem>(uniform_below(rng, field.modulus()));
  return m;
}

FpMatrix FpMatrix::from_index(PrimeField field, std::size_t rows, std::size_t cols,
                              std::uint64_t index) {
  FpMatrix m(field, rows, cols);
  const std::uint64_t p = field.modulus();
  for (Elem& e : m.data_) {
    e = static_cast<Elem>(index % p);
    index /= p;
  }
  return m;
}

std::uint64_t FpMatrix::to_index() const {
  std::uint64_t index = 0;
  for (std::size_t k = data_.size(); k-- > 0;) index = index * modulus() + data_[k];
  return index;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  return t;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_) {
    throw DimensionMismatch("matrix sum: shape or field mismatch");
  }
  FpMatrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.add(data_[k], rhs.data_[k]);
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_) {
    throw DimensionMismatch("matrix difference: shape or field mismatch");
  }
  FpMatrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.sub(data_[k], rhs.data_[k]);
  return out;
}

FpMatrix FpMatrix::operator-() const {
  FpMatrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.neg(data_[k]);
  return out;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (cols_ != rhs.rows_ || field_ != rhs.field_) {
    throw DimensionMismatch("matrix product: inner dimensions differ");
  }
  FpMatrix out(field_, rows_, rhs.cols_);
  const std::uint64_t p = modulus();
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) {
        acc = (acc + static_cast<std::uint64_t>(data_[i * cols_ + k]) * rhs.data_[k * rhs.cols_ + j]) % p;
      }
      out.data_[i * rhs.cols_ + j] = static_cast<Elem>(acc);
    }
  }
  return out;
}

FpVector FpMatrix::operator*(const FpVector& v) const {
  if (cols_ != v.size() || field_ != v.field()) {
    throw DimensionMismatch("matrix-vector product: dimensions differ");
  }
  FpVector out(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Elem acc = 0;
    for (std::size_t k = 0; k < cols_; ++k) acc = field_.add(acc, field_.mul(data_[i * cols_ + k], v[k]));
    out.set(i, acc);
  }
  return out;
}

FpVector FpMatrix::row(std::size_t r) const {
  return FpVector(field_, std::vector<Elem>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

FpVector FpMatrix::col(std::size_t c) const {
  FpVector v(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.set(r, data_[r * cols_ + c]);
  return v;
}

FpMatrix FpMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  FpMatrix out(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out.data_[r * nc + c] = data_[(r0 + r) * cols_ + c0 + c];
  return out;
}

void FpMatrix::paste(const FpMatrix& src, std::size_t r0, std::size_t c0) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_ || src.field_ != field_) {
    throw DimensionMismatch("paste out of range");
  }
  for (std::size_t r = 0; r < src.rows_; ++r)
    for (std::size_t c = 0; c < src.cols_; ++c) data_[(r0 + r) * cols_ + c0 + c] = src.data_[r * src.cols_ + c];
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << data_[r * cols_ + c];
    os << ']';
  }
  os << ']';
  return os.str();
}

FpMatrix hstack(const FpMatrix& left, const FpMatrix& right) {
  if (left.rows() != right.rows()) throw DimensionMismatch("hstack: row counts differ");
  FpMatrix out(left.field(), left.rows(), left.cols() + right.cols());
  out.paste(left, 0, 0);
  out.paste(right, 0, left.cols());
  return out;
}

FpMatrix vstack(const FpMatrix& top, const FpMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw DimensionMismatch("vstack: column counts differ");
  FpMatrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  out.paste(top, 0, 0);
  out.paste(bottom, top.rows(), 0);
  return out;
}

namespace {

// Row-reduces `work` in place (rows x cols, row-major); returns the rank.
// When `aug` is non-null its rows are transformed alongside.
std::size_t eliminate(const PrimeField& f, std::vector<Elem>& work, std::size_t rows, std::size_t cols,
                      std::vector<Elem>* aug, std::size_t aug_cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && work[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap_ranges(work.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                       work.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                       work.begin() + static_cast<std::ptrdiff_t>(rank * cols));
      if (aug) {
        std::swap_ranges(aug->begin() + static_cast<std::ptrdiff_t>(pivot * aug_cols),
                         aug->begin() + static_cast<std::ptrdiff_t>((pivot + 1) * aug_cols),
                         aug->begin() + static_cast<std::ptrdiff_t>(rank * aug_cols));
      }
    }
    const Elem scale = f.inv(work[rank * cols + c]);
    for (std::size_t k = 0; k < cols; ++k) work[rank * cols + k] = f.mul(work[rank * cols + k], scale);
    if (aug) {
      for (std::size_t k = 0; k < aug_cols; ++k) (*aug)[rank * aug_cols + k] = f.mul((*aug)[rank * aug_cols + k], scale);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const Elem factor = work[r * cols + c];
      if (factor == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) {
        work[r * cols + k] = f.sub(work[r * cols + k], f.mul(factor, work[rank * cols + k]));
      }
      if (aug) {
        for (std::size_t k = 0; k < aug_cols; ++k) {
          (*aug)[r * aug_cols + k] = f.sub((*aug)[r * aug_cols + k], f.mul(factor, (*aug)[rank * aug_cols + k]));
        }
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t mat_rank(const FpMatrix& m) {
  std::vector<Elem> work(m.entries().begin(), m.entries().end());
  return eliminate(m.field(), work, m.rows(), m.cols(), nullptr, 0);
}

FpMatrix mat_inverse(const FpMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Elem> work(m.entries().begin(), m.entries().end());
  FpMatrix id = FpMatrix::identity(m.field(), n);
  std::vector<Elem> aug(id.entries().begin(), id.entries().end());
  if (eliminate(m.field(), work, n, n, &aug, n) < n) throw SingularMatrix("matrix is singular");
  FpMatrix out(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.set(r, c, aug[r * n + c]);
  return out;
}

FpVector solve_linear(const FpMatrix& m, const FpVector& b) {
  if (!m.is_square() || m.rows() != b.size() || m.field() != b.field()) {
    throw DimensionMismatch("solve_linear: system dimensions differ");
  }
  const std::size_t n = m.rows();
  std::vector<Elem> work(m.entries().begin(), m.entries().end());
  std::vector<Elem> aug(b.entries().begin(), b.entries().end());
  if (eliminate(m.field(), work, n, n, &aug, 1) < n) throw SingularMatrix("matrix is singular");
  return FpVector(m.field(), std::move(aug));
}

FpMatrix random_invertible(PrimeField field, std::size_t n, Rng& rng) {
  if (n == 0) throw InvalidArgument("random_invertible: n must be positive");
  for (;;) {
    FpMatrix m = FpMatrix::random(field, n, n, rng);
    if (mat_rank(m) == n) return m;
  }
}

FpMatrix random_of_rank(PrimeField field, std::size_t n, std::size_t r, Rng& rng) {
  if (r > n) throw InvalidArgument("random_of_rank: rank exceeds dimension");
  if (r == 0) return FpMatrix::zero(field, n, n);
  FpMatrix core(field, n, n);
  for (std::size_t i = 0; i < r; ++i) core.set(i, i, 1);
  const FpMatrix left = random_invertible(field, n, rng);
  const FpMatrix right = random_invertible(field, n, rng);
  return left * core * right;
}

}  // namespace fpcomm::ff
