#pragma once

// Exact integer / rational linear algebra on small dense matrices.
//
// Everything here is value-typed and pure. Integers are GMP mpz_class and
// rationals mpq_class; mpq_class arithmetic keeps values in lowest terms, and
// every Rational built from a numerator/denominator pair in this library is
// canonicalized before it escapes.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace satlink {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or a
/// zero denominator.
Rational parse_rational(const std::string& text);

class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonSquareError : public LinalgError {
 public:
  using LinalgError::LinalgError;
};

class SingularError : public LinalgError {
 public:
  using LinalgError::LinalgError;
};

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw std::invalid_argument("Matrix: entry count does not match shape");
    }
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& entries() const noexcept { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool symmetric() const {
    if (!square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
  }

  /// Copy of the block of size (nr x nc) whose top-left corner is (r0, c0).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
      }
    return p;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;

RationalMatrix to_rational(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination. det of 0x0 is 1.
Integer det(const IntMatrix& m);

/// Exact inverse. Computed as adj(M)/det(M) via fraction-free Gauss-Jordan, so
/// every entry's denominator divides |det(M)|.
RationalMatrix inverse(const IntMatrix& m);

/// Adjugate, i.e. det(M) * M^{-1}, as an integer matrix. Requires det != 0.
IntMatrix adjugate(const IntMatrix& m);

struct SmithForm {
  IntMatrix d;  // diagonal, d_1 | d_2 | ..., entries non-negative
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix v;  // unimodular, cols x cols
};

/// Smith normal form with D = U * M * V. Pivot choice: smallest nonzero
/// absolute value in the active submatrix, ties broken in row-major order.
SmithForm smith_normal_form(const IntMatrix& m);

/// Invariant factors (the diagonal of D), length min(rows, cols).
std::vector<Integer> invariant_factors(const IntMatrix& m);

struct Infinite {
  friend bool operator==(Infinite, Infinite) { return true; }
};
using Order = std::variant<Integer, Infinite>;

/// Order of [x] in Z^n / M Z^n; Infinite when no positive multiple lies in the
/// column span (only possible if det M = 0).
Order order_in_quotient(const IntMatrix& m, const IntVector& x);

/// x^T M y.
Rational bilinear(const IntVector& x, const RationalMatrix& m, const IntVector& y);

struct NotBlockCirculant {
  // First offending block position (row-block, col-block) and the block it was
  // expected to equal, (0, (col-row) mod q).
  std::size_t block_row = 0;
  std::size_t block_col = 0;
  std::size_t reference_col = 0;
};

template <typename T>
using BlockSplit = std::variant<std::vector<Matrix<T>>, NotBlockCirculant>;

/// Splits M into q x q blocks and returns (M_0, ..., M_{q-1}) with block (i, j)
/// == M_{(j - i) mod q}, or the first block that breaks the pattern (row-major
/// scan).
template <typename T>
BlockSplit<T> block_circulant_split(const Matrix<T>& m, std::size_t q) {
  if (!m.square() || q == 0 || m.rows() % q != 0) {
    throw std::invalid_argument("block_circulant_split: size must be a multiple of q");
  }
  const std::size_t b = m.rows() / q;
  std::vector<Matrix<T>> blocks;
  blocks.reserve(q);
  for (std::size_t j = 0; j < q; ++j) blocks.push_back(m.block(0, j * b, b, b));
  for (std::size_t i = 1; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const std::size_t ref = (j + q - i) % q;
      for (std::size_t r = 0; r < b; ++r)
        for (std::size_t c = 0; c < b; ++c)
          if (m(i * b + r, j * b + c) != blocks[ref](r, c)) {
            return NotBlockCirculant{i, j, ref};
          }
    }
  }
  return blocks;
}

}  // namespace satlink
