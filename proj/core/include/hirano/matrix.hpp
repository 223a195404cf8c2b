#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hirano/rational.hpp"

namespace hirano {

/// Dense row-major matrix over the rationals.
///
/// Both dimensions are at least one for anything built through the public
/// constructors. The only exception is the basis-valued results of
/// `null_space_basis` / `col_space_basis`, which may have zero columns when
/// the space is trivial; such matrices can be concatenated but not
/// multiplied into anything meaningful.
class Matrix {
 public:
  /// Zero matrix. Throws DimensionMismatch for a zero dimension.
  Matrix(std::size_t rows, std::size_t cols);
  /// Row-list literal, e.g. `Matrix{{1, 0}, {2, 1}}`.
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(std::span<const Rational> entries);
  static Matrix diagonal(std::initializer_list<Rational> entries);
  /// Builds a matrix from column vectors; `columns` may be empty, giving a
  /// `rows x 0` basis matrix.
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool has_no_columns() const noexcept { return cols_ == 0; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Rational> entries() const noexcept { return data_; }

  bool is_zero() const;
  bool is_identity() const;
  Matrix transpose() const;
  Rational trace() const;
  /// Copy of the `nrows x ncols` block starting at (r0, c0).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  std::vector<Rational> column(std::size_t c) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Rational& scalar);

  friend bool operator==(const Matrix& lhs, const Matrix& rhs) = default;

 private:
  struct Unchecked {};
  Matrix(Unchecked, std::size_t rows, std::size_t cols);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator-(const Matrix& m);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(const Rational& scalar, Matrix m);

/// m^e by binary exponentiation; m^0 = I. Throws NotSquare.
Matrix power(const Matrix& m, unsigned e);

/// Horizontal / vertical concatenation. Zero-column pieces are allowed in
/// `hconcat`.
Matrix hconcat(const Matrix& left, const Matrix& right);
Matrix vconcat(const Matrix& top, const Matrix& bottom);

/// Kronecker product.
Matrix kron(const Matrix& lhs, const Matrix& rhs);

struct BlockQuad {
  Matrix a, b, c, d;
  friend bool operator==(const BlockQuad&, const BlockQuad&) = default;
};

/// [[A, B], [C, D]]. Throws DimensionMismatch unless A/B share rows, C/D
/// share rows, A/C share columns and B/D share columns.
Matrix block_assemble(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);
/// Inverse of `block_assemble`; cuts must be interior.
BlockQuad block_split(const Matrix& m, std::size_t rowcut, std::size_t colcut);
/// diag(A, D).
Matrix block_diagonal(const Matrix& a, const Matrix& d);

// --- elimination -----------------------------------------------------------

/// Rank over Q via fraction-free (Bareiss) elimination.
std::size_t rank(const Matrix& m);
/// Columns form a basis of ker(m); `cols() x 0` when the kernel is trivial.
/// Basis vectors are scaled to primitive integer vectors.
Matrix null_space_basis(const Matrix& m);
/// Columns form a basis of the column space of m, chosen among the columns
/// of m itself; `rows() x 0` for the zero matrix.
Matrix col_space_basis(const Matrix& m);
/// Rows form a basis of the left kernel {y : y m = 0}.
Matrix left_null_basis(const Matrix& m);
/// Determinant via Bareiss. Throws NotSquare.
Rational determinant(const Matrix& m);
/// Exact inverse. Throws NotSquare or Singular.
Matrix inverse(const Matrix& m);
/// Some X with a X = b, or nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::string to_string(const Matrix& m);
std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace hirano
