#include "hirano/matrix.hpp"

#include <ostream>
#include <sstream>

#include "hirano/error.hpp"

namespace hirano {
namespace {

void require_same_shape(const Matrix& lhs, const Matrix& rhs, const char* op) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    std::ostringstream os;
    os << op << ": " << lhs.rows() << "x" << lhs.cols() << " vs " << rhs.rows() << "x" << rhs.cols();
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
}

}  // namespace

Matrix::Matrix(Unchecked, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols) : Matrix(Unchecked{}, rows, cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorKind::DimensionMismatch, "matrices must have at least one row and column");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : Matrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged row list");
    std::size_t c = 0;
    for (const auto& v : row) (*this)(r, c++) = v;
    ++r;
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::diagonal(std::initializer_list<Rational> entries) {
  return diagonal(std::span<const Rational>(entries.begin(), entries.size()));
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns) {
  if (rows == 0) throw Error(ErrorKind::DimensionMismatch, "basis vectors must be nonempty");
  Matrix m(Unchecked{}, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(ErrorKind::DimensionMismatch, "matrices must have at least one row and column");
  }
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "ragged row list");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(Unchecked{}, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Rational Matrix::trace() const {
  if (!is_square()) throw Error(ErrorKind::NotSquare, "trace");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) {
    throw Error(ErrorKind::DimensionMismatch, "block out of range");
  }
  Matrix b(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  }
  return b;
}

std::vector<Rational> Matrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_same_shape(*this, rhs, "add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_same_shape(*this, rhs, "sub");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }

Matrix operator-(const Matrix& m) {
  Matrix out = m;
  out *= Rational(-1);
  return out;
}

Matrix operator*(const Rational& scalar, Matrix m) { return m *= scalar; }

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols() != rhs.rows() || lhs.rows() == 0 || rhs.cols() == 0) {
    std::ostringstream os;
    os << "mul: " << lhs.rows() << "x" << lhs.cols() << " * " << rhs.rows() << "x" << rhs.cols();
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
  Matrix out(lhs.rows(), rhs.cols());
  Rational term;
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Rational& a = lhs(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        const Rational& b = rhs(k, j);
        if (sgn(b) == 0) continue;
        mpq_mul(term.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
        out(i, j) += term;
      }
    }
  }
  return out;
}

Matrix power(const Matrix& m, unsigned e) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "power");
  Matrix result = Matrix::identity(m.rows());
  Matrix base = m;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Matrix hconcat(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) throw Error(ErrorKind::DimensionMismatch, "hconcat row counts differ");
  std::vector<std::vector<Rational>> cols;
  cols.reserve(left.cols() + right.cols());
  for (std::size_t c = 0; c < left.cols(); ++c) cols.push_back(left.column(c));
  for (std::size_t c = 0; c < right.cols(); ++c) cols.push_back(right.column(c));
  return Matrix::from_columns(left.rows(), cols);
}

Matrix vconcat(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw Error(ErrorKind::DimensionMismatch, "vconcat column counts differ");
  Matrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r) {
    for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
  }
  for (std::size_t r = 0; r < bottom.rows(); ++r) {
    for (std::size_t c = 0; c < bottom.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
  }
  return out;
}

Matrix kron(const Matrix& lhs, const Matrix& rhs) {
  Matrix out(lhs.rows() * rhs.rows(), lhs.cols() * rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      if (sgn(lhs(i, j)) == 0) continue;
      for (std::size_t k = 0; k < rhs.rows(); ++k) {
        for (std::size_t l = 0; l < rhs.cols(); ++l) {
          out(i * rhs.rows() + k, j * rhs.cols() + l) = lhs(i, j) * rhs(k, l);
        }
      }
    }
  }
  return out;
}

Matrix block_assemble(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "block_assemble: blocks are not conformable");
  }
  Matrix m(a.rows() + c.rows(), a.cols() + b.cols());
  auto place = [&m](const Matrix& blk, std::size_t r0, std::size_t c0) {
    for (std::size_t r = 0; r < blk.rows(); ++r) {
      for (std::size_t col = 0; col < blk.cols(); ++col) m(r0 + r, c0 + col) = blk(r, col);
    }
  };
  place(a, 0, 0);
  place(b, 0, a.cols());
  place(c, a.rows(), 0);
  place(d, a.rows(), a.cols());
  return m;
}

BlockQuad block_split(const Matrix& m, std::size_t rowcut, std::size_t colcut) {
  if (rowcut == 0 || rowcut >= m.rows() || colcut == 0 || colcut >= m.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "block_split: cuts must be interior");
  }
  const std::size_t r2 = m.rows() - rowcut;
  const std::size_t c2 = m.cols() - colcut;
  return {m.block(0, 0, rowcut, colcut), m.block(0, colcut, rowcut, c2), m.block(rowcut, 0, r2, colcut),
          m.block(rowcut, colcut, r2, c2)};
}

Matrix block_diagonal(const Matrix& a, const Matrix& d) {
  return block_assemble(a, Matrix(a.rows(), d.cols()), Matrix(d.rows(), a.cols()), d);
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).get_str();
    os << ']';
  }
  return os << ']';
}

}  // namespace hirano
