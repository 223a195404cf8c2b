#include <utility>

#include "hirano/error.hpp"
#include "hirano/matrix.hpp"

namespace hirano {
namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Row echelon form of m, computed fraction-free. Each row is first scaled by
// the lcm of its denominators; Bareiss' update then keeps every entry an
// integer (a minor of the scaled matrix), so the division is exact.
struct Echelon {
  IntRows rows;                      // upper echelon, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each kept row
  std::vector<std::size_t> order;    // original row index of each echelon row
  int swaps = 0;
  Integer last_pivot = 1;
  Integer scale = 1;                 // product of the row scalings
};

Echelon bareiss(const Matrix& m) {
  Echelon e;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntRows a(rows, std::vector<Integer>(cols));
  e.order.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    e.order[r] = r;
    Integer l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    e.scale *= l;
    for (std::size_t c = 0; c < cols; ++c) {
      a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
  }

  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      std::swap(e.order[p], e.order[r]);
      ++e.swaps;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  e.last_pivot = prev;
  return e;
}

std::vector<Rational> primitive(std::vector<Rational> v) {
  Integer l = 1;
  Integer g = 0;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  for (auto& x : v) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.has_no_columns()) return 0;
  return bareiss(m).pivots.size();
}

Matrix null_space_basis(const Matrix& m) {
  const std::size_t cols = m.cols();
  const Echelon e = bareiss(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols);
    x[f] = 1;
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
      const auto& row = e.rows[k];
      const std::size_t p = e.pivots[k];
      Rational s;
      for (std::size_t j = p + 1; j < cols; ++j) {
        if (sgn(row[j]) != 0 && sgn(x[j]) != 0) s += Rational(row[j]) * x[j];
      }
      x[p] = -s / Rational(row[p]);
    }
    basis.push_back(primitive(std::move(x)));
  }
  return Matrix::from_columns(cols, basis);
}

Matrix col_space_basis(const Matrix& m) {
  const Echelon e = bareiss(m);
  std::vector<std::vector<Rational>> basis;
  basis.reserve(e.pivots.size());
  for (auto p : e.pivots) basis.push_back(m.column(p));
  return Matrix::from_columns(m.rows(), basis);
}

Matrix left_null_basis(const Matrix& m) {
  return null_space_basis(m.transpose()).transpose();
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "determinant");
  const Echelon e = bareiss(m);
  if (e.pivots.size() < m.rows()) return 0;
  // After a full Bareiss sweep the last pivot is det of the scaled matrix.
  Rational det(e.last_pivot, e.scale);
  det.canonicalize();
  return e.swaps % 2 ? Rational(-det) : det;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "inverse");
  auto x = solve(m, Matrix::identity(m.rows()));
  if (!x) throw Error(ErrorKind::Singular, "matrix is not invertible");
  return *x;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: row counts differ");
  const std::size_t n = a.rows();
  const std::size_t k = a.cols();
  const std::size_t w = k + b.cols();
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(w));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) t[r][c] = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) t[r][k + c] = b(r, c);
  }

  // Gauss-Jordan to reduced row echelon form.
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t p = r;
    while (p < n && sgn(t[p][c]) == 0) ++p;
    if (p == n) continue;
    std::swap(t[p], t[r]);
    const Rational inv = 1 / t[r][c];
    for (std::size_t j = c; j < w; ++j) t[r][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || sgn(t[i][c]) == 0) continue;
      const Rational f = t[i][c];
      for (std::size_t j = c; j < w; ++j) {
        if (sgn(t[r][j]) != 0) t[i][j] -= f * t[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i) {
    for (std::size_t j = k; j < w; ++j) {
      if (sgn(t[i][j]) != 0) return std::nullopt;
    }
  }
  Matrix x(k, b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = t[i][k + j];
  }
  return x;
}

}  // namespace hirano
