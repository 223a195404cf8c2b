#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hirano/matrix.hpp"
#include "hirano/rational.hpp"

namespace hirano {

/// Univariate polynomial over Q, coefficients in ascending degree. The
/// highest stored coefficient is always nonzero; the zero polynomial has
/// no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> ascending);

  static Poly constant(const Rational& c);
  /// x^k.
  static Poly monomial(unsigned k);
  /// x - root.
  static Poly linear(const Rational& root);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of x^i (zero past the degree).
  Rational coeff(std::size_t i) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  const Rational& leading() const;

  Poly derivative() const;
  Poly monic() const;

  Rational evaluate(const Rational& x) const;
  /// p(m) by Horner's rule; throws NotSquare.
  Matrix evaluate(const Matrix& m) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws Singular on division by zero.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
/// Product of the distinct irreducible factors: p / gcd(p, p'), made monic.
Poly squarefree_part(const Poly& p);

/// det(xI - m), monic of degree n, by the Faddeev-LeVerrier recurrence.
Poly char_poly(const Matrix& m);

/// Multiplicities in p = x^zero (x - 1)^one (x + 1)^minus_one.
struct UnitRootFactorization {
  unsigned zero = 0;
  unsigned one = 0;
  unsigned minus_one = 0;
  friend bool operator==(const UnitRootFactorization&, const UnitRootFactorization&) = default;
};

/// Factors a monic polynomial over {x, x-1, x+1}; nullopt when any other
/// factor remains.
std::optional<UnitRootFactorization> factor_unit_roots(const Poly& p);

std::string to_string(const UnitRootFactorization& f);
std::string to_string(const Poly& p);

}  // namespace hirano
