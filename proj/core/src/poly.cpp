#include "hirano/poly.hpp"

#include <sstream>

#include "hirano/error.hpp"

namespace hirano {

Poly::Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(unsigned k) {
  std::vector<Rational> c(k + 1);
  c[k] = 1;
  return Poly(std::move(c));
}

Poly Poly::linear(const Rational& root) { return Poly({-root, Rational(1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::Singular, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly out = *this;
  const Rational lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

Rational Poly::evaluate(const Rational& x) const {
  Rational acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Matrix Poly::evaluate(const Matrix& m) const {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "polynomial evaluation");
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * m;
    for (std::size_t d = 0; d < n; ++d) acc(d, d) += coeffs_[i];
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorKind::Singular, "polynomial division by zero");
  std::vector<Rational> rem = num.coefficients();
  const auto& d = den.coefficients();
  if (rem.size() < d.size()) return {Poly{}, num};
  std::vector<Rational> quot(rem.size() - d.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + d.size() - 1] / d.back();
    quot[k] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q * d[j];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

Poly char_poly(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "char_poly");
  const std::size_t n = m.rows();
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t d = 0; d < n; ++d) mk(d, d) += c[n - k + 1];
    c[n - k] = -(m * mk).trace() / static_cast<long>(k);
  }
  return Poly(std::move(c));
}

std::optional<UnitRootFactorization> factor_unit_roots(const Poly& p) {
  if (p.is_zero()) return std::nullopt;
  UnitRootFactorization f;
  Poly rest = p.monic();
  const std::pair<Rational, unsigned UnitRootFactorization::*> roots[] = {
      {Rational(0), &UnitRootFactorization::zero},
      {Rational(1), &UnitRootFactorization::one},
      {Rational(-1), &UnitRootFactorization::minus_one},
  };
  for (const auto& [root, slot] : roots) {
    const Poly factor = Poly::linear(root);
    while (rest.degree() >= 1) {
      auto [q, r] = divmod(rest, factor);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++(f.*slot);
    }
  }
  if (rest.degree() != 0) return std::nullopt;
  return f;
}

std::string to_string(const UnitRootFactorization& f) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const char* base, unsigned e) {
    if (e == 0) return;
    os << (first ? "" : " ") << base;
    if (e > 1) os << '^' << e;
    first = false;
  };
  term("x", f.zero);
  term("(x-1)", f.one);
  term("(x+1)", f.minus_one);
  if (first) os << '1';
  return os.str();
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.coefficients().size(); i-- > 0;) {
    const Rational& c = p.coefficients()[i];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    const Rational mag = neg ? Rational(-c) : c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << 'x';
    if (i > 1) os << '^' << i;
    first = false;
  }
  return os.str();
}

}  // namespace hirano
