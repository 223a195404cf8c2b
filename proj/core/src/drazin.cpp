#include "hirano/drazin.hpp"

#include <sstream>

#include "hirano/decomp.hpp"
#include "hirano/error.hpp"
#include "hirano/poly.hpp"

namespace hirano {
namespace {

void require_square(const Matrix& m, const char* what) {
  if (!m.is_square()) {
    std::ostringstream os;
    os << what << ": expected a square matrix, got " << m.rows() << "x" << m.cols();
    throw Error(ErrorKind::NotSquare, os.str());
  }
}

DefiningResiduals residuals(const Matrix& a, const Matrix& z, Matrix nil_term) {
  DefiningResiduals r{a * z - z * a, z * a * z - z, std::move(nil_term), std::nullopt};
  r.nil_exponent = nilpotency_exponent(r.nil_residual);
  return r;
}

void require_conformable_inverse(const Matrix& a, const Matrix& z) {
  require_square(a, "defining equations");
  if (z.rows() != a.rows() || z.cols() != a.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "candidate inverse has the wrong shape");
  }
}

}  // namespace

std::optional<std::size_t> nilpotency_exponent(const Matrix& m) {
  require_square(m, "nilpotency test");
  if (sgn(m.trace()) != 0) return std::nullopt;
  Matrix p = m;
  for (std::size_t e = 1; e <= m.rows(); ++e) {
    if (p.is_zero()) return e;
    if (e < m.rows()) p = p * m;
  }
  return std::nullopt;
}

std::size_t drazin_index(const Matrix& a) {
  require_square(a, "drazin_index");
  Matrix p = a;
  std::size_t r = rank(p);
  for (std::size_t k = 1;; ++k) {
    Matrix next = p * a;
    const std::size_t rn = rank(next);
    if (rn == r) return k;
    p = std::move(next);
    r = rn;
  }
}

DrazinData drazin_inverse(const Matrix& a) {
  require_square(a, "drazin_inverse");
  const std::size_t n = a.rows();
  const std::size_t k = drazin_index(a);
  const Matrix ak = power(a, static_cast<unsigned>(k));
  const Matrix range = col_space_basis(ak);
  const std::size_t r = range.cols();

  Matrix dinv(n, n);
  if (r == n) {
    dinv = inverse(a);
  } else if (r > 0) {
    const Matrix t = hconcat(range, null_space_basis(ak));
    const Matrix tinv = inverse(t);
    const Matrix core = (tinv * a * t).block(0, 0, r, r);
    Matrix lifted(n, n);
    const Matrix core_inv = inverse(core);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) lifted(i, j) = core_inv(i, j);
    }
    dinv = t * lifted * tinv;
  }

  DrazinData out{k, dinv, a * dinv, Matrix::identity(n) - a * dinv};
  const Matrix nil_part = a - a * out.core_projection;
  const bool ok = (a * dinv == dinv * a) && (dinv * a * dinv == dinv) &&
                  power(nil_part, static_cast<unsigned>(k)).is_zero() &&
                  (k == 1 || !power(nil_part, static_cast<unsigned>(k - 1)).is_zero()) &&
                  out.core_projection * out.core_projection == out.core_projection;
  if (!ok) throw Error(ErrorKind::CertificateFailure, "Drazin inverse failed its own invariants");
  return out;
}

bool satisfies_drazin_equations(const Matrix& a, const Matrix& z) { return drazin_residuals(a, z).holds(); }

DefiningResiduals drazin_residuals(const Matrix& a, const Matrix& z) {
  require_conformable_inverse(a, z);
  return residuals(a, z, a - a * a * z);
}

DefiningResiduals strong_drazin_residuals(const Matrix& a, const Matrix& z) {
  require_conformable_inverse(a, z);
  return residuals(a, z, a - a * z);
}

DefiningResiduals hirano_residuals(const Matrix& a, const Matrix& z) {
  require_conformable_inverse(a, z);
  return residuals(a, z, a * a - a * z);
}

std::optional<std::size_t> is_strongly_drazin_invertible(const Matrix& a) {
  require_square(a, "strongly Drazin test");
  return nilpotency_exponent(a - a * a);
}

std::optional<std::size_t> is_hirano_invertible(const Matrix& a) {
  require_square(a, "Hirano test");
  return nilpotency_exponent(a - a * a * a);
}

bool eigencheck_hirano(const Matrix& a) {
  require_square(a, "eigencheck_hirano");
  return factor_unit_roots(char_poly(a)).has_value();
}

std::vector<std::string> audit(const Matrix& a, const HiranoCert& cert) {
  std::vector<std::string> bad;
  const Matrix& e = cert.tripotent;
  const Matrix& nil = cert.nilpart;
  if (a * cert.z != cert.z * a) bad.emplace_back("a z = z a");
  if (cert.z * a * cert.z != cert.z) bad.emplace_back("z a z = z");
  if (!power(a * a - a * cert.z, static_cast<unsigned>(cert.nil_exponent)).is_zero()) {
    bad.emplace_back("(a^2 - a z)^k = 0");
  }
  if (e * e * e != e) bad.emplace_back("E^3 = E");
  if (!power(nil, static_cast<unsigned>(cert.split_exponent)).is_zero()) bad.emplace_back("N^k = 0");
  if (e * nil != nil * e) bad.emplace_back("E N = N E");
  if (e + nil != a) bad.emplace_back("E + N = a");
  return bad;
}

std::vector<std::string> audit(const Matrix& a, const StrongDrazinCert& cert) {
  std::vector<std::string> bad;
  const Matrix& f = cert.idem;
  const Matrix& nil = cert.nilpart;
  if (a * cert.z != cert.z * a) bad.emplace_back("a z = z a");
  if (cert.z * a * cert.z != cert.z) bad.emplace_back("z a z = z");
  if (!power(a - a * cert.z, static_cast<unsigned>(cert.nil_exponent)).is_zero()) {
    bad.emplace_back("(a - a z)^k = 0");
  }
  if (f * f != f) bad.emplace_back("F^2 = F");
  if (!power(nil, static_cast<unsigned>(cert.split_exponent)).is_zero()) bad.emplace_back("N^k = 0");
  if (f * nil != nil * f) bad.emplace_back("F N = N F");
  if (f + nil != a) bad.emplace_back("F + N = a");
  return bad;
}

namespace {

template <class Cert>
void require_clean(const Matrix& a, const Cert& cert, const char* what) {
  const auto bad = audit(a, cert);
  if (bad.empty()) return;
  std::string msg = std::string(what) + " certificate violates:";
  for (const auto& b : bad) msg += " [" + b + "]";
  throw Error(ErrorKind::CertificateFailure, msg);
}

}  // namespace

HiranoCert hirano_inverse(const Matrix& a) {
  require_square(a, "hirano_inverse");
  if (!is_hirano_invertible(a)) throw Error(ErrorKind::NotHirano, "a - a^3 is not nilpotent");
  const DrazinData d = drazin_inverse(a);
  const DefiningResiduals res = hirano_residuals(a, d.inverse);
  if (!res.holds()) {
    throw Error(ErrorKind::CertificateFailure, "Drazin inverse does not satisfy the Hirano equations");
  }
  SplitPair split = tripotent_nilpotent(a);
  HiranoCert cert{d.inverse, std::move(split.structured), std::move(split.nilpotent), *res.nil_exponent,
                  split.nil_exponent, split.newton_steps};
  require_clean(a, cert, "Hirano");
  return cert;
}

StrongDrazinCert strongly_drazin_inverse(const Matrix& a) {
  require_square(a, "strongly_drazin_inverse");
  if (!is_strongly_drazin_invertible(a)) throw Error(ErrorKind::NotStronglyDrazin, "a - a^2 is not nilpotent");
  const DrazinData d = drazin_inverse(a);
  const DefiningResiduals res = strong_drazin_residuals(a, d.inverse);
  if (!res.holds()) {
    throw Error(ErrorKind::CertificateFailure, "Drazin inverse does not satisfy the strong Drazin equations");
  }
  SplitPair split = idempotent_nilpotent(a);
  StrongDrazinCert cert{d.inverse, std::move(split.structured), std::move(split.nilpotent), *res.nil_exponent,
                        split.nil_exponent, split.newton_steps};
  require_clean(a, cert, "strongly Drazin");
  return cert;
}

Matrix cline_transfer(const Matrix& a, const Matrix& b, const Matrix& z_ba) {
  if (a.rows() != b.cols() || a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "cline_transfer: need a (m x n) and b (n x m)");
  }
  const Matrix ba = b * a;
  if (z_ba.rows() != ba.rows() || z_ba.cols() != ba.cols() || !satisfies_drazin_equations(ba, z_ba)) {
    throw Error(ErrorKind::BadInverse, "z_ba is not the Drazin inverse of b a");
  }
  Matrix out = a * z_ba * z_ba * b;
  if (!satisfies_drazin_equations(a * b, out)) {
    throw Error(ErrorKind::CertificateFailure, "a (ba)^D^2 b fails the Drazin equations for a b");
  }
  return out;
}

}  // namespace hirano
