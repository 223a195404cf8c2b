#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hirano/matrix.hpp"

namespace hirano {

/// Smallest e >= 1 with m^e = 0, or nullopt. Throws NotSquare.
std::optional<std::size_t> nilpotency_exponent(const Matrix& m);

/// Smallest positive k with (a - a^2 a^D)^k = 0. Invertible matrices have
/// index 1. Computed from rank stabilisation of a, a^2, ...
std::size_t drazin_index(const Matrix& a);

struct DrazinData {
  std::size_t index = 1;
  Matrix inverse;           ///< a^D
  Matrix core_projection;   ///< a^e = a a^D
  Matrix nil_projection;    ///< a^pi = I - a^e
};

/// Drazin inverse through the core-nilpotent decomposition
/// T^{-1} a T = diag(C, N). Every DrazinData invariant is re-checked before
/// returning; a failed check throws CertificateFailure.
DrazinData drazin_inverse(const Matrix& a);

/// True when a z = z a, z a z = z and a - a^2 z is nilpotent.
bool satisfies_drazin_equations(const Matrix& a, const Matrix& z);

/// Exponent of a - a^2 when nilpotent.
std::optional<std::size_t> is_strongly_drazin_invertible(const Matrix& a);
/// Exponent of a - a^3 when nilpotent.
std::optional<std::size_t> is_hirano_invertible(const Matrix& a);
/// Characteristic polynomial is x^p (x-1)^q (x+1)^r.
bool eigencheck_hirano(const Matrix& a);

/// Residuals of the three defining equations for a candidate inverse z.
struct DefiningResiduals {
  Matrix commutator;              ///< a z - z a
  Matrix reflexive;               ///< z a z - z
  Matrix nil_residual;            ///< the term required to be nilpotent
  std::optional<std::size_t> nil_exponent;

  bool holds() const { return commutator.is_zero() && reflexive.is_zero() && nil_exponent.has_value(); }
};

DefiningResiduals drazin_residuals(const Matrix& a, const Matrix& z);          ///< a - a^2 z
DefiningResiduals strong_drazin_residuals(const Matrix& a, const Matrix& z);   ///< a - a z
DefiningResiduals hirano_residuals(const Matrix& a, const Matrix& z);          ///< a^2 - a z

struct HiranoCert {
  Matrix z;                        ///< a^H
  Matrix tripotent;                ///< E, E^3 = E
  Matrix nilpart;                  ///< N = a - E
  std::size_t nil_exponent = 0;    ///< of a^2 - a z
  std::size_t split_exponent = 0;  ///< of N
  std::size_t newton_steps = 0;
};

struct StrongDrazinCert {
  Matrix z;                        ///< a^{sD}
  Matrix idem;                     ///< F, F^2 = F
  Matrix nilpart;                  ///< N = a - F
  std::size_t nil_exponent = 0;    ///< of a - a z
  std::size_t split_exponent = 0;  ///< of N
  std::size_t newton_steps = 0;
};

/// The Hirano inverse (equal to the Drazin inverse when it exists) with a
/// fully re-verified certificate. Throws NotHirano or CertificateFailure.
HiranoCert hirano_inverse(const Matrix& a);
/// Throws NotStronglyDrazin or CertificateFailure.
StrongDrazinCert strongly_drazin_inverse(const Matrix& a);

/// Independent re-check of a certificate against `a`; returns the list of
/// violated invariants (empty when the certificate is valid).
std::vector<std::string> audit(const Matrix& a, const HiranoCert& cert);
std::vector<std::string> audit(const Matrix& a, const StrongDrazinCert& cert);

/// (ab)^D = a ((ba)^D)^2 b for a (m x n), b (n x m). `z_ba` must be the
/// Drazin inverse of b a (else BadInverse); the result is checked against
/// the defining equations for a b (else CertificateFailure).
Matrix cline_transfer(const Matrix& a, const Matrix& b, const Matrix& z_ba);

}  // namespace hirano
