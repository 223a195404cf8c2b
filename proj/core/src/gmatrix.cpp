#include "hirano/blockthm.hpp"
#include "hirano/error.hpp"

namespace hirano {

GMatrixResult g_matrix(const BlockInstance& inst) {
  if (!inst.c || !inst.d) throw Error(ErrorKind::ArityMismatch, "g_matrix needs the blocks A, B, C, D");
  const Matrix& a = inst.a;
  const Matrix& c = *inst.c;
  const Matrix& d = *inst.d;
  if (!a.is_square() || !d.is_square() || c.rows() != d.rows() || c.cols() != a.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "g_matrix: C must be rows(D) x rows(A)");
  }
  if (!is_hirano_invertible(a)) throw Error(ErrorKind::NotHirano, "g_matrix: A has no Hirano inverse");
  if (!is_hirano_invertible(d)) throw Error(ErrorKind::NotHirano, "g_matrix: D has no Hirano inverse");

  const DrazinData da = drazin_inverse(a);
  const DrazinData dd = drazin_inverse(d);
  const Matrix& ah = da.inverse;
  const Matrix& dh = dd.inverse;
  const std::size_t n = a.rows();
  const std::size_t m = d.rows();

  Matrix g = -(dh * c * ah);
  Matrix dh_pow = dh * dh;   // (D^H)^{i+2}
  Matrix a_pow = Matrix::identity(n);
  for (std::size_t i = 0; i < da.index; ++i) {
    g += dh_pow * c * a_pow * da.nil_projection;
    dh_pow = dh_pow * dh;
    a_pow = a_pow * a;
  }
  const Matrix core = d * d * dh;
  Matrix core_pow = dd.nil_projection;   // D^pi (D^2 D^H)^i
  Matrix ah_pow = ah * ah;
  for (std::size_t i = 0; i < dd.index; ++i) {
    g += core_pow * c * ah_pow;
    core_pow = core_pow * core;
    ah_pow = ah_pow * ah;
  }

  Matrix q = block_assemble(a, Matrix::zero(n, m), c, core);
  Matrix q_hirano = block_assemble(ah, Matrix::zero(n, m), g, dh);
  Matrix q_pi = Matrix::identity(n + m) - q * q_hirano;
  GMatrixResult out{std::move(g), std::move(q), std::move(q_hirano), std::move(q_pi), da.index, dd.index};

  if (!hirano_residuals(out.q, out.q_hirano).holds()) {
    throw Error(ErrorKind::CertificateFailure, "g_matrix: candidate fails the Hirano equations for Q");
  }
  const Matrix expected = -(c * ah + core * out.g);
  if (out.q_pi.block(n, 0, m, n) != expected) {
    throw Error(ErrorKind::CertificateFailure, "g_matrix: lower-left block of Q^pi disagrees");
  }
  return out;
}

}  // namespace hirano
