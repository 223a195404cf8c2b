#include "hirano/decomp.hpp"

#include <bit>

#include "hirano/drazin.hpp"
#include "hirano/error.hpp"
#include "hirano/poly.hpp"

namespace hirano {
namespace {

// Newton iteration X <- X - q(X) q'(X)^{-1} from X = a. Converges
// quadratically in the nilpotent direction: after j steps q(X) lies in the
// ideal generated by q(a)^(2^j), so the cap is never the binding constraint
// for a genuine input.
SplitPair newton_split(const Matrix& a, const Poly& q) {
  const Poly dq = q.derivative();
  const std::size_t cap = newton_step_cap(a.rows());
  Matrix x = a;
  std::size_t steps = 0;
  for (Matrix qx = q.evaluate(x); !qx.is_zero(); qx = q.evaluate(x)) {
    if (steps == cap) throw Error(ErrorKind::IterationCapExceeded, "Newton iteration did not terminate");
    Matrix step_inv(a.rows(), a.rows());
    try {
      step_inv = inverse(dq.evaluate(x));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Singular) throw;
      throw Error(ErrorKind::SingularNewtonStep, "q'(X) is singular at Newton step " + std::to_string(steps));
    }
    x -= qx * step_inv;
    ++steps;
  }
  Matrix nil = a - x;
  const auto exponent = nilpotency_exponent(nil);
  if (!exponent) throw Error(ErrorKind::Internal, "Newton split left a non-nilpotent remainder");
  return {std::move(x), std::move(nil), *exponent, steps};
}

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, what);
}

}  // namespace

std::size_t newton_step_cap(std::size_t n) {
  return static_cast<std::size_t>(std::bit_width(n > 1 ? n - 1 : 0)) + 1;
}

SplitPair jordan_chevalley(const Matrix& a) {
  require_square(a, "jordan_chevalley");
  return newton_split(a, squarefree_part(char_poly(a)));
}

SplitPair tripotent_nilpotent(const Matrix& a) {
  require_square(a, "tripotent_nilpotent");
  if (!is_hirano_invertible(a)) throw Error(ErrorKind::NotHirano, "a - a^3 is not nilpotent");
  return newton_split(a, Poly({Rational(0), Rational(-1), Rational(0), Rational(1)}));
}

SplitPair idempotent_nilpotent(const Matrix& a) {
  require_square(a, "idempotent_nilpotent");
  if (!is_strongly_drazin_invertible(a)) throw Error(ErrorKind::NotStronglyDrazin, "a - a^2 is not nilpotent");
  return newton_split(a, Poly({Rational(0), Rational(-1), Rational(1)}));
}

}  // namespace hirano
