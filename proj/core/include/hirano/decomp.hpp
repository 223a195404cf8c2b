#pragma once

#include <cstddef>

#include "hirano/matrix.hpp"

namespace hirano {

/// input = structured + nilpotent with the two parts commuting.
/// `structured` is semisimple (Jordan-Chevalley), tripotent or idempotent
/// depending on which routine produced it.
struct SplitPair {
  Matrix structured;
  Matrix nilpotent;
  std::size_t nil_exponent = 0;   ///< smallest e with nilpotent^e = 0
  std::size_t newton_steps = 0;
};

/// ceil(log2 n) + 1: the safety cap on Newton steps for an n x n input.
std::size_t newton_step_cap(std::size_t n);

/// Jordan-Chevalley split by Newton iteration on the squarefree part q of
/// the characteristic polynomial: X <- X - q(X) q'(X)^{-1}, X0 = a, until
/// q(X) = 0. The structured part is a polynomial in `a`.
SplitPair jordan_chevalley(const Matrix& a);

/// E + N with E^3 = E, for a - a^3 nilpotent. Newton on q(x) = x^3 - x.
/// Throws NotHirano when the precondition fails.
SplitPair tripotent_nilpotent(const Matrix& a);

/// F + N with F^2 = F, for a - a^2 nilpotent. Newton on q(x) = x^2 - x.
/// Throws NotStronglyDrazin when the precondition fails.
SplitPair idempotent_nilpotent(const Matrix& a);

}  // namespace hirano
