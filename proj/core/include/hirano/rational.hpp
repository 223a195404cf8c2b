#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hirano {

/// Arbitrary-precision rational. GMP keeps results of arithmetic in lowest
/// terms with a positive denominator, so equality is structural.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional leading sign). Rejects zero denominators,
/// whitespace and anything else. The result is canonical.
Rational parse_rational(std::string_view text);

/// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

}  // namespace hirano
