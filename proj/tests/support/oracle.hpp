#pragma once

// Reference implementations used only by the tests. Everything here works
// on plain nested vectors with its own arithmetic, so agreement with the
// library is a real cross-check.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "hirano/matrix.hpp"

namespace oracle {

using Grid = std::vector<std::vector<mpq_class>>;

Grid to_grid(const hirano::Matrix& m);
hirano::Matrix from_grid(const Grid& g);

Grid identity(std::size_t n);
Grid multiply(const Grid& a, const Grid& b);
Grid subtract(const Grid& a, const Grid& b);
Grid power(const Grid& a, std::size_t e);
bool is_zero(const Grid& a);

/// Gauss-Jordan rank over Q.
std::size_t rank(const Grid& a);
/// Laplace expansion along the first row.
mpq_class cofactor_determinant(const Grid& a);
/// Gauss-Jordan inverse; nullopt when singular.
std::optional<Grid> inverse(const Grid& a);
/// One solution of a x = b (b a column), or nullopt.
std::optional<std::vector<mpq_class>> solve_vector(const Grid& a, const std::vector<mpq_class>& b);

/// det(xI - a) in ascending coefficients, by evaluating cofactor
/// determinants at x = 0..n and interpolating.
std::vector<mpq_class> char_poly(const hirano::Matrix& a);
/// Smallest e with a^e = 0 by repeated multiplication.
std::optional<std::size_t> nil_exponent(const hirano::Matrix& a);
/// max(1, first k with rank a^k = rank a^(k+1)).
std::size_t index(const hirano::Matrix& a);
/// Z in span{a^n, ..., a^(2n)} with Z a^(n+1) = a^n. That Z is unique and
/// equals the Drazin inverse; the three defining equations are re-checked
/// and a violation aborts the test via std::logic_error.
hirano::Matrix drazin(const hirano::Matrix& a);

}  // namespace oracle
