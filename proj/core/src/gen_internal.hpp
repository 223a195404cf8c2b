#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hirano/genfuzz.hpp"

namespace hirano::detail {

enum class Kind { Nilpotent, StronglyDrazin, Hirano, Any };

/// One term L X R of a linear constraint on the unknown X.
struct Term {
  Matrix left;
  Matrix right;
};
/// Sum of terms required to vanish.
using Constraint = std::vector<Term>;

struct GenContext {
  Rng& rng;
  std::size_t n;
  int bound;
  Profile profile;
  std::optional<std::string> dropped;

  bool active(const char* name) const { return !dropped || *dropped != name; }
  bool is_dropped(const char* name) const { return dropped && *dropped == name; }
};

Matrix unimodular(std::size_t n, Rng& rng);
Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng, int bound);
Matrix strictly_upper(std::size_t n, Rng& rng, int bound);

/// T (diag + strictly upper) T^{-1}.
Matrix class_matrix(std::size_t n, Rng& rng, int bound, std::vector<int> diagonal, UpperPart upper);

/// A random member of `kind` (or, with `violate`, a matrix outside it).
/// `invertible` restricts the spectrum to nonzero values; otherwise a zero
/// eigenvalue is forced for n >= 2 so that annihilator constraints have
/// room.
Matrix sample(Rng& rng, std::size_t n, int bound, Kind kind, bool violate = false, bool invertible = false);

/// A random X (rows x cols) satisfying every constraint; zero when only the
/// trivial solution exists.
Matrix constrained(Rng& rng, std::size_t rows, std::size_t cols, int bound, const std::vector<Constraint>& constraints);

/// Block instance for `id` before any validation.
BlockInstance run_recipe(TheoremId id, GenContext& ctx);

}  // namespace hirano::detail
