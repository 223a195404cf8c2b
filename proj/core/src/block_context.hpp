#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hirano/blockthm.hpp"
#include "hirano/drazin.hpp"
#include "hirano/matrix.hpp"

namespace hirano::detail {

/// Validated view of a BlockInstance with lazily cached Drazin data for
/// each block. Slots: 0 = A (or P), 1 = B (or Q), 2 = C, 3 = D.
class BlockContext {
 public:
  BlockContext(TheoremId id, const BlockInstance& inst);

  const Matrix& A() const { return inst_.a; }
  const Matrix& B() const { return inst_.b; }
  const Matrix& C() const { return *inst_.c; }
  const Matrix& D() const { return *inst_.d; }
  std::size_t n() const { return inst_.a.rows(); }
  std::size_t m() const { return inst_.b.cols(); }

  const DrazinData& drazin(int slot) const;
  const Matrix& inv(int slot) const { return drazin(slot).inverse; }
  const Matrix& e(int slot) const { return drazin(slot).core_projection; }
  const Matrix& pi(int slot) const { return drazin(slot).nil_projection; }
  std::size_t index(int slot) const { return drazin(slot).index; }

  /// Drazin data of B C (three- and four-block theorems).
  const DrazinData& drazin_bc() const;
  const Matrix& bc() const;

  const BlockInstance& instance() const { return inst_; }

 private:
  const Matrix& slot_matrix(int slot) const;

  const BlockInstance& inst_;
  mutable std::array<std::optional<DrazinData>, 4> cache_;
  mutable std::optional<Matrix> bc_;
  mutable std::optional<DrazinData> bc_drazin_;
};

inline constexpr int kA = 0;
inline constexpr int kB = 1;
inline constexpr int kC = 2;
inline constexpr int kD = 3;

/// x, x - x^2 or x - x^3: the matrix that must be nilpotent for `x` to be in `cls`.
Matrix class_residual(InverseClass cls, const Matrix& x);
bool in_class(InverseClass cls, const Matrix& x);

/// Accumulates named side conditions.
class SideConditionList {
 public:
  explicit SideConditionList(std::vector<SideCondition>& out, std::string prefix = {})
      : out_(out), prefix_(std::move(prefix)) {}

  void zero(const std::string& name, Matrix residual);
  void nilpotent(const std::string& name, Matrix m);
  void member(const std::string& name, InverseClass cls, const Matrix& x);
  void equal(const std::string& name, const Matrix& lhs, const Matrix& rhs);
  void flag(const std::string& name, bool holds, Matrix residual);

  SideConditionList nested(const std::string& prefix) const { return SideConditionList(out_, prefix_ + prefix); }

 private:
  std::vector<SideCondition>& out_;
  std::string prefix_;
};

/// Builds the proof witness for `id`; assumes the hypotheses were checked.
WitnessSplit build_witness(TheoremId id, const BlockContext& ctx, Profile profile);

}  // namespace hirano::detail
