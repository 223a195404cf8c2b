#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hirano/drazin.hpp"
#include "hirano/matrix.hpp"

namespace hirano {

/// Every additive / block result checked by this module. `L` lemmas,
/// `T` theorems, `C` corollaries; the number is section.item.
enum class TheoremId {
  L2_1, L2_2, L2_3, L2_4, L2_5, L2_6, T2_7, C2_8, C2_9, T2_10, C2_11,
  L3_1, L3_2, L3_3, T3_4, C3_5, T3_7, C3_8,
};

inline constexpr std::array<TheoremId, 18> kAllTheorems = {
    TheoremId::L2_1, TheoremId::L2_2, TheoremId::L2_3, TheoremId::L2_4, TheoremId::L2_5, TheoremId::L2_6,
    TheoremId::T2_7, TheoremId::C2_8, TheoremId::C2_9, TheoremId::T2_10, TheoremId::C2_11, TheoremId::L3_1,
    TheoremId::L3_2, TheoremId::L3_3, TheoremId::T3_4, TheoremId::C3_5, TheoremId::T3_7, TheoremId::C3_8,
};

std::string_view to_string(TheoremId id) noexcept;
std::optional<TheoremId> parse_theorem_id(std::string_view text);

/// `AsStated` only differs for C2_9, whose literal statement carries no
/// class hypothesis on A. `Default` adds "A strongly Drazin invertible".
enum class Profile { Default, AsStated };

enum class InverseClass { Nilpotent, StronglyDrazin, Hirano };
std::string_view to_string(InverseClass cls) noexcept;

/// Blocks the checker expects: P,Q (pair); A,B; A,B,C; or A,B,C,D.
enum class Arity { Pair, AB, ABC, ABCD };
Arity arity(TheoremId id) noexcept;
std::size_t block_count(Arity arity) noexcept;
/// Class asserted for the target matrix.
InverseClass conclusion_class(TheoremId id) noexcept;

/// Up to four blocks. Pair theorems store P in `a` and Q in `b`.
struct BlockInstance {
  Matrix a;
  Matrix b;
  std::optional<Matrix> c;
  std::optional<Matrix> d;

  std::size_t block_count() const noexcept { return 2 + (c ? 1 : 0) + (d ? 1 : 0); }
  /// [[A, B], [C, D]], with a zero D for three-block instances.
  Matrix assembled() const;

  friend bool operator==(const BlockInstance&, const BlockInstance&) = default;
};

enum class HypothesisKind { Annihilation, Class };

/// One hypothesis. For annihilation hypotheses `residual` is the product
/// required to vanish; for class hypotheses it is the matrix required to be
/// nilpotent (X, X - X^2 or X - X^3).
struct Hypothesis {
  std::string name;
  std::string formula;
  HypothesisKind kind = HypothesisKind::Annihilation;
  bool holds = false;
  Matrix residual{1, 1};
  std::optional<std::size_t> exponent;
};

struct HypothesisReport {
  std::vector<Hypothesis> items;

  bool all_hold() const;
  /// All hypotheses other than `skipped` hold.
  bool all_hold_except(std::string_view skipped) const;
  const Hypothesis* find(std::string_view name) const;
};

struct SideCondition {
  std::string name;
  bool holds = false;
  Matrix residual;
};

/// The summands a proof splits its target into, plus every auxiliary claim
/// the proof makes along the way, evaluated on the instance.
struct WitnessSplit {
  Matrix target{1, 1};                ///< the matrix the summands add up to
  std::vector<std::string> labels;
  std::vector<Matrix> summands;
  std::vector<SideCondition> side_conditions;

  bool all_hold() const;
  const SideCondition* find(std::string_view name) const;
};

enum class Verdict { Verified, HypothesesFail, ConclusionFail };
std::string_view to_string(Verdict v) noexcept;

using ConclusionCert = std::variant<std::monostate, HiranoCert, StrongDrazinCert>;

struct TheoremReport {
  TheoremId id{};
  Profile profile = Profile::Default;
  HypothesisReport hypotheses;
  std::optional<WitnessSplit> witness;
  std::optional<std::string> witness_error;
  Matrix target{1, 1};
  InverseClass target_class = InverseClass::Hirano;
  Matrix target_residual{1, 1};                  ///< target - target^2 or target - target^3
  std::optional<std::size_t> target_exponent;
  ConclusionCert conclusion;
  Verdict verdict = Verdict::HypothesesFail;
};

/// Hypothesis names in report order ("class-A", "BDD^D=0", ...).
std::vector<std::string> hypothesis_names(TheoremId id, Profile profile = Profile::Default);

/// Evaluates every hypothesis exactly. Throws ArityMismatch when the
/// instance has the wrong number of blocks and DimensionMismatch when they
/// are not conformable. Inverses appearing in hypotheses (A^D, A^H, ...) are
/// evaluated with the Drazin inverse, which equals the Hirano / strongly
/// Drazin inverse whenever those exist.
HypothesisReport check_hypotheses(TheoremId id, const BlockInstance& inst, Profile profile = Profile::Default);

/// The matrix whose class the statement concludes: P + Q, M, or the
/// special matrices [[AA^e, B], [A^e, 0]] and [[A, B], [I, 0]].
Matrix target_matrix(TheoremId id, const BlockInstance& inst);

/// The decomposition used by the proof of `id` together with its side
/// conditions. Throws HypothesesFail unless every hypothesis holds.
WitnessSplit witness_split(TheoremId id, const BlockInstance& inst, Profile profile = Profile::Default);

/// Hypotheses, witness, conclusion certificate and verdict. Never throws
/// for a failed conclusion: that is reported as ConclusionFail.
TheoremReport verify_conclusion(TheoremId id, const BlockInstance& inst, Profile profile = Profile::Default);

/// The Hirano inverse of Q = [[A, 0], [C, D^2 D^H]] built from
///   G = sum_{i<r} (D^H)^{i+2} C A^i A^pi
///     + sum_{i<s} D^pi (D^2 D^H)^i C (A^H)^{i+2} - D^H C A^H,
/// r = ind(A), s = ind(D), together with Q^pi = I - Q Q^H.
struct GMatrixResult {
  Matrix g;
  Matrix q;
  Matrix q_hirano;   ///< [[A^H, 0], [G, D^H]]
  Matrix q_pi;
  std::size_t index_a = 1;
  std::size_t index_d = 1;
};

/// Throws NotHirano if A or D is not Hirano invertible, and
/// CertificateFailure if the candidate fails the Hirano equations for Q or
/// Q^pi's lower-left block differs from -(C A^H + D^2 D^H G).
GMatrixResult g_matrix(const BlockInstance& inst);

}  // namespace hirano
