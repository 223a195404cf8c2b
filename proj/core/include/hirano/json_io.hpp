#pragma once

#include <string>
#include <string_view>

#include "hirano/blockthm.hpp"
#include "hirano/decomp.hpp"
#include "hirano/drazin.hpp"
#include "hirano/genfuzz.hpp"
#include "hirano/matrix.hpp"

namespace hirano {

/// Matrix file: {"rows": [["p/q", ...], ...]}. Entries are strings ("3",
/// "-1/2"); plain JSON integers are accepted on input. Throws Parse for
/// malformed text or ragged rows.
Matrix matrix_from_json(std::string_view text);
std::string matrix_to_json(const Matrix& m);

/// Block file: {"A": rows, "B": rows, "C": rows, "D": rows}; each block may
/// also be given as {"rows": ...}. "P" and "Q" are accepted for the two
/// summands of pair statements. Unknown keys are ignored, so counterexample
/// files load directly.
BlockInstance blocks_from_json(std::string_view text);
std::string blocks_to_json(const BlockInstance& inst, bool pair_names = false);

std::string report_to_json(const TheoremReport& report);
std::string drazin_to_json(const DrazinData& data);
std::string cert_to_json(const HiranoCert& cert);
std::string cert_to_json(const StrongDrazinCert& cert);
std::string split_to_json(const SplitPair& split);

/// A block file with the generating seed, theorem and dropped hypothesis.
std::string counterexample_to_json(const Counterexample& ce, TheoremId id, std::string_view dropped, Profile profile,
                                   const GenConfig& cfg);

}  // namespace hirano
