#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hirano/blockthm.hpp"
#include "hirano/matrix.hpp"

namespace hirano {

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t block_size = 2;
  int entry_bound = 3;          ///< random entries lie in [-entry_bound, entry_bound]
  std::size_t trials = 100;
  std::size_t max_retries = 32;
};

/// splitmix64 of (seed, index); the per-trial and per-retry seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi);
  std::size_t index(std::size_t n);
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

enum class UpperPart { Random, Zero };

/// T U T^{-1} with U strictly upper triangular and T unimodular.
Matrix gen_nilpotent(std::size_t n, const GenConfig& cfg);
/// T (diag + strictly upper) T^{-1} with the diagonal drawn from `allowed`.
/// Throws GenerationFailure if `allowed` is empty.
Matrix gen_class(std::size_t n, std::span<const int> allowed, const GenConfig& cfg,
                 UpperPart upper = UpperPart::Random);

/// An instance satisfying every hypothesis of `id`, or, when `dropped` is
/// given, every hypothesis except that one (which is violated). Retries up
/// to cfg.max_retries derived seeds before throwing GenerationFailure.
BlockInstance gen_instance(TheoremId id, const GenConfig& cfg, Profile profile = Profile::Default,
                           const std::optional<std::string>& dropped = std::nullopt);

/// Names accepted by `dropped`: the hypotheses of the default profile.
std::vector<std::string> droppable_hypotheses(TheoremId id);

struct Counterexample {
  std::uint64_t seed = 0;        ///< cfg.seed for a replay through gen_instance
  std::size_t trial = 0;
  std::size_t block_size = 0;
  BlockInstance instance;
  TheoremReport report;
};

struct ProbeResult {
  TheoremId theorem{};
  std::string dropped;
  std::size_t trials_run = 0;
  std::size_t generation_failures = 0;
  std::optional<Counterexample> counterexample;
};

/// Runs cfg.trials instances that violate only `dropped` and returns the
/// first whose conclusion fails. Trial i uses derive_seed(cfg.seed, i).
ProbeResult necessity_probe(TheoremId id, const std::string& dropped, const GenConfig& cfg,
                            Profile profile = Profile::Default);

struct SweepSummary {
  TheoremId theorem{};
  std::size_t trials = 0;
  std::size_t verified = 0;
  std::size_t hypotheses_fail = 0;
  std::size_t conclusion_fail = 0;
  std::size_t generation_failures = 0;
  /// Trials where each witness side condition failed, keyed by name.
  std::map<std::string, std::size_t> side_condition_failures;
  /// Trials (per block size) whose four blocks were all nonzero.
  std::map<std::size_t, std::size_t> nonvacuous_by_size;
  std::vector<Counterexample> counterexamples;
};

/// Generates cfg.trials instances, trial i at size sizes[i % sizes.size()]
/// with seed derive_seed(cfg.seed, i), and verifies each. `threads` = 0
/// reads the THREADS environment variable (default 1). Aggregation is in
/// trial order, so the result does not depend on the thread count.
SweepSummary soundness_sweep(TheoremId id, const GenConfig& cfg, Profile profile = Profile::Default,
                             std::vector<std::size_t> sizes = {}, unsigned threads = 0);

}  // namespace hirano
