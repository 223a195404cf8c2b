#include "hirano/genfuzz.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>

#include "gen_internal.hpp"
#include "hirano/error.hpp"

namespace hirano {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

std::size_t Rng::index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }

namespace detail {

Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng, int bound) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(-bound, bound);
  }
  return m;
}

Matrix strictly_upper(std::size_t n, Rng& rng, int bound) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = rng.uniform(-bound, bound);
  }
  return m;
}

Matrix unimodular(std::size_t n, Rng& rng) {
  Matrix lower = Matrix::identity(n);
  Matrix upper = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = rng.uniform(-1, 1);
      upper(j, i) = rng.uniform(-1, 1);
    }
  }
  return lower * upper;
}

Matrix class_matrix(std::size_t n, Rng& rng, int bound, std::vector<int> diagonal, UpperPart upper) {
  Matrix u = upper == UpperPart::Random ? strictly_upper(n, rng, bound) : Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) u(i, i) = diagonal.at(i);
  const Matrix t = unimodular(n, rng);
  return t * u * inverse(t);
}

namespace {

std::vector<int> draw_diagonal(Rng& rng, std::size_t n, const std::vector<int>& pool,
                               const std::vector<int>& required, bool want_zero) {
  std::vector<int> d(n);
  for (auto& v : d) v = pool[rng.index(pool.size())];
  std::size_t slot = 0;
  if (!required.empty()) d[slot++] = required[rng.index(required.size())];
  if (want_zero && slot < n && n >= 2) d[slot++] = 0;
  std::shuffle(d.begin(), d.end(), std::mt19937_64(static_cast<std::uint64_t>(rng.uniform(0, 1 << 30))));
  return d;
}

}  // namespace

Matrix sample(Rng& rng, std::size_t n, int bound, Kind kind, bool violate, bool invertible) {
  std::vector<int> pool;
  std::vector<int> required;
  if (violate) {
    pool = invertible ? std::vector<int>{-1, 1, 2} : std::vector<int>{-1, 0, 1, 2};
    switch (kind) {
      case Kind::Nilpotent: required = {-1, 1, 2}; break;
      case Kind::StronglyDrazin: required = {-1, 2}; break;
      case Kind::Hirano: required = {2}; break;
      case Kind::Any: break;
    }
  } else {
    switch (kind) {
      case Kind::Nilpotent: pool = {0}; break;
      case Kind::StronglyDrazin: pool = invertible ? std::vector<int>{1} : std::vector<int>{0, 1}; break;
      case Kind::Hirano: pool = invertible ? std::vector<int>{-1, 1} : std::vector<int>{-1, 0, 1}; break;
      case Kind::Any: pool = invertible ? std::vector<int>{-1, 1, 2} : std::vector<int>{-1, 0, 1, 2}; break;
    }
    if (!invertible && n >= 2 && kind != Kind::Nilpotent) {
      required = kind == Kind::StronglyDrazin ? std::vector<int>{1} : std::vector<int>{-1, 1};
    }
  }
  return class_matrix(n, rng, bound, draw_diagonal(rng, n, pool, required, !invertible), UpperPart::Random);
}

Matrix constrained(Rng& rng, std::size_t rows, std::size_t cols, int bound, const std::vector<Constraint>& constraints) {
  if (constraints.empty()) return random_matrix(rows, cols, rng, bound);
  std::optional<Matrix> system;
  for (const Constraint& c : constraints) {
    std::optional<Matrix> block;
    for (const Term& t : c) {
      Matrix k = kron(t.right.transpose(), t.left);
      if (block) {
        *block += k;
      } else {
        block = std::move(k);
      }
    }
    if (!block) continue;
    system = system ? vconcat(*system, *block) : *block;
  }
  if (!system) return random_matrix(rows, cols, rng, bound);
  const Matrix basis = null_space_basis(*system);
  Matrix x(rows, cols);
  for (std::size_t k = 0; k < basis.cols(); ++k) {
    const Rational coef = rng.uniform(-bound, bound);
    if (coef == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t i = 0; i < rows; ++i) x(i, j) += coef * basis(j * rows + i, k);
    }
  }
  return x;
}

}  // namespace detail

Matrix gen_nilpotent(std::size_t n, const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return detail::class_matrix(n, rng, cfg.entry_bound, std::vector<int>(n, 0), UpperPart::Random);
}

Matrix gen_class(std::size_t n, std::span<const int> allowed, const GenConfig& cfg, UpperPart upper) {
  if (allowed.empty()) throw Error(ErrorKind::GenerationFailure, "gen_class: empty eigenvalue set");
  Rng rng(cfg.seed);
  std::vector<int> diag(n);
  for (auto& v : diag) v = allowed[rng.index(allowed.size())];
  return detail::class_matrix(n, rng, cfg.entry_bound, std::move(diag), upper);
}

std::vector<std::string> droppable_hypotheses(TheoremId id) { return hypothesis_names(id, Profile::Default); }

namespace {

bool nonzero_blocks(TheoremId id, const BlockInstance& inst, const std::optional<std::string>& dropped) {
  if (inst.a.is_zero()) return false;
  const bool b_forced_zero = id == TheoremId::L3_2 && !(dropped && *dropped == "B=0");
  if (!b_forced_zero && inst.b.is_zero()) return false;
  if (inst.c && inst.c->is_zero()) return false;
  if (inst.d && inst.d->is_zero()) return false;
  return true;
}

bool all_blocks_nonzero(const BlockInstance& inst) {
  return !inst.a.is_zero() && !inst.b.is_zero() && (!inst.c || !inst.c->is_zero()) &&
         (!inst.d || !inst.d->is_zero());
}

std::size_t env_threads() {
  const char* env = std::getenv("THREADS");
  if (!env) return 1;
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
  if (ec != std::errc() || v == 0) return 1;
  return v;
}

}  // namespace

BlockInstance gen_instance(TheoremId id, const GenConfig& cfg, Profile profile,
                           const std::optional<std::string>& dropped) {
  if (dropped) {
    const auto names = droppable_hypotheses(id);
    if (std::find(names.begin(), names.end(), *dropped) == names.end()) {
      throw Error(ErrorKind::InvalidArgument,
                  std::string(to_string(id)) + " has no hypothesis named '" + *dropped + "'");
    }
  }
  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(cfg.max_retries, 1); ++attempt) {
    Rng rng(derive_seed(cfg.seed, attempt));
    detail::GenContext ctx{rng, cfg.block_size, cfg.entry_bound, profile, dropped};
    BlockInstance inst = detail::run_recipe(id, ctx);
    if (!nonzero_blocks(id, inst, dropped)) continue;
    if (!dropped) {
      const HypothesisReport report = check_hypotheses(id, inst, profile);
      if (!report.all_hold()) {
        for (const auto& h : report.items) {
          if (!h.holds) {
            throw Error(ErrorKind::Internal, std::string("generator for ") + std::string(to_string(id)) +
                                                 " produced an instance violating " + h.name);
          }
        }
      }
      return inst;
    }
    const HypothesisReport report = check_hypotheses(id, inst, Profile::Default);
    const Hypothesis* target = report.find(*dropped);
    if (report.all_hold_except(*dropped) && target && !target->holds) return inst;
  }
  throw Error(ErrorKind::GenerationFailure, std::string(to_string(id)) + ": no admissible instance of size " +
                                                std::to_string(cfg.block_size) + " after " +
                                                std::to_string(cfg.max_retries) + " attempts");
}

ProbeResult necessity_probe(TheoremId id, const std::string& dropped, const GenConfig& cfg, Profile profile) {
  ProbeResult out;
  out.theorem = id;
  out.dropped = dropped;
  const std::optional<std::string> drop = dropped.empty() ? std::nullopt : std::optional<std::string>(dropped);
  if (drop) {
    const auto names = droppable_hypotheses(id);
    if (std::find(names.begin(), names.end(), *drop) == names.end()) {
      throw Error(ErrorKind::InvalidArgument, std::string(to_string(id)) + " has no hypothesis named '" + *drop + "'");
    }
  }
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    GenConfig trial = cfg;
    trial.seed = derive_seed(cfg.seed, i);
    ++out.trials_run;
    BlockInstance inst{Matrix(1, 1), Matrix(1, 1), std::nullopt, std::nullopt};
    try {
      inst = gen_instance(id, trial, profile, drop);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::GenerationFailure) throw;
      ++out.generation_failures;
      continue;
    }
    TheoremReport report = verify_conclusion(id, inst, profile);
    const bool concluded = report.target_exponent && !std::holds_alternative<std::monostate>(report.conclusion);
    if (!concluded) {
      out.counterexample = Counterexample{trial.seed, i, trial.block_size, std::move(inst), std::move(report)};
      break;
    }
  }
  return out;
}

SweepSummary soundness_sweep(TheoremId id, const GenConfig& cfg, Profile profile, std::vector<std::size_t> sizes,
                             unsigned threads) {
  if (sizes.empty()) sizes.push_back(cfg.block_size);

  struct Outcome {
    bool generated = false;
    std::size_t size = 0;
    bool nonvacuous = false;
    Verdict verdict = Verdict::HypothesesFail;
    std::vector<std::string> failed_sides;
    std::optional<Counterexample> counterexample;
  };
  std::vector<Outcome> outcomes(cfg.trials);

  auto run_trial = [&](std::size_t i) {
    GenConfig trial = cfg;
    trial.seed = derive_seed(cfg.seed, i);
    trial.block_size = sizes[i % sizes.size()];
    Outcome& o = outcomes[i];
    o.size = trial.block_size;
    BlockInstance inst{Matrix(1, 1), Matrix(1, 1), std::nullopt, std::nullopt};
    try {
      inst = gen_instance(id, trial, profile);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::GenerationFailure) throw;
      return;
    }
    o.generated = true;
    o.nonvacuous = all_blocks_nonzero(inst);
    TheoremReport report = verify_conclusion(id, inst, profile);
    o.verdict = report.verdict;
    if (report.witness) {
      for (const auto& s : report.witness->side_conditions) {
        if (!s.holds) o.failed_sides.push_back(s.name);
      }
    }
    if (report.verdict == Verdict::ConclusionFail) {
      o.counterexample = Counterexample{trial.seed, i, trial.block_size, std::move(inst), std::move(report)};
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads ? threads : env_threads(), cfg.trials));
  if (workers == 1) {
    for (std::size_t i = 0; i < cfg.trials; ++i) run_trial(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < cfg.trials; i = next++) run_trial(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  SweepSummary summary;
  summary.theorem = id;
  summary.trials = cfg.trials;
  for (auto& o : outcomes) {
    if (!o.generated) {
      ++summary.generation_failures;
      continue;
    }
    if (o.nonvacuous) ++summary.nonvacuous_by_size[o.size];
    switch (o.verdict) {
      case Verdict::Verified: ++summary.verified; break;
      case Verdict::HypothesesFail: ++summary.hypotheses_fail; break;
      case Verdict::ConclusionFail: ++summary.conclusion_fail; break;
    }
    for (const auto& name : o.failed_sides) ++summary.side_condition_failures[name];
    if (o.counterexample) summary.counterexamples.push_back(std::move(*o.counterexample));
  }
  return summary;
}

}  // namespace hirano
