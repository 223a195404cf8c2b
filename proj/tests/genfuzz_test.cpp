#include <gtest/gtest.h>

#include <set>
#include <utility>

#include "hirano/blockthm.hpp"
#include "hirano/drazin.hpp"
#include "hirano/error.hpp"
#include "hirano/genfuzz.hpp"
#include "oracle.hpp"

using namespace hirano;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

GenConfig config(std::uint64_t seed, std::size_t n, std::size_t trials = 100) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.block_size = n;
  cfg.trials = trials;
  return cfg;
}

/// Ascending coefficients of (x - r)^n.
std::vector<mpq_class> power_of_linear(int r, std::size_t n) {
  std::vector<mpq_class> p{1};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<mpq_class> next(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= r * p[i];
    }
    p = std::move(next);
  }
  return p;
}

/// Whether the target lies outside its class, judged by the oracle.
bool oracle_target_outside_class(const TheoremReport& report) {
  const Matrix& t = report.target;
  const Matrix residual = report.target_class == InverseClass::StronglyDrazin ? t - t * t : t - t * t * t;
  return !oracle::nil_exponent(residual).has_value();
}

}  // namespace

TEST(DeriveSeed, DeterministicAndSpread) {
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
  EXPECT_NE(derive_seed(7, 3), derive_seed(7, 4));
  EXPECT_NE(derive_seed(7, 3), derive_seed(8, 3));
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(1, i));
  EXPECT_EQ(seen.size(), 1000u);
}

TEST(GenNilpotent, Examples) {
  EXPECT_TRUE(gen_nilpotent(1, config(1, 1)).is_zero());
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const Matrix m = gen_nilpotent(2, config(s, 2));
    EXPECT_TRUE((m * m).is_zero());
  }
  const Matrix m4 = gen_nilpotent(4, config(42, 4));
  EXPECT_EQ(oracle::char_poly(m4), power_of_linear(0, 4));
  EXPECT_TRUE(oracle::nil_exponent(m4).has_value());
}

TEST(GenClass, DiagonalFixesTheSpectrum) {
  const std::vector<int> one{1};
  EXPECT_EQ(gen_class(3, one, config(5, 3), UpperPart::Zero), Matrix::identity(3));

  const std::vector<int> two{2};
  EXPECT_EQ(oracle::char_poly(gen_class(4, two, config(6, 4))), power_of_linear(2, 4));

  const std::vector<int> idem{0, 1};
  const std::vector<int> tri{-1, 0, 1};
  const std::vector<int> neg{-1};
  for (std::uint64_t s = 1; s <= 20; ++s) {
    const Matrix a = gen_class(3, idem, config(s, 3));
    EXPECT_TRUE(is_strongly_drazin_invertible(a).has_value());
    const Matrix h = gen_class(3, tri, config(s, 3));
    EXPECT_TRUE(is_hirano_invertible(h).has_value());
    const Matrix m = gen_class(3, neg, config(s, 3));
    EXPECT_TRUE(is_hirano_invertible(m).has_value());
    EXPECT_FALSE(is_strongly_drazin_invertible(m).has_value());
  }
  EXPECT_EQ(kind_of([] { gen_class(2, std::vector<int>{}, config(1, 2)); }), ErrorKind::GenerationFailure);
}

TEST(GenInstance, EveryTheoremHoldsAtSizesTwoToFour) {
  for (TheoremId id : kAllTheorems) {
    for (std::size_t n = 2; n <= 4; ++n) {
      for (std::uint64_t s = 1; s <= 3; ++s) {
        const BlockInstance inst = gen_instance(id, config(s, n));
        EXPECT_EQ(inst.block_count(), block_count(arity(id)));
        EXPECT_EQ(inst.a.rows(), n);
        const TheoremReport r = verify_conclusion(id, inst);
        EXPECT_EQ(r.verdict, Verdict::Verified) << to_string(id) << " n=" << n << " seed=" << s;
      }
    }
  }
}

TEST(GenInstance, DeterministicInTheSeed) {
  for (TheoremId id : {TheoremId::L2_4, TheoremId::T2_7, TheoremId::T3_4}) {
    EXPECT_EQ(gen_instance(id, config(11, 3)), gen_instance(id, config(11, 3)));
    EXPECT_NE(gen_instance(id, config(11, 3)), gen_instance(id, config(12, 3)));
  }
}

TEST(GenInstance, SizeOneIsRejectedForAdaptedRecipes) {
  EXPECT_EQ(kind_of([] { gen_instance(TheoremId::L2_1, config(1, 1)); }), ErrorKind::GenerationFailure);
  EXPECT_EQ(kind_of([] { gen_instance(TheoremId::T2_7, config(1, 1)); }), ErrorKind::GenerationFailure);
}

TEST(GenInstance, UnknownDropIsInvalid) {
  EXPECT_EQ(kind_of([] { gen_instance(TheoremId::T2_7, config(1, 3), Profile::Default, "XY=0"); }),
            ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { necessity_probe(TheoremId::T2_7, "XY=0", config(1, 3)); }), ErrorKind::InvalidArgument);
}

TEST(GenInstance, DropViolatesOnlyTheDroppedHypothesis) {
  for (TheoremId id : {TheoremId::L2_2, TheoremId::T2_7, TheoremId::L3_3, TheoremId::C3_5}) {
    for (const std::string& name : droppable_hypotheses(id)) {
      const BlockInstance inst = gen_instance(id, config(3, 3), Profile::Default, name);
      const HypothesisReport h = check_hypotheses(id, inst);
      EXPECT_TRUE(h.all_hold_except(name)) << to_string(id) << " " << name;
      ASSERT_NE(h.find(name), nullptr);
      EXPECT_FALSE(h.find(name)->holds) << to_string(id) << " " << name;
    }
  }
}

TEST(GenInstance, ImpliedHypothesesCannotBeDropped) {
  // Each of these follows from the remaining hypotheses.
  const std::vector<std::pair<TheoremId, const char*>> implied = {
      {TheoremId::L2_4, "class-B"}, {TheoremId::L2_5, "class-BC"}, {TheoremId::L2_6, "class-BC"}};
  for (const auto& [id, name] : implied) {
    EXPECT_EQ(kind_of([&] { gen_instance(id, config(1, 3), Profile::Default, name); }),
              ErrorKind::GenerationFailure)
        << to_string(id) << " " << name;
  }
}

TEST(NecessityProbe, FindsReplayableCounterexamples) {
  const std::vector<std::pair<TheoremId, std::string>> drops = {
      {TheoremId::L2_1, "PQ=0"},         {TheoremId::T2_7, "D^piCA=0"},
      {TheoremId::L3_3, "A^HB=0"},       {TheoremId::L3_3, "AB^H=0"},
      {TheoremId::L3_3, "B^piABA^pi=0"}, {TheoremId::C3_5, "DD^piC=0"},
      {TheoremId::L2_6, "BD^2=0"}};
  for (const auto& [id, name] : drops) {
    const ProbeResult r = necessity_probe(id, name, config(1, 3, 200));
    ASSERT_TRUE(r.counterexample) << to_string(id) << " " << name;
    const Counterexample& ce = *r.counterexample;
    EXPECT_EQ(r.trials_run, ce.trial + 1);
    EXPECT_TRUE(oracle_target_outside_class(ce.report)) << to_string(id) << " " << name;
    EXPECT_TRUE(ce.report.hypotheses.all_hold_except(name));

    const BlockInstance replay = gen_instance(id, config(ce.seed, ce.block_size), Profile::Default, name);
    EXPECT_EQ(replay, ce.instance);
  }
}

TEST(NecessityProbe, LiteralCornerStatementNeedsAClassOnA) {
  const ProbeResult r = necessity_probe(TheoremId::C2_9, "class-A", config(1, 2), Profile::AsStated);
  ASSERT_TRUE(r.counterexample);
  EXPECT_EQ(r.counterexample->report.verdict, Verdict::ConclusionFail);
  EXPECT_TRUE(oracle_target_outside_class(r.counterexample->report));
}

TEST(NecessityProbe, ZeroTrials) {
  const ProbeResult r = necessity_probe(TheoremId::L2_1, "PQ=0", config(1, 3, 0));
  EXPECT_EQ(r.trials_run, 0u);
  EXPECT_FALSE(r.counterexample);
}

TEST(SoundnessSweep, AllTheoremsVerifiedWithFullCoverage) {
  for (TheoremId id : kAllTheorems) {
    const SweepSummary s = soundness_sweep(id, config(9, 2, 30), Profile::Default, {2, 3, 4}, 1);
    EXPECT_EQ(s.trials, 30u);
    EXPECT_EQ(s.verified, 30u) << to_string(id);
    EXPECT_TRUE(s.counterexamples.empty());
    EXPECT_EQ(s.generation_failures, 0u);
    if (id == TheoremId::L3_2) continue;   // B = 0 is a hypothesis
    for (std::size_t n = 2; n <= 4; ++n) {
      EXPECT_GT(s.nonvacuous_by_size.count(n) ? s.nonvacuous_by_size.at(n) : 0u, 0u) << to_string(id) << " n=" << n;
    }
  }
}

TEST(SoundnessSweep, IndependentOfThreadCount) {
  const GenConfig cfg = config(21, 2, 40);
  const SweepSummary one = soundness_sweep(TheoremId::T2_7, cfg, Profile::Default, {2, 3}, 1);
  const SweepSummary three = soundness_sweep(TheoremId::T2_7, cfg, Profile::Default, {2, 3}, 3);
  EXPECT_EQ(one.verified, three.verified);
  EXPECT_EQ(one.side_condition_failures, three.side_condition_failures);
  EXPECT_EQ(one.nonvacuous_by_size, three.nonvacuous_by_size);
  EXPECT_EQ(one.counterexamples.size(), three.counterexamples.size());
}

TEST(SoundnessSweep, LiteralCornerStatementFails) {
  const SweepSummary s = soundness_sweep(TheoremId::C2_9, config(2, 2, 60), Profile::AsStated, {2, 3}, 1);
  EXPECT_EQ(s.verified + s.conclusion_fail + s.hypotheses_fail, s.trials);
}
