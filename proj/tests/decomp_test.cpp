#include <gtest/gtest.h>

#include "hirano/decomp.hpp"
#include "hirano/drazin.hpp"
#include "hirano/error.hpp"
#include "hirano/poly.hpp"
#include "inputs.hpp"

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

void expect_valid_split(const Matrix& a, const SplitPair& s) {
  EXPECT_EQ(s.structured + s.nilpotent, a);
  EXPECT_EQ(s.structured * s.nilpotent, s.nilpotent * s.structured);
  EXPECT_TRUE(power(s.nilpotent, static_cast<unsigned>(s.nil_exponent)).is_zero());
  if (s.nil_exponent > 1) {
    EXPECT_FALSE(power(s.nilpotent, static_cast<unsigned>(s.nil_exponent - 1)).is_zero());
  }
  EXPECT_LE(s.newton_steps, newton_step_cap(a.rows()));
}

const Matrix kJordanOne{{1, 1}, {0, 1}};

}  // namespace

TEST(NewtonCap, CeilLogPlusOne) {
  EXPECT_EQ(newton_step_cap(1), 1u);
  EXPECT_EQ(newton_step_cap(2), 2u);
  EXPECT_EQ(newton_step_cap(3), 3u);
  EXPECT_EQ(newton_step_cap(4), 3u);
  EXPECT_EQ(newton_step_cap(5), 4u);
  EXPECT_EQ(newton_step_cap(8), 4u);
}

TEST(JordanChevalley, Examples) {
  const Matrix d = Matrix::diagonal({3, -1, Rational(1, 2)});
  const SplitPair sd = jordan_chevalley(d);
  EXPECT_EQ(sd.structured, d);
  EXPECT_TRUE(sd.nilpotent.is_zero());
  EXPECT_LE(sd.newton_steps, 1u);

  const SplitPair j = jordan_chevalley(kJordanOne);
  EXPECT_EQ(j.structured, Matrix::identity(2));
  EXPECT_EQ(j.nilpotent, (Matrix{{0, 1}, {0, 0}}));

  const Matrix n{{0, 1}, {0, 0}};
  const SplitPair sn = jordan_chevalley(n);
  EXPECT_TRUE(sn.structured.is_zero());
  EXPECT_EQ(sn.nilpotent, n);
  EXPECT_EQ(kind_of([] { jordan_chevalley(Matrix(2, 3)); }), ErrorKind::NotSquare);
}

TEST(JordanChevalley, SemisimplePartIsAPolynomialInA) {
  inputs::Engine rng(59);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = inputs::uniform(rng, 1, 5);
    const Matrix a = inputs::with_spectrum_from(rng, n, {-2, 0, 1, 3});
    const SplitPair s = jordan_chevalley(a);
    expect_valid_split(a, s);
    EXPECT_TRUE(squarefree_part(char_poly(a)).evaluate(s.structured).is_zero());
    const Matrix probe = Poly({Rational(inputs::uniform(rng, -2, 2)), Rational(inputs::uniform(rng, -2, 2)), 1})
                             .evaluate(a);
    for (const Matrix& c : {a, a * a, probe}) EXPECT_EQ(s.structured * c, c * s.structured);
  }
}

TEST(Tripotent, Examples) {
  const Matrix e = Matrix::diagonal({-1, 0, 1});
  const SplitPair se = tripotent_nilpotent(e);
  EXPECT_EQ(se.structured, e);
  EXPECT_TRUE(se.nilpotent.is_zero());

  const SplitPair sj = tripotent_nilpotent(kJordanOne);
  EXPECT_EQ(sj.structured, Matrix::identity(2));
  EXPECT_EQ(sj.nilpotent, (Matrix{{0, 1}, {0, 0}}));
  EXPECT_EQ(sj.structured, jordan_chevalley(kJordanOne).structured);
  EXPECT_EQ(kind_of([] { tripotent_nilpotent(Matrix{{2}}); }), ErrorKind::NotHirano);
}

TEST(Tripotent, CornerBlockMatrixAgreesWithJordanChevalley) {
  const Matrix m = inputs::load_blocks("corner_blocks.json").assembled();
  const SplitPair s = tripotent_nilpotent(m);
  expect_valid_split(m, s);
  EXPECT_EQ(power(s.structured, 3), s.structured);
  const SplitPair jc = jordan_chevalley(m);
  EXPECT_EQ(s.structured, jc.structured);
  EXPECT_EQ(s.nilpotent, jc.nilpotent);
}

TEST(Tripotent, RandomHiranoInputs) {
  inputs::Engine rng(61);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = inputs::uniform(rng, 1, 8);
    const Matrix a = inputs::with_spectrum_from(rng, n, {-1, 0, 1});
    const SplitPair s = tripotent_nilpotent(a);
    expect_valid_split(a, s);
    EXPECT_EQ(power(s.structured, 3), s.structured);
    const SplitPair jc = jordan_chevalley(a);
    EXPECT_EQ(s.structured, jc.structured);
    EXPECT_EQ(s.nilpotent, jc.nilpotent);
    EXPECT_EQ(s.structured * s.structured, drazin_inverse(a).core_projection);
    const SplitPair f = idempotent_nilpotent(a * a);
    EXPECT_EQ(f.structured, s.structured * s.structured);
  }
}

TEST(Idempotent, Examples) {
  const Matrix p{{1, 1}, {0, 0}};
  const SplitPair sp = idempotent_nilpotent(p);
  EXPECT_EQ(sp.structured, p);
  EXPECT_TRUE(sp.nilpotent.is_zero());

  const Matrix a = inputs::load_blocks("shift_truncation_blocks.json").a;
  const SplitPair sa = idempotent_nilpotent(a);
  expect_valid_split(a, sa);
  EXPECT_EQ(sa.structured * sa.structured, sa.structured);
  EXPECT_TRUE((sa.nilpotent * sa.nilpotent).is_zero());
  EXPECT_EQ(sa.structured, jordan_chevalley(a).structured);

  const SplitPair sj = idempotent_nilpotent(kJordanOne);
  EXPECT_EQ(sj.structured, Matrix::identity(2));
  EXPECT_EQ(sj.nilpotent, (Matrix{{0, 1}, {0, 0}}));
  EXPECT_EQ(kind_of([] { idempotent_nilpotent(Matrix{{-1}}); }), ErrorKind::NotStronglyDrazin);
}

TEST(Idempotent, RandomStronglyDrazinInputs) {
  inputs::Engine rng(67);
  for (int t = 0; t < 40; ++t) {
    const Matrix a = inputs::with_spectrum_from(rng, inputs::uniform(rng, 1, 8), {0, 1});
    const SplitPair s = idempotent_nilpotent(a);
    expect_valid_split(a, s);
    EXPECT_EQ(s.structured * s.structured, s.structured);
    EXPECT_EQ(s.structured, jordan_chevalley(a).structured);
  }
}
