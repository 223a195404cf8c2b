#include <gtest/gtest.h>

#include "hirano/decomp.hpp"
#include "hirano/drazin.hpp"
#include "hirano/error.hpp"
#include "hirano/poly.hpp"
#include "inputs.hpp"
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

const Matrix kLowerUnipotent{{1, 0}, {2, 1}};
const Matrix kJordanOne{{1, 1}, {0, 1}};

Matrix corner_m() { return inputs::load_blocks("corner_blocks.json").assembled(); }
Matrix shift_m() { return inputs::load_blocks("shift_truncation_blocks.json").assembled(); }

// A mix of invertible, singular and nilpotent-heavy inputs.
Matrix mixed_input(inputs::Engine& rng, std::size_t n) {
  switch (inputs::uniform(rng, 0, 3)) {
    case 0: return inputs::random_matrix(rng, n, n, 3);
    case 1: return inputs::low_rank(rng, n, inputs::uniform(rng, 1, static_cast<int>(n)), 2);
    case 2: return inputs::with_spectrum_from(rng, n, {0, 0, 1, -2});
    default: return inputs::with_spectrum_from(rng, n, {-1, 0, 1, 2, 3});
  }
}

}  // namespace

TEST(Nilpotency, Examples) {
  EXPECT_EQ(nilpotency_exponent(Matrix{{0, 1}, {0, 0}}), 2u);
  EXPECT_FALSE(nilpotency_exponent(Matrix::identity(2)));
  const Matrix residual = kLowerUnipotent - power(kLowerUnipotent, 3);
  EXPECT_EQ(residual, (Matrix{{0, 0}, {-4, 0}}));
  EXPECT_EQ(nilpotency_exponent(residual), 2u);
  EXPECT_EQ(nilpotency_exponent(Matrix(3, 3)), 1u);
  EXPECT_EQ(kind_of([] { nilpotency_exponent(Matrix(2, 3)); }), ErrorKind::NotSquare);
}

TEST(Nilpotency, AgreesWithRepeatedMultiplication) {
  inputs::Engine rng(31);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = inputs::uniform(rng, 1, 5);
    const Matrix m = t % 2 ? inputs::similar_triangular(rng, std::vector<int>(n, 0)) : mixed_input(rng, n);
    EXPECT_EQ(nilpotency_exponent(m), oracle::nil_exponent(m));
    EXPECT_EQ(nilpotency_exponent(m).has_value(), char_poly(m) == Poly::monomial(static_cast<unsigned>(n)));
  }
}

TEST(Index, Examples) {
  EXPECT_EQ(drazin_index(Matrix::identity(3)), 1u);
  EXPECT_EQ(drazin_index(Matrix{{0, 1}, {0, 0}}), 2u);
  const Matrix a = Matrix::diagonal({2, 0});
  EXPECT_EQ(drazin_index(a), 1u);
  EXPECT_TRUE((a - a * a * Matrix::diagonal({Rational(1, 2), 0})).is_zero());
  EXPECT_EQ(drazin_index(Matrix(2, 2)), 1u);
}

TEST(Index, MatchesRankStabilisationAndDefinition) {
  inputs::Engine rng(37);
  for (int t = 0; t < 40; ++t) {
    const Matrix a = mixed_input(rng, inputs::uniform(rng, 1, 5));
    const std::size_t k = drazin_index(a);
    EXPECT_EQ(k, oracle::index(a));
    const Matrix nil = a - a * a * drazin_inverse(a).inverse;
    EXPECT_TRUE(power(nil, static_cast<unsigned>(k)).is_zero());
    if (k > 1) {
      EXPECT_FALSE(power(nil, static_cast<unsigned>(k - 1)).is_zero());
    }
  }
}

TEST(Drazin, Examples) {
  const Matrix nil{{0, 1, 2}, {0, 0, 3}, {0, 0, 0}};
  EXPECT_TRUE(drazin_inverse(nil).inverse.is_zero());
  const Matrix idem{{1, 1}, {0, 0}};
  EXPECT_EQ(drazin_inverse(idem).inverse, idem);
  const DrazinData d = drazin_inverse(Matrix::diagonal({2, 0}));
  EXPECT_EQ(d.inverse, Matrix::diagonal({Rational(1, 2), 0}));
  EXPECT_EQ(d.core_projection, Matrix::diagonal({1, 0}));
  EXPECT_EQ(d.nil_projection, Matrix::diagonal({0, 1}));
  EXPECT_EQ(kind_of([] { drazin_inverse(Matrix(1, 2)); }), ErrorKind::NotSquare);
}

TEST(Drazin, AgreesWithBruteForceOracle) {
  inputs::Engine rng(41);
  for (int t = 0; t < 60; ++t) {
    const Matrix a = mixed_input(rng, inputs::uniform(rng, 1, 5));
    const DrazinData d = drazin_inverse(a);
    EXPECT_EQ(d.inverse, oracle::drazin(a));
    EXPECT_TRUE(satisfies_drazin_equations(a, d.inverse));
    EXPECT_EQ(d.core_projection * d.core_projection, d.core_projection);
    EXPECT_EQ(d.core_projection + d.nil_projection, Matrix::identity(a.rows()));
    EXPECT_EQ(d.index, oracle::index(a));
  }
}

TEST(Drazin, ResidualsRejectWrongCandidates) {
  const Matrix a = Matrix::diagonal({2, 0});
  EXPECT_FALSE(drazin_residuals(a, Matrix::diagonal({1, 0})).holds());
  EXPECT_FALSE(satisfies_drazin_equations(a, Matrix::identity(2)));
  EXPECT_TRUE(drazin_residuals(a, Matrix::diagonal({Rational(1, 2), 0})).holds());
}

TEST(StronglyDrazin, Examples) {
  EXPECT_EQ(is_strongly_drazin_invertible(Matrix{{1, 1}, {0, 0}}), 1u);
  const Matrix a = inputs::load_blocks("shift_truncation_blocks.json").a;
  EXPECT_EQ(a - a * a, (Matrix{{0, 0, -1}, {0, 0, -1}, {0, 0, 0}}));
  EXPECT_TRUE(is_strongly_drazin_invertible(a));
  EXPECT_FALSE(is_strongly_drazin_invertible(Matrix{{-1}}));
}

TEST(StronglyDrazin, LowerUnipotentBlockIsStronglyDrazin) {
  // A - A^2 = [[0,0],[-2,0]] squares to zero.
  const Matrix residual = kLowerUnipotent - kLowerUnipotent * kLowerUnipotent;
  EXPECT_EQ(residual, (Matrix{{0, 0}, {-2, 0}}));
  EXPECT_EQ(is_strongly_drazin_invertible(kLowerUnipotent), 2u);
}

TEST(Hirano, Examples) {
  EXPECT_EQ(is_hirano_invertible(kLowerUnipotent), 2u);
  EXPECT_FALSE(is_hirano_invertible(Matrix{{2}}));
  EXPECT_EQ(is_hirano_invertible(Matrix::diagonal({-1, 0, 1})), 1u);
}

TEST(Eigencheck, Examples) {
  EXPECT_TRUE(eigencheck_hirano(corner_m()));
  const Matrix m = shift_m();
  EXPECT_TRUE(eigencheck_hirano(m));
  EXPECT_EQ(factor_unit_roots(char_poly(m)), (UnitRootFactorization{1, 5, 0}));
  EXPECT_FALSE(eigencheck_hirano(Matrix::diagonal({2, 0})));
}

TEST(HiranoInverse, Examples) {
  const HiranoCert c = hirano_inverse(kJordanOne);
  EXPECT_EQ(c.z, (Matrix{{1, -1}, {0, 1}}));
  EXPECT_EQ(c.tripotent, Matrix::identity(2));
  EXPECT_EQ(c.nilpart, (Matrix{{0, 1}, {0, 0}}));
  EXPECT_EQ(kJordanOne * kJordanOne - kJordanOne * c.z, (Matrix{{0, 2}, {0, 0}}));
  EXPECT_EQ(hirano_inverse(Matrix::diagonal({-1, 0, 1})).z, Matrix::diagonal({-1, 0, 1}));
  EXPECT_TRUE(hirano_inverse(Matrix{{0, 1}, {0, 0}}).z.is_zero());
  EXPECT_EQ(kind_of([] { hirano_inverse(Matrix::diagonal({2, 0})); }), ErrorKind::NotHirano);
  EXPECT_TRUE(audit(kJordanOne, c).empty());
}

TEST(HiranoInverse, AuditCatchesTamperedCertificates) {
  HiranoCert c = hirano_inverse(corner_m());
  EXPECT_TRUE(audit(corner_m(), c).empty());
  c.z(0, 0) += 1;
  EXPECT_FALSE(audit(corner_m(), c).empty());
  StrongDrazinCert s = strongly_drazin_inverse(kJordanOne);
  s.idem = Rational(2) * Matrix::identity(2);
  EXPECT_FALSE(audit(kJordanOne, s).empty());
}

TEST(StrongInverse, Examples) {
  const Matrix p{{1, 1}, {0, 0}};
  const StrongDrazinCert c = strongly_drazin_inverse(p);
  EXPECT_EQ(c.z, p);
  EXPECT_EQ(c.idem, p);
  EXPECT_TRUE(c.nilpart.is_zero());
  const StrongDrazinCert j = strongly_drazin_inverse(kJordanOne);
  EXPECT_EQ(j.z, (Matrix{{1, -1}, {0, 1}}));
  EXPECT_EQ(j.idem, Matrix::identity(2));
  EXPECT_EQ(j.nilpart, (Matrix{{0, 1}, {0, 0}}));
  EXPECT_EQ(kind_of([] { strongly_drazin_inverse(Matrix::diagonal({2, 0})); }), ErrorKind::NotStronglyDrazin);
  EXPECT_TRUE(audit(kJordanOne, j).empty());
}

TEST(Characterisations, HiranoEigencheckAndSquareAgree) {
  inputs::Engine rng(43);
  int hirano = 0;
  for (int t = 0; t < 150; ++t) {
    const Matrix a = inputs::with_spectrum_from(rng, inputs::uniform(rng, 1, 5), {-1, 0, 1, 2});
    const bool h = is_hirano_invertible(a).has_value();
    hirano += h;
    EXPECT_EQ(h, eigencheck_hirano(a));
    EXPECT_EQ(h, is_strongly_drazin_invertible(a * a).has_value());
    if (is_strongly_drazin_invertible(a)) {
      EXPECT_TRUE(h);
    }
    if (h) {
      const HiranoCert c = hirano_inverse(a);
      EXPECT_EQ(c.z, oracle::drazin(a));
      EXPECT_EQ(drazin_inverse(a).core_projection, c.tripotent * c.tripotent);
    }
  }
  EXPECT_GT(hirano, 20);
  EXPECT_LT(hirano, 150);
}

TEST(Characterisations, NegativeEigenvalueBreaksStrongDrazin) {
  inputs::Engine rng(47);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = inputs::similar_triangular(rng, {-1, 0, 1});
    EXPECT_TRUE(is_hirano_invertible(a));
    EXPECT_FALSE(is_strongly_drazin_invertible(a));
  }
}

TEST(Cline, Examples) {
  const Matrix b{{1, 2}, {0, 0}};
  EXPECT_EQ(cline_transfer(Matrix::identity(2), b, drazin_inverse(b).inverse), drazin_inverse(b).inverse);
  const Matrix a{{1, 0}, {0, 0}}, bb{{1, 1}, {0, 0}};
  EXPECT_EQ(bb * a, (Matrix{{1, 0}, {0, 0}}));
  EXPECT_EQ(cline_transfer(a, bb, Matrix{{1, 0}, {0, 0}}), (Matrix{{1, 1}, {0, 0}}));
  EXPECT_TRUE(cline_transfer(Matrix{{1, 0}}, Matrix{{0}, {1}}, Matrix(2, 2)).is_zero());
  EXPECT_EQ(kind_of([&] { cline_transfer(a, bb, Matrix::identity(2)); }), ErrorKind::BadInverse);
}

TEST(Cline, RectangularFactorsMatchDirectDrazin) {
  inputs::Engine rng(53);
  for (int t = 0; t < 40; ++t) {
    const std::size_t m = inputs::uniform(rng, 1, 4), n = inputs::uniform(rng, 1, 4);
    const Matrix a = inputs::random_matrix(rng, m, n, 2);
    const Matrix b = inputs::random_matrix(rng, n, m, 2);
    EXPECT_EQ(cline_transfer(a, b, drazin_inverse(b * a).inverse), oracle::drazin(a * b));
  }
}
