#include <gtest/gtest.h>

#include <gqca/errors.hpp>
#include <gqca/seed.hpp>

namespace gqca {
namespace {

const IntMatrix kB{{0, 2}, {-2, 0}};

ExponentVector v(int a, int b) { return ExponentVector{a, b}; }

TorusElement mono(int a, int b, Coefficient c = 1) {
  return TorusElement::monomial(SkewForm::kronecker(), v(a, b), std::move(c));
}

const Coefficient kH = Coefficient::h_power(1);

TEST(CheckCompatible, KroneckerDiagonal) {
  const CompatiblePair p = check_compatible(SkewForm::kronecker(), ExchangeMatrix(kB));
  EXPECT_EQ(p.diag, (std::vector<std::int64_t>{2, 2}));
}

TEST(CheckCompatible, ZeroFormRejected) {
  try {
    check_compatible(SkewForm(IntMatrix(2, 2)), ExchangeMatrix(kB));
    FAIL() << "expected NotCompatible";
  } catch (const NotCompatible& e) {
    EXPECT_EQ(e.row(), 1);
    EXPECT_EQ(e.col(), 1);
  }
}

TEST(CheckCompatible, NegatedFormRejected) {
  EXPECT_THROW(check_compatible(SkewForm(IntMatrix{{0, -1}, {1, 0}}), ExchangeMatrix(kB)),
               NotCompatible);
}

TEST(CheckCompatible, OffDiagonalEntryNamed) {
  // Lambda^T B = [[2, 0], [0, 2], [-2, 0]] for this frozen extension.
  const IntMatrix lambda{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};
  const IntMatrix b{{0, 2}, {-2, 0}, {0, 0}};
  EXPECT_THROW(check_compatible(SkewForm(lambda), ExchangeMatrix(b)), NotCompatible);
}

TEST(CheckCompatible, RankMismatchRejected) {
  EXPECT_THROW(check_compatible(SkewForm::kronecker(),
                                ExchangeMatrix(IntMatrix{{0, 2}, {-2, 0}, {1, 1}})),
               NotCompatible);
}

TEST(ExchangeMatrixTest, ShapeValidated) {
  EXPECT_THROW(ExchangeMatrix(IntMatrix{{0, 1, 2}}), std::invalid_argument);
  EXPECT_THROW(ExchangeMatrix(IntMatrix(2, 0)), std::invalid_argument);
  const ExchangeMatrix b(IntMatrix{{0, 2}, {-2, 0}, {1, 0}});
  EXPECT_EQ(b.principal(), kB);
  EXPECT_EQ(b.at(3, 1), 1);
}

TEST(MatrixMutate, KroneckerNegates) {
  EXPECT_EQ(matrix_mutate(ExchangeMatrix(kB), Direction{1}).matrix(), -kB);
  EXPECT_EQ(matrix_mutate(ExchangeMatrix(kB), Direction{2}).matrix(), -kB);
}

TEST(MatrixMutate, FrozenRowUpdated) {
  // b'_{kl} = b_kl + (|b_ki| b_il + b_ki |b_il|) / 2 off the mutated row and
  // column: b'_{32} = 0 + (1 * 2 + 1 * 2) / 2 = 2.
  const ExchangeMatrix b(IntMatrix{{0, 2}, {-2, 0}, {1, 0}});
  const IntMatrix expected{{0, -2}, {2, 0}, {-1, 2}};
  EXPECT_EQ(matrix_mutate(b, Direction{1}).matrix(), expected);
}

TEST(MatrixMutate, IsInvolution) {
  const ExchangeMatrix b(IntMatrix{{0, 3, -1}, {-1, 0, 2}, {1, -2, 0}, {4, 0, -3}});
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(matrix_mutate(matrix_mutate(b, Direction{i}), Direction{i}), b);
  }
}

TEST(MatrixMutate, DirectionOutOfRange) {
  EXPECT_THROW(matrix_mutate(ExchangeMatrix(kB), Direction{0}), std::out_of_range);
  EXPECT_THROW(matrix_mutate(ExchangeMatrix(kB), Direction{3}), std::out_of_range);
}

TEST(EMatrix, KroneckerPlus) {
  const IntMatrix e = e_matrix(ExchangeMatrix(kB), Direction{1}, Sign::Plus);
  EXPECT_EQ(e, (IntMatrix{{-1, 0}, {2, 1}}));
  EXPECT_EQ(e * e, IntMatrix::identity(2));
}

TEST(EMatrix, KroneckerMinus) {
  const IntMatrix e = e_matrix(ExchangeMatrix(kB), Direction{1}, Sign::Minus);
  EXPECT_EQ(e, (IntMatrix{{-1, 0}, {0, 1}}));
  EXPECT_EQ(e * e, IntMatrix::identity(2));
}

TEST(EMatrix, ZeroColumnGivesReflection) {
  const ExchangeMatrix b(IntMatrix{{0, 1}, {0, 0}, {0, 5}});
  const IntMatrix expected{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(e_matrix(b, Direction{1}, Sign::Plus), expected);
  EXPECT_EQ(e_matrix(b, Direction{1}, Sign::Minus), expected);
}

TEST(MutatePair, KroneckerSignIndependent) {
  const CompatiblePair p = check_compatible(SkewForm::kronecker(), ExchangeMatrix(kB));
  const CompatiblePair plus = mutate_pair(p, Direction{1}, Sign::Plus);
  const CompatiblePair minus = mutate_pair(p, Direction{1}, Sign::Minus);
  EXPECT_EQ(plus, minus);
  EXPECT_EQ(plus.lambda.matrix(), (IntMatrix{{0, -1}, {1, 0}}));
  EXPECT_EQ(plus.b.matrix(), -kB);
  EXPECT_EQ(plus.diag, p.diag);
}

TEST(MutatePair, TwiceIsIdentity) {
  const CompatiblePair p = check_compatible(SkewForm::kronecker(), ExchangeMatrix(kB));
  for (int i = 1; i <= 2; ++i) {
    const CompatiblePair once = mutate_pair(p, Direction{i}, Sign::Plus);
    EXPECT_EQ(mutate_pair(once, Direction{i}, Sign::Minus), p);
    EXPECT_EQ(mutate_pair(once, Direction{i}, Sign::Plus), p);
  }
}

TEST(HVectorTest, Validation) {
  EXPECT_NO_THROW(HVector({1, kH, 1}));
  EXPECT_THROW(HVector({Coefficient(1)}), InvalidSeed);
  EXPECT_THROW(HVector({2, kH, 2}), InvalidSeed);
  EXPECT_THROW(HVector({1, kH, 0, 1}), InvalidSeed);
  EXPECT_THROW(HVector({1, Coefficient::q_power(1), 1}), InvalidSeed);
  EXPECT_NO_THROW(HVector({1, Coefficient::q_power(1) + Coefficient::q_power(-1), 1}));
}

TEST(QuantumSeedTest, DVectorMustDivideColumn) {
  const CompatiblePair p = check_compatible(SkewForm::kronecker(), ExchangeMatrix(kB));
  const HVector cubic({1, kH, kH, 1});
  EXPECT_THROW(QuantumSeed(p, {3, 2}, {cubic, HVector({1, kH, 1})}), InvalidSeed);
}

TEST(QuantumSeedTest, DegreeMustMatch) {
  const CompatiblePair p = check_compatible(SkewForm::kronecker(), ExchangeMatrix(kB));
  EXPECT_THROW(QuantumSeed(p, {2, 2}, {HVector({1, 1}), HVector({1, kH, 1})}),
               InvalidSeed);
  EXPECT_THROW(QuantumSeed(p, {2}, {HVector({1, kH, 1})}), InvalidSeed);
}

TEST(QuantumSeedTest, BetaDividesColumn) {
  const QuantumSeed s = kronecker_seed();
  EXPECT_EQ(s.beta(Direction{1}), v(0, -1));
  EXPECT_EQ(s.beta(Direction{2}), v(1, 0));
}

TEST(MutateVariable, KroneckerDirectionOneGivesX3) {
  const TorusElement x3 = mono(-1, 2) + mono(-1, 1, kH) + mono(-1, 0);
  EXPECT_EQ(mutate_variable(kronecker_seed(), Direction{1}), x3);
}

TEST(MutateVariable, KroneckerDirectionTwoGivesX0) {
  const TorusElement x0 = mono(2, -1) + mono(1, -1, kH) + mono(0, -1);
  EXPECT_EQ(mutate_variable(kronecker_seed(), Direction{2}), x0);
}

TEST(MutateVariable, AgreesWithExactDivision) {
  const QuantumSeed s = kronecker_seed();
  const TorusElement x1 = mono(1, 0);
  const TorusElement x2 = mono(0, 1);
  const TorusElement one = TorusElement::constant(SkewForm::kronecker(), 1);
  const TorusElement f2 =
      Coefficient::q_power(2) * x2 * x2 + Coefficient::q_power(1) * kH * x2 + one;
  EXPECT_EQ(mutate_variable(s, Direction{1}), exact_divide(Side::Left, x1, f2));
}

TEST(MutateVariable, BinomialCase) {
  // Rank 2 with B = [[0, 1], [-1, 0]], Lambda = Kronecker: Lambda^T B = I.
  const CompatiblePair p = check_compatible(SkewForm::kronecker(),
                                            ExchangeMatrix(IntMatrix{{0, 1}, {-1, 0}}));
  const QuantumSeed s(p, {1, 1}, {HVector({1, 1}), HVector({1, 1})});
  // beta^1 = (0, -1): X([beta]_+ - e1) + X([-beta]_+ - e1).
  EXPECT_EQ(mutate_variable(s, Direction{1}), mono(-1, 0) + mono(-1, 1));
  // beta^2 = (1, 0).
  EXPECT_EQ(mutate_variable(s, Direction{2}), mono(1, -1) + mono(0, -1));
}

}  // namespace
}  // namespace gqca
