#include <gtest/gtest.h>

#include <gqca/expression.hpp>

#include "support/oracles.hpp"

namespace gqca::testing {
namespace {

TEST(NaiveMul, GeneratorTwist) {
  NaiveElement x, y;
  x.add({1, 0}, 0, 0, 1);
  y.add({0, 1}, 0, 0, 1);
  const IntMatrix lambda{{0, 1}, {-1, 0}};
  const NaiveElement xy = naive_mul(x, y, lambda);
  const NaiveElement yx = naive_mul(y, x, lambda);
  EXPECT_EQ(xy.terms.at({1, 1}).at({1, 0}), 1);
  EXPECT_EQ(yx.terms.at({1, 1}).at({-1, 0}), 1);
}

TEST(NaiveMul, RoundTripsThroughLibraryTypes) {
  const SkewForm form = SkewForm::kronecker();
  TorusElement x(form);
  x.add_term(ExponentVector{-1, 2}, Coefficient::monomial(3, 1, 1));
  x.add_term(ExponentVector{0, 0}, Coefficient::q_power(-2));
  EXPECT_EQ(from_naive(to_naive(x), form), x);
}

TEST(Laurent2Test, ExactDivision) {
  const Laurent2 x = Laurent2::monomial({1, 0});
  const Laurent2 y = Laurent2::monomial({0, 1});
  const Laurent2 one = Laurent2::constant(1);
  const Laurent2 p = (x + y) * (x * y - one);
  EXPECT_EQ(Laurent2::divide(p, x + y), x * y - one);
  EXPECT_THROW(Laurent2::divide(x + one, y + one), std::domain_error);
  EXPECT_THROW(Laurent2::divide(x, Laurent2()), std::domain_error);
}

TEST(Laurent2Test, CommutativeRecurrence) {
  const auto x = commutative_cluster_variables(-2, 4);
  // x_3 = (x_2^2 + 1) / x_1
  const Laurent2 x3 =
      Laurent2::monomial({-1, 2}) + Laurent2::monomial({-1, 0});
  EXPECT_EQ(x.at(3), x3);
  const Laurent2 x0 = Laurent2::monomial({2, -1}) + Laurent2::monomial({0, -1});
  EXPECT_EQ(x.at(0), x0);
  EXPECT_EQ(x.size(), 7u);
}

TEST(CRecurrence, LeadingTerms) {
  const Coefficient h2 = Coefficient::h_power(2);
  EXPECT_EQ(c_from_recurrence(1), Coefficient(1));
  EXPECT_EQ(c_from_recurrence(2), h2);
  EXPECT_EQ(c_from_recurrence(3),
            h2 * 2 + Coefficient::q_power(-2) + Coefficient::q_power(2));
  EXPECT_TRUE(c_from_recurrence(0).is_zero());
}

TEST(LatexTranscription, Basic) {
  EXPECT_EQ(latex_to_expression("X(-1,2)+hX(-1,1)+X(-1,0)"),
            "X(-1,2)+h*X(-1,1)+X(-1,0)");
  EXPECT_EQ(latex_to_expression("(q^{-\\frac{1}{2}}+q^{\\frac{1}{2}})hX(-2,2)"),
            "(qh^(-1)+qh)*h*X(-2,2)");
  EXPECT_EQ(latex_to_expression("(q^{-1}+h^2+q)X(-2,1)"), "(q^(-1)+h^2+q)*X(-2,1)");
  EXPECT_EQ(latex_to_expression("q^{-\\frac{1}{2}}X_\\delta+h^2"), "qh^(-1)*Xd+h^2");
  EXPECT_EQ(latex_to_expression("qX_2X_{3}"), "q*X[2]*X[3]");
  EXPECT_EQ(latex_to_expression("&+X(-2,-1)\\\\ &+hX(-1,1)."), "+X(-2,-1)+h*X(-1,1)");
  EXPECT_THROW(latex_to_expression("\\sum"), std::invalid_argument);
}

TEST(LatexTranscription, EvaluatesToClosedForms) {
  const KroneckerAlgebra alg(8);
  const std::string x3 = latex_to_expression("X(-1,2)+hX(-1,1)+X(-1,0)");
  EXPECT_EQ(evaluate(x3, alg), alg.cluster_var(3));
}

}  // namespace
}  // namespace gqca::testing
