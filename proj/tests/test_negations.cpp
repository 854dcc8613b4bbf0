#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "unrep/errors.hpp"
#include "unrep/negations.hpp"
#include "unrep/uninorms.hpp"

using namespace unrep;
namespace ns = unrep::negation_spec;

namespace {

const Grid& grid400() {
  static const Grid g = uniform_grid(400);
  return g;
}

std::vector<Negation> continuous_family() {
  return {build_negation(ns::Standard{}), build_negation(ns::Sugeno{2.0}),
          build_negation(ns::PowerLog{})};
}

}  // namespace

TEST(BuildNegation, PointValues) {
  EXPECT_DOUBLE_EQ(build_negation(ns::Sugeno{2.0})(0.5), 0.25);
  EXPECT_NEAR(build_negation(ns::PowerLog{})(0.25), std::sqrt(0.5), 1e-15);
  EXPECT_EQ(build_negation(ns::Standard{})(0.0), 1.0);
}

TEST(BuildNegation, PowerLogSwapsPowers) {
  const Negation n = build_negation(ns::PowerLog{});
  for (int k = -3; k <= 3; ++k) {
    EXPECT_NEAR(n(oracle::u(k)), oracle::u(-k), 1e-12) << "n=" << k;
  }
}

TEST(BuildNegation, PowerLogMatchesLiteralFormula) {
  const Negation n = build_negation(ns::PowerLog{});
  for (double x : grid400().points()) EXPECT_NEAR(n(x), oracle::powerlog(x), 1e-14);
}

TEST(BuildNegation, SugenoMatchesOracle) {
  for (double lambda : {0.0, 0.5, 2.0, 7.0}) {
    const Negation n = build_negation(ns::Sugeno{lambda});
    for (double x : grid400().points()) {
      EXPECT_DOUBLE_EQ(n(x), oracle::sugeno(lambda, x));
    }
  }
}

TEST(BuildNegation, StepFamily) {
  const Negation n = build_negation(ns::Step{0.3});
  EXPECT_EQ(n(0.0), 1.0);
  EXPECT_EQ(n(1.0), 0.0);
  EXPECT_EQ(n(0.5), 0.3);
  EXPECT_FALSE(n.claimed_continuous);
}

TEST(BuildNegation, SquareOfPowerLog) {
  const Negation base = build_negation(ns::PowerLog{});
  const Negation sq = build_negation(ns::SquareOf{base});
  for (double x : grid400().points()) EXPECT_DOUBLE_EQ(sq(x), base(x) * base(x));
  EXPECT_TRUE(classify_negation(sq, grid400(), Tolerances{}).is_negation);
}

TEST(BuildNegation, FromCut) {
  const BinaryOperator u1 = representable_uninorm(logit_generator(0.5), true);
  const Negation n = build_negation(ns::FromCut{u1, 0.25});
  EXPECT_DOUBLE_EQ(n(0.25), u1(0.25, 0.25));
}

TEST(BuildNegation, TableInterpolates) {
  const Negation n =
      build_negation(ns::Table{{{0.0, 1.0}, {0.5, 0.2}, {1.0, 0.0}}});
  EXPECT_DOUBLE_EQ(n(0.25), 0.6);
  EXPECT_DOUBLE_EQ(n(0.75), 0.1);
}

TEST(BuildNegation, RejectsBadSpecs) {
  EXPECT_THROW(build_negation(ns::Sugeno{-0.5}), InvalidSpec);
  EXPECT_THROW(build_negation(ns::Step{0.0}), InvalidSpec);
  EXPECT_THROW(build_negation(ns::Step{1.0}), InvalidSpec);
  EXPECT_THROW(build_negation(ns::Table{{{0.0, 1.0}, {0.5, 0.2}, {0.7, 0.4}, {1.0, 0.0}}}),
               InvalidSpec);
  EXPECT_THROW(build_negation(ns::Table{{{0.0, 0.9}, {1.0, 0.0}}}), InvalidSpec);
}

TEST(ClassifyNegation, StandardAndSugenoAreStrong) {
  for (const Negation& n :
       {build_negation(ns::Standard{}), build_negation(ns::Sugeno{2.0})}) {
    const NegationClass c = classify_negation(n, grid400(), Tolerances{});
    EXPECT_TRUE(c.is_negation && c.is_continuous && c.is_strict && c.is_strong)
        << n.name;
  }
}

TEST(ClassifyNegation, PowerLogIsStrong) {
  const NegationClass c =
      classify_negation(build_negation(ns::PowerLog{}), grid400(), Tolerances{});
  EXPECT_TRUE(c.is_strong);
}

TEST(ClassifyNegation, StepIsNeitherContinuousNorStrict) {
  const NegationClass c =
      classify_negation(build_negation(ns::Step{0.5}), grid400(), Tolerances{});
  EXPECT_TRUE(c.is_negation);
  EXPECT_FALSE(c.is_continuous);
  EXPECT_FALSE(c.is_strict);
  EXPECT_FALSE(c.is_strong);
}

TEST(ClassifyNegation, IncreasingMapIsNotANegation) {
  Negation n;
  n.eval = [](double x) { return x; };
  n.name = "identity";
  EXPECT_FALSE(classify_negation(n, grid400(), Tolerances{}).is_negation);
}

TEST(PseudoInverse, Standard) {
  const Negation r = modified_pseudo_inverse(build_negation(ns::Standard{}),
                                             InversionMethod::bisection);
  for (double x : grid400().points()) EXPECT_NEAR(r(x), 1.0 - x, 1e-15);
}

TEST(PseudoInverse, SugenoBisectionMatchesClosedForm) {
  const Negation r = modified_pseudo_inverse(build_negation(ns::Sugeno{2.0}),
                                             InversionMethod::bisection);
  EXPECT_NEAR(r(0.25), 0.5, 1e-12);
  for (double y : grid400().points()) {
    EXPECT_NEAR(r(y), oracle::sugeno(2.0, y), 1e-12) << "y=" << y;
  }
}

TEST(PseudoInverse, StepNegation) {
  const Negation r = modified_pseudo_inverse(build_negation(ns::Step{0.5}));
  EXPECT_EQ(r(0.0), 1.0);
  EXPECT_EQ(r(0.3), 1.0);
  EXPECT_EQ(r(0.7), 0.0);
}

// The three laws for continuous N with R computed by bisection:
// (i) the pseudo-inverse of R is N, (ii) N(R(x)) = x, (iii) R(N(x)) = x on
// the range of R.
TEST(PseudoInverse, LawsForContinuousNegations) {
  const Tolerances tol;
  for (const Negation& n : continuous_family()) {
    const Negation r = modified_pseudo_inverse(n, InversionMethod::bisection);
    const Negation rr = modified_pseudo_inverse(r, InversionMethod::bisection);
    double w1 = 0.0, w2 = 0.0, w3 = 0.0;
    for (double x : grid400().points()) {
      w1 = std::max(w1, std::abs(rr(x) - n(x)));
      w2 = std::max(w2, std::abs(n(r(x)) - x));
      if (std::abs(n(r(n(x))) - n(x)) <= tol.eq_tol) {
        w3 = std::max(w3, std::abs(r(n(x)) - x));
      }
    }
    EXPECT_LE(w1, 1e-9) << n.name;
    EXPECT_LE(w2, 1e-9) << n.name;
    EXPECT_LE(w3, 1e-9) << n.name;
  }
}

TEST(PseudoInverse, AutomaticUsesClosedInverse) {
  const Negation n = build_negation(ns::Sugeno{2.0});
  const Negation r = modified_pseudo_inverse(n);
  EXPECT_DOUBLE_EQ(r(0.25), oracle::sugeno(2.0, 0.25));
  EXPECT_EQ(r(0.0), 1.0);
}

TEST(PseudoInverse, AtZeroWithoutModification) {
  const Negation n = build_negation(ns::Step{0.5});
  EXPECT_EQ(pseudo_inverse_at(n, 0.0), 1.0);
  EXPECT_EQ(pseudo_inverse_at(n, 0.5), 0.0);
}
