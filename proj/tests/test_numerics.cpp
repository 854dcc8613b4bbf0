#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "unrep/errors.hpp"
#include "unrep/numerics.hpp"

using namespace unrep;

namespace {

UnitFunction fn(std::function<double(double)> f, Monotonicity dir) {
  UnitFunction u;
  u.eval = std::move(f);
  u.direction = dir;
  u.name = "test";
  return u;
}

double step_half(double x) {
  if (x == 0.0) return 1.0;
  if (x == 1.0) return 0.0;
  return 0.5;
}

}  // namespace

TEST(Grid, UniformFour) {
  const Grid g = uniform_grid(4);
  ASSERT_EQ(g.size(), 5u);
  const double want[] = {0, 0.25, 0.5, 0.75, 1};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(g[i], want[i]);
  EXPECT_DOUBLE_EQ(g.spacing_hint(), 0.25);
}

TEST(Grid, UniformTwo) {
  const Grid g = uniform_grid(2);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[1], 0.5);
}

TEST(Grid, RejectsOne) { EXPECT_THROW(uniform_grid(1), InvalidArgument); }

TEST(Grid, EndpointsExact) {
  for (int n : {2, 3, 7, 32, 400, 1000}) {
    const Grid g = uniform_grid(n);
    EXPECT_EQ(g[0], 0.0);
    EXPECT_EQ(g[g.size() - 1], 1.0);
    EXPECT_EQ(g.interior().size(), static_cast<std::size_t>(n - 1));
  }
}

TEST(Grid, FromPointsValidates) {
  EXPECT_THROW(Grid::from_points({0.0, 0.5}), InvalidArgument);
  EXPECT_THROW(Grid::from_points({0.0, 0.6, 0.5, 1.0}), InvalidArgument);
  EXPECT_THROW(Grid::from_points({1.0}), InvalidArgument);
  const Grid g = Grid::from_points({0.0, 0.1, 0.7, 1.0});
  EXPECT_DOUBLE_EQ(g.spacing_hint(), 0.6);
}

TEST(Tolerances, Validate) {
  Tolerances t;
  EXPECT_NO_THROW(t.validate());
  t.eq_tol = 0.0;
  EXPECT_THROW(t.validate(), InvalidArgument);
  t = Tolerances{};
  t.refine_rounds = 0;
  EXPECT_THROW(t.validate(), InvalidArgument);
}

TEST(ContinuityProbe, Square) {
  const auto v = monotone_continuity_probe(
      fn([](double x) { return x * x; }, Monotonicity::increasing),
      uniform_grid(100), Tolerances{});
  EXPECT_TRUE(v.continuous);
  EXPECT_TRUE(v.witnesses.empty());
  EXPECT_EQ(v.endpoint_low, 0.0);
  EXPECT_EQ(v.endpoint_high, 1.0);
}

TEST(ContinuityProbe, StepNegationJumpsAtBothEnds) {
  const auto v = monotone_continuity_probe(fn(step_half, Monotonicity::decreasing),
                                           uniform_grid(100), Tolerances{});
  EXPECT_FALSE(v.continuous);
  ASSERT_EQ(v.witnesses.size(), 2u);
  EXPECT_LT(v.witnesses[0].location, 0.01);
  EXPECT_GT(v.witnesses[1].location, 0.99);
  for (const auto& w : v.witnesses) EXPECT_NEAR(w.jump, 0.5, 1e-12);
}

TEST(ContinuityProbe, SteepPowerIsContinuous) {
  const auto v = monotone_continuity_probe(
      fn([](double x) { return std::pow(x, 1024.0); }, Monotonicity::increasing),
      uniform_grid(100), Tolerances{});
  EXPECT_TRUE(v.continuous);
}

TEST(ContinuityProbe, InteriorJumpLocated) {
  const double c = 0.3141;
  const auto v = monotone_continuity_probe(
      fn([c](double x) { return x < c ? x / 2 : 0.5 + x / 2; },
         Monotonicity::increasing),
      uniform_grid(50), Tolerances{});
  ASSERT_EQ(v.witnesses.size(), 1u);
  EXPECT_NEAR(v.witnesses[0].location, c, 0.02 / std::exp2(30));
  EXPECT_NEAR(v.witnesses[0].jump, 0.5, 1e-6);
}

TEST(ContinuityProbe, OutOfRangeThrows) {
  EXPECT_THROW(monotone_continuity_probe(
                   fn([](double x) { return 2 * x; }, Monotonicity::increasing),
                   uniform_grid(10), Tolerances{}),
               EvaluationError);
}

TEST(SupInvert, StandardNegation) {
  const auto f = fn([](double x) { return 1 - x; }, Monotonicity::decreasing);
  EXPECT_NEAR(sup_invert(f, 0.3), 0.7, 1e-15);
  EXPECT_EQ(sup_invert(f, 1.0), 0.0);
  EXPECT_NEAR(sup_invert(f, 0.0), 1.0, 1e-15);
}

TEST(SupInvert, StepNegation) {
  const auto f = fn(step_half, Monotonicity::decreasing);
  EXPECT_EQ(sup_invert(f, 0.7), 0.0);
  EXPECT_EQ(sup_invert(f, 0.3), 1.0);
}

TEST(SupInvert, NeedsDecreasingMetadata) {
  EXPECT_THROW(sup_invert(fn([](double x) { return x; }, Monotonicity::increasing), 0.5),
               InvalidArgument);
}

TEST(SupInvert, ResultBracketsTheLevelSet) {
  // f(y) <= target above r, and f(y) > target just below r.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto f = fn([](double x) { return (1 - x) / (1 + 5 * x); },
                    Monotonicity::decreasing);
  for (int k = 0; k < 200; ++k) {
    const double t = unit(rng);
    const double r = sup_invert(f, t);
    for (double y : uniform_grid(200).points()) {
      if (y > r + 1e-9) EXPECT_LE(f(y), t);
    }
    if (r > 1e-9) EXPECT_GT(f(r - 1e-9), t);
  }
}

TEST(InfReach, SquareRoot) {
  EXPECT_NEAR(inf_reach([](double x) { return x * x; }, 0.25), 0.5, 1e-15);
  EXPECT_EQ(inf_reach([](double x) { return x / 2; }, 0.75), 1.0);
}

TEST(LogClamp, KeepsInteriorAndClampsEnds) {
  EXPECT_EQ(log_clamp(0.5), 0.5);
  EXPECT_EQ(log_clamp(0.0), kLogEpsilon);
  EXPECT_EQ(log_clamp(2.0), 1.0);
}

TEST(GuardedEval, RejectsNaN) {
  EXPECT_THROW(guarded_eval([](double) { return std::nan(""); }, 0.5), EvaluationError);
  try {
    guarded_eval([](double x) { return x + 1; }, 0.25);
    FAIL();
  } catch (const EvaluationError& e) {
    EXPECT_EQ(e.point(), 0.25);
  }
}
