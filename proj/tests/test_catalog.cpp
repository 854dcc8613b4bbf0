#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "unrep/catalog.hpp"
#include "unrep/errors.hpp"

using namespace unrep;

namespace {

const Grid& grid400() {
  static const Grid g = uniform_grid(400);
  return g;
}

}  // namespace

TEST(Catalog, NamesInOrder) {
  const std::vector<std::string> want = {"example1",   "step-negation", "u3u4", "unique-rep",
                                         "nonc-power", "osum-nonc",     "equf"};
  EXPECT_EQ(catalog_names(), want);
}

TEST(Catalog, UnknownNames) {
  EXPECT_THROW(catalog_instance("nosuch"), NotFound);
  EXPECT_THROW(verify_instance("nosuch", grid400(), Tolerances{}), NotFound);
  const auto c = catalog_instance("example1");
  EXPECT_THROW(c.op("U9"), NotFound);
  EXPECT_THROW(c.neg("N9"), NotFound);
}

TEST(Catalog, EveryInstanceHasImplicationAndRelations) {
  for (const auto& name : catalog_names()) {
    const auto c = catalog_instance(name);
    EXPECT_EQ(c.name, name);
    EXPECT_NO_THROW(c.op("I")) << name;
    EXPECT_FALSE(c.expected_relations.empty()) << name;
    EXPECT_TRUE(c.op(c.uninorm).neutral.has_value()) << name;
  }
}

TEST(Catalog, AllInstancesVerify) {
  for (const auto& name : catalog_names()) {
    const auto rep = verify_instance(name, grid400(), Tolerances{});
    EXPECT_TRUE(rep.pass) << name;
    for (const auto& r : rep.relations) {
      EXPECT_TRUE(r.pass) << name << ": " << r.description << " residual " << r.residual
                          << " " << r.detail;
      EXPECT_LE(r.residual, rep.max_residual);
    }
  }
}

TEST(Catalog, Example1Relations) {
  const auto c = catalog_instance("example1");
  for (double x : grid400().points()) {
    EXPECT_NEAR(c.op("U1")(x, 0.5), x, 1e-12);
    EXPECT_NEAR(c.op("U2")(x, 0.25), x, 1e-12);
  }
}

TEST(Catalog, NoncPowerNegationSwapsPowers) {
  const auto c = catalog_instance("nonc-power");
  for (int n = -3; n <= 3; ++n) {
    EXPECT_NEAR(c.neg("N1")(oracle::u(n)), oracle::u(-n), 1e-12) << n;
  }
  const auto seq = power_sequence(c.op("U1"), 0.25, 5);
  for (int n = 1; n <= 5; ++n) {
    EXPECT_NEAR(seq.forward[n - 1], std::exp2(-std::exp2(n)), 1e-12) << n;
  }
}

TEST(Catalog, NoncPowerImplicationsAgreeInside) {
  const auto c = catalog_instance("nonc-power");
  const auto i1 = un_implication(c.op("U1"), c.neg("N1"));
  const auto i2 = un_implication(c.op("U2"), c.neg("N2"));
  const Grid inner = Grid::from_points([] {
    std::vector<double> p{0.0};
    for (double x : uniform_grid(400).interior()) p.push_back(x);
    p.push_back(1.0);
    return p;
  }());
  double w = 0.0;
  for (double x : inner.interior())
    for (double y : inner.interior()) w = std::max(w, std::abs(i1(x, y) - i2(x, y)));
  EXPECT_LE(w, 1e-9);
}

TEST(Catalog, EqUfLemma) {
  const auto u = catalog_instance("equf").op("U");
  const double r = u(0.25, 0.75);
  EXPECT_TRUE(r == 0.25 || r == 0.75) << r;
  const auto f = quadratic_band_map();
  EXPECT_EQ(f(0.25), 0.25);
  EXPECT_EQ(f(0.75), 0.75);
  for (double s : uniform_grid(400).points()) {
    if (s > 0.26 && s < 0.74) EXPECT_GT(std::abs(f(s) - s), 1e-6) << s;
  }
}

TEST(Catalog, RelationKindNames) {
  EXPECT_EQ(to_string(RelationKind::lemma_lemNW), "lemma-lemNW");
  EXPECT_EQ(to_string(RelationKind::implication_equality), "implication-equality");
}

TEST(Catalog, StepNegationCutsAreSteps) {
  const auto c = catalog_instance("step-negation");
  const auto rep =
      cut_report(c.op("I"), CutRole::implication_cut, 0.3, grid400(), Tolerances{});
  EXPECT_FALSE(rep.valid);
  EXPECT_FALSE(rep.continuity.continuous);
}
