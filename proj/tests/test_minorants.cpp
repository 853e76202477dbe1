#include <gtest/gtest.h>

#include <cmath>

#include "be_nonuniform/bounds.hpp"
#include "be_nonuniform/minorants.hpp"
#include "test_support.hpp"

namespace bn = be_nonuniform;

namespace {

// independent route: sup-side quantities on the constructed one-summand law
double theorem2_via_system(double p, double delta, double s) {
  const bn::SummandSystem sys(bn::make_two_point(p));
  const double x = std::sqrt((1.0 - p) / p);
  const double lhs = (1.0 + std::pow(x, 2.0 + delta)) * bn::delta_n(sys, x, bn::DeltaSide::kStrict);
  return lhs / bn::rhs_structural(sys, delta, s);
}

}  // namespace

TEST(Delta1, Values) {
  EXPECT_LE(bn::testing::rel_diff(bn::delta1_two_point(0.08), 0.0796520190503628367), 1e-14);
  EXPECT_LE(bn::testing::rel_diff(bn::delta1_two_point(0.15), 0.14135485970354687), 1e-14);
  EXPECT_THROW(bn::delta1_two_point(0.0), bn::DomainError);
  EXPECT_THROW(bn::delta1_two_point(1.0), bn::DomainError);
}

TEST(Delta1, EqualsDeltaNOnConstructedLaw) {
  for (int k = 1; k <= 50; ++k) {
    const double p = 0.98 * k / 50.0;
    const bn::SummandSystem sys(bn::make_two_point(p));
    const double x = std::sqrt((1.0 - p) / p);
    EXPECT_NEAR(bn::delta1_two_point(p), bn::delta_n(sys, x, bn::DeltaSide::kStrict), 1e-14) << p;
  }
}

TEST(Theorem1, Values) {
  EXPECT_LE(bn::testing::rel_diff(bn::theorem1_minorant(0.15), 1.6153494737567096), 1e-13);
  EXPECT_GT(bn::theorem1_minorant(0.15), 1.6153);
  EXPECT_LE(bn::testing::rel_diff(bn::theorem1_minorant(0.5), 1.3653789842741718), 1e-13);
  EXPECT_LE(bn::testing::rel_diff(bn::theorem1_minorant(0.999), 0.5445058744013273), 1e-12);
  EXPECT_THROW(bn::theorem1_minorant(1.2), bn::DomainError);
}

TEST(Theorem1, IsWeightedDeviationAtUpperAtom) {
  for (double p : {0.05, 0.15, 0.4, 0.8}) {
    const bn::SummandSystem sys(bn::make_two_point(p));
    const double x = std::sqrt((1.0 - p) / p);
    const double direct = (1.0 + x) * (1.0 + x) * bn::delta_n(sys, x, bn::DeltaSide::kStrict);
    EXPECT_LE(bn::testing::rel_diff(bn::theorem1_minorant(p), direct), 1e-13) << p;
  }
}

TEST(Theorem2, Values) {
  EXPECT_LE(bn::testing::rel_diff(bn::theorem2_minorant(0.08, {1.0, 0.0}), 1.013517134889433), 1e-13);
  EXPECT_LE(bn::testing::rel_diff(bn::theorem2_minorant(0.076, {0.5, 0.0}), 1.0167073402180575), 1e-13);
  EXPECT_LE(bn::testing::rel_diff(bn::theorem2_minorant(0.3, {0.4, 2.5}), 0.248690162903408458), 1e-13);
}

TEST(Theorem2, CrossValidatesAgainstSystemRoute) {
  for (double p : {0.01, 0.06, 0.08, 0.2, 0.5, 0.9})
    for (double d : {0.0, 0.3, 1.0})
      for (double s : {0.0, 0.5, 3.0})
        EXPECT_LE(bn::testing::rel_diff(bn::theorem2_minorant(p, {d, s}), theorem2_via_system(p, d, s)), 1e-13)
            << p << " " << d << " " << s;
}

TEST(Theorem2, StrictlyDecreasingInS) {
  for (double d : {0.0, 0.5, 1.0}) {
    double prev = bn::theorem2_minorant(0.1, {d, 0.0});
    for (double s = 0.25; s <= 4.0; s += 0.25) {
      const double v = bn::theorem2_minorant(0.1, {d, s});
      EXPECT_LT(v, prev);
      prev = v;
    }
  }
}

TEST(Theorem2, DeltaZeroIsOneOverOnePlusSNearZero) {
  EXPECT_NEAR(bn::theorem2_minorant(1e-8, {0.0, 0.0}), 1.0, 1e-6);
  EXPECT_NEAR(bn::theorem2_minorant(1e-8, {0.0, 1.0}), 0.5, 1e-6);
}

TEST(Theorem2, TendsToOneAsPVanishes) {
  // the ratio carries a p^{1+d/2} term, so values just above 1 occur
  for (double d : {0.5, 1.0}) EXPECT_NEAR(bn::theorem2_minorant(1e-8, {d, 0.0}), 1.0, 1e-3);
}

TEST(LimitMinorant, Values) {
  EXPECT_EQ(bn::limit_minorant({0.0, 1.0}), 0.5);
  EXPECT_EQ(bn::limit_minorant({0.0, 0.0}), 1.0);
  EXPECT_EQ(bn::limit_minorant({0.7, 2.0}), 1.0);
}

TEST(ModulusParams, Validation) {
  EXPECT_THROW(bn::ModulusParams(1.1, 0.0), bn::DomainError);
  EXPECT_THROW(bn::ModulusParams(0.5, -0.1), bn::DomainError);
  EXPECT_NO_THROW(bn::ModulusParams(0.0, 0.0));
}
