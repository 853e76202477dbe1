#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "be_nonuniform/distributions.hpp"
#include "be_nonuniform/random_suite.hpp"
#include "test_support.hpp"

namespace bn = be_nonuniform;
using bn::Atom;
using bn::CdfSide;
using bn::DiscreteDistribution;
using bn::Region;

namespace {

void expect_same_law(const DiscreteDistribution& a, const DiscreteDistribution& b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(a.atoms()[i].value, b.atoms()[i].value, tol) << i;
    EXPECT_NEAR(a.atoms()[i].prob, b.atoms()[i].prob, tol) << i;
  }
}

}  // namespace

TEST(DiscreteDistribution, SortsAndMergesAtoms) {
  DiscreteDistribution d({{2.0, 0.25}, {-1.0, 0.5}, {2.0 + 5e-13, 0.25}});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.atoms()[0], (Atom{-1.0, 0.5}));
  EXPECT_DOUBLE_EQ(d.atoms()[1].prob, 0.5);
}

TEST(DiscreteDistribution, KeepsAtomsBeyondMergeTolerance) {
  DiscreteDistribution d({{0.0, 0.5}, {1e-11, 0.5}});
  EXPECT_EQ(d.size(), 2u);
}

TEST(DiscreteDistribution, RejectsInvalidInput) {
  EXPECT_THROW(DiscreteDistribution({}), bn::InvalidInput);
  EXPECT_THROW(DiscreteDistribution({{0.0, 0.5}, {1.0, 0.4}}), bn::InvalidInput);
  EXPECT_THROW(DiscreteDistribution({{0.0, 0.0}, {1.0, 1.0}}), bn::InvalidInput);
  EXPECT_THROW(DiscreteDistribution({{NAN, 1.0}}), bn::InvalidInput);
  EXPECT_NO_THROW(DiscreteDistribution({{0.0, 0.5}, {1.0, 0.5 + 5e-13}}));
}

TEST(MakeTwoPoint, Symmetric) {
  const auto d = bn::make_two_point(0.5);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.atoms()[0], (Atom{-1.0, 0.5}));
  EXPECT_EQ(d.atoms()[1], (Atom{1.0, 0.5}));
}

TEST(MakeTwoPoint, AtomsFollowClosedForm) {
  const auto d = bn::make_two_point(0.08);
  EXPECT_NEAR(d.atoms()[0].value, -0.294883912309794267, 1e-15);
  EXPECT_DOUBLE_EQ(d.atoms()[0].prob, 0.92);
  EXPECT_NEAR(d.atoms()[1].value, 3.391164991562634070, 1e-14);
  EXPECT_DOUBLE_EQ(d.atoms()[1].prob, 0.08);
  EXPECT_NEAR(bn::make_two_point(0.15).atoms()[1].value, 2.3804761428476167, 1e-15);
}

TEST(MakeTwoPoint, StandardizedOverGrid) {
  for (double p = 0.001; p < 1.0; p += 0.0137) {
    const auto d = bn::make_two_point(p);
    EXPECT_NEAR(d.mean(), 0.0, 1e-12) << p;
    EXPECT_NEAR(d.variance(), 1.0, 1e-12) << p;
  }
}

TEST(MakeTwoPoint, RejectsOutOfRange) {
  for (double p : {0.0, 1.0, -0.1, 1.5, double(NAN)}) {
    EXPECT_THROW(bn::make_two_point(p), bn::DomainError) << p;
    EXPECT_THROW(bn::make_pinelis(p), bn::DomainError) << p;
  }
}

TEST(MakePinelis, MomentsAndStandardization) {
  const auto half = bn::make_pinelis(0.5);
  EXPECT_EQ(half.atoms()[0], (Atom{-0.5, 0.5}));
  EXPECT_EQ(half.atoms()[1], (Atom{0.5, 0.5}));
  EXPECT_DOUBLE_EQ(half.variance(), 0.25);
  EXPECT_NEAR(bn::make_pinelis(0.08).variance(), 0.0736, 1e-15);
  for (double p : {0.01, 0.08, 0.15, 0.5, 0.77, 0.99})
    expect_same_law(bn::standardize(bn::make_pinelis(p)), bn::make_two_point(p), 1e-12);
}

TEST(Standardize, Examples) {
  const auto d = bn::standardize(DiscreteDistribution({{0.0, 0.5}, {2.0, 0.5}}));
  expect_same_law(d, DiscreteDistribution({{-1.0, 0.5}, {1.0, 0.5}}), 0.0);
  const auto two = bn::make_two_point(0.3);
  expect_same_law(bn::standardize(two), two, 1e-15);
  EXPECT_THROW(bn::standardize(DiscreteDistribution::point_mass(3.0)), bn::DegenerateError);
}

TEST(Standardize, IdempotentOnRandomLaws) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = bn::SplitMix64::stream(11, i);
    const auto d = bn::random_centered_law(rng, 2 + rng.below(5), 5.0);
    const auto once = bn::standardize(d);
    EXPECT_NEAR(once.mean(), 0.0, 1e-12);
    EXPECT_NEAR(once.variance(), 1.0, 1e-12);
    expect_same_law(bn::standardize(once), once, 1e-12);
  }
}

TEST(Convolve, BernoulliWalk) {
  const auto pm = bn::make_two_point(0.5);
  const auto s = bn::convolve(pm, pm);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.atoms()[0], (Atom{-2.0, 0.25}));
  EXPECT_EQ(s.atoms()[1], (Atom{0.0, 0.5}));
  EXPECT_EQ(s.atoms()[2], (Atom{2.0, 0.25}));
}

TEST(Convolve, PointMassAtZeroIsIdentity) {
  const auto d = bn::make_two_point(0.37);
  EXPECT_EQ(bn::convolve(d, DiscreteDistribution::point_mass(0.0)), d);
}

TEST(Convolve, TwoPointSquareMergesCrossTerms) {
  // Atoms -a, b with a = 0.5, b = 2: the cross sums -a+b and b-a coincide.
  const auto d = bn::make_two_point(0.2);
  const auto s = bn::convolve(d, d);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_NEAR(s.atoms()[0].value, -1.0, 1e-15);
  EXPECT_NEAR(s.atoms()[0].prob, 0.64, 1e-15);
  EXPECT_NEAR(s.atoms()[1].value, 1.5, 1e-15);
  EXPECT_NEAR(s.atoms()[1].prob, 0.32, 1e-15);
  EXPECT_NEAR(s.atoms()[2].value, 4.0, 1e-15);
  EXPECT_NEAR(s.atoms()[2].prob, 0.04, 1e-15);
}

TEST(Convolve, CapacityError) {
  const auto d = bn::make_two_point(0.3);
  EXPECT_THROW(bn::convolve(d, d, 3), bn::CapacityError);
  EXPECT_NO_THROW(bn::convolve(d, d, 4));
  // i.i.d. sums merge onto a lattice, so use distinct laws
  auto rng = bn::SplitMix64::stream(9, 0);
  std::vector<DiscreteDistribution> laws;
  for (int k = 0; k < 4; ++k) laws.push_back(bn::random_centered_law(rng, 4, 5.0));
  const bn::SummandSystem big(laws, 64);
  EXPECT_THROW(big.sum(), bn::CapacityError);
  const bn::SummandSystem lattice(std::vector<DiscreteDistribution>(12, bn::make_two_point(0.3)), 64);
  EXPECT_EQ(lattice.sum().size(), 13u);
}

TEST(Convolve, MomentsAddCommutativeAssociative) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = bn::SplitMix64::stream(3, i);
    const auto a = bn::random_centered_law(rng, 2 + rng.below(3), 5.0);
    const auto b = bn::random_centered_law(rng, 2 + rng.below(3), 5.0);
    const auto c = bn::random_centered_law(rng, 2 + rng.below(3), 5.0);
    const auto ab = bn::convolve(a, b);
    double mass = 0.0;
    for (const auto& at : ab.atoms()) mass += at.prob;
    EXPECT_NEAR(mass, 1.0, 1e-12);
    EXPECT_NEAR(ab.mean(), a.mean() + b.mean(), 1e-10);
    EXPECT_NEAR(ab.variance(), a.variance() + b.variance(), 1e-10);
    expect_same_law(ab, bn::convolve(b, a), 1e-12);
    expect_same_law(bn::convolve(ab, c), bn::convolve(a, bn::convolve(b, c)), 1e-12);
  }
}

TEST(Cdf, OneSidedValues) {
  const auto half = bn::make_two_point(0.5);
  EXPECT_EQ(bn::cdf(half, 1.0, CdfSide::kStrict), 0.5);
  EXPECT_EQ(bn::cdf(half, 1.0, CdfSide::kWeak), 1.0);
  EXPECT_EQ(bn::cdf(half, -5.0, CdfSide::kWeak), 0.0);
  const double p = 0.08, q = 1.0 - p;
  EXPECT_DOUBLE_EQ(bn::cdf(bn::make_two_point(p), std::sqrt(q / p), CdfSide::kStrict), q);
}

TEST(Cdf, StrictAndWeakDifferByAtomMass) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto rng = bn::SplitMix64::stream(5, i);
    const auto d = bn::random_centered_law(rng, 4, 5.0);
    for (const auto& a : d.atoms()) {
      const double strict = bn::cdf(d, a.value, CdfSide::kStrict);
      const double weak = bn::cdf(d, a.value, CdfSide::kWeak);
      EXPECT_LE(strict, weak);
      EXPECT_NEAR(weak - strict, a.prob, 1e-15);
      // strict side is the left limit of the weak CDF
      EXPECT_EQ(strict, bn::cdf(d, std::nextafter(a.value, -INFINITY), CdfSide::kWeak));
    }
  }
}

TEST(AbsMoment, Examples) {
  EXPECT_NEAR(bn::abs_moment(bn::make_two_point(0.5), 3.0), 1.0, 1e-15);
  const auto d = bn::make_two_point(0.08);
  EXPECT_NEAR(bn::abs_moment(d, 3.0), 3.1434625052224069, 1e-13);
  EXPECT_NEAR(bn::abs_moment(d, 3.0), (0.08 * 0.08 + 0.92 * 0.92) / std::sqrt(0.08 * 0.92), 1e-13);
  EXPECT_NEAR(bn::abs_moment(bn::standardize(DiscreteDistribution({{0, 0.2}, {1, 0.5}, {7, 0.3}})), 2.0), 1.0, 1e-14);
  EXPECT_THROW(bn::abs_moment(d, -1.0), bn::DomainError);
}

TEST(AbsMoment, TwoPointClosedFormGrid) {
  for (double p = 0.01; p < 1.0; p += 0.049)
    for (double delta = 0.0; delta <= 1.0; delta += 0.125) {
      const double q = 1.0 - p;
      const double closed = (std::pow(p, 1 + delta) + std::pow(q, 1 + delta)) / std::pow(p * q, delta / 2);
      EXPECT_LE(bn::testing::rel_diff(bn::abs_moment(bn::make_two_point(p), 2.0 + delta), closed), 1e-12)
          << p << " " << delta;
    }
}

TEST(TruncatedMoment, Examples) {
  const auto half = bn::make_two_point(0.5);
  EXPECT_EQ(bn::truncated_moment(half, 2.0, 2.0, Region::kInside), 1.0);
  EXPECT_EQ(bn::truncated_moment(half, 2.0, 2.0, Region::kOutside), 0.0);
  EXPECT_NEAR(bn::truncated_moment(bn::make_two_point(0.08), 2.0, 1.0, Region::kOutside), 0.92, 1e-15);
  // |X| = cutoff counts as inside
  EXPECT_EQ(bn::truncated_moment(half, 2.0, 1.0, Region::kInside), 1.0);
  EXPECT_EQ(bn::truncated_moment(half, 2.0, 1.0, Region::kOutside), 0.0);
  EXPECT_THROW(bn::truncated_moment(half, 2.0, 0.0, Region::kInside), bn::DomainError);
}

TEST(TruncatedMoment, InsidePlusOutsideIsFullMoment) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = bn::SplitMix64::stream(9, i);
    const auto d = bn::random_centered_law(rng, 4, 5.0);
    const double r = rng.uniform(0.0, 3.0), c = rng.uniform(0.01, 6.0);
    EXPECT_NEAR(bn::truncated_moment(d, r, c, Region::kInside) + bn::truncated_moment(d, r, c, Region::kOutside),
                bn::abs_moment(d, r), 1e-12);
  }
}

TEST(SummandSystem, CachesVariances) {
  const bn::SummandSystem sys({bn::make_two_point(0.5), bn::make_pinelis(0.5)});
  EXPECT_EQ(sys.n(), 2u);
  EXPECT_DOUBLE_EQ(sys.sigma2()[0], 1.0);
  EXPECT_DOUBLE_EQ(sys.sigma2()[1], 0.25);
  EXPECT_DOUBLE_EQ(sys.bn2(), 1.25);
}

TEST(SummandSystem, RejectsBadSummands) {
  EXPECT_THROW(bn::SummandSystem(std::vector<DiscreteDistribution>{}), bn::InvalidInput);
  EXPECT_THROW(bn::SummandSystem(DiscreteDistribution({{0.0, 0.5}, {2.0, 0.5}})), bn::InvalidInput);
  EXPECT_THROW(bn::SummandSystem(DiscreteDistribution::point_mass(0.0)), bn::DegenerateError);
}

TEST(SummandSystem, SumMatchesBruteForceEnumeration) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = bn::SplitMix64::stream(21, i);
    const auto sys = bn::random_system(rng);
    const auto& ns = sys.normalized_sum();
    for (double x : ns.values()) {
      const double t = x * sys.bn();
      // both sides taken away from the atom to stay clear of rounding in x * B_n
      EXPECT_NEAR(ns.lower_mass(x, CdfSide::kStrict),
                  bn::testing::brute_force_cdf(sys, t - 1e-9, true), 1e-12);
      EXPECT_NEAR(ns.lower_mass(x, CdfSide::kWeak),
                  bn::testing::brute_force_cdf(sys, t + 1e-9, true), 1e-12);
    }
  }
}

TEST(SummandSystem, CopiesShareTheSumCache) {
  const bn::SummandSystem a({bn::make_two_point(0.2), bn::make_two_point(0.4)});
  const bn::SummandSystem b = a;
  EXPECT_EQ(&a.sum(), &b.sum());
}
