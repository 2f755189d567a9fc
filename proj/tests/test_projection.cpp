#include <gtest/gtest.h>

#include <map>
#include <random>

#include "chargelat/projection.hpp"
#include "chargelat/weights.hpp"

namespace chargelat {
namespace {

ProjectedPoint pt(std::initializer_list<int> l) { return ProjectedPoint::from_lattice(std::span<const int>(l.begin(), l.size())); }

TEST(Project, Examples) {
  EXPECT_EQ(project(Box{0, 0, 0}), pt({0, 0, 0}));
  EXPECT_EQ(project(Box{2, 3, 1}), pt({1, 2, 0}));
  EXPECT_EQ(project(Box{2, 3, 1})[0], 1);
  EXPECT_EQ(project(Box{1, 2, 0}), project(Box{2, 3, 1}));
  EXPECT_NE(project(Box{1, 0, 0}), project(Box{0, 1, 0}));
}

TEST(Project, ConstantAlongAllOnesDirection) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    std::vector<int> c(n);
    for (auto& v : c) v = static_cast<int>(rng() % 20);
    const int k = static_cast<int>(rng() % 30);
    std::vector<int> lifted = c;
    for (auto& v : lifted) v += k;
    EXPECT_EQ(project(Box(std::span<const int>(c))), project(Box(std::span<const int>(lifted))));
  }
}

TEST(Shift, Examples) {
  const std::vector<int> e1{1, 0, 0};
  const std::vector<int> minus_e1{-1, 0, 0};
  const std::vector<int> ones{1, 1, 1};
  EXPECT_EQ(shift(pt({0, 0, 0}), e1), pt({1, 0, 0}));
  EXPECT_EQ(shift(pt({1, 0, 0}), minus_e1), pt({0, 0, 0}));
  EXPECT_EQ(shift(pt({0, 0, 0}), ones), pt({0, 0, 0}));
  // -e1 is represented by e2 + e3.
  EXPECT_EQ(shift(pt({0, 0, 0}), minus_e1), pt({0, 1, 1}));
  const std::vector<int> wrong{1, 0};
  EXPECT_THROW(shift(pt({0, 0, 0}), wrong), InputError);
}

TEST(GenericWeights, TwoDimensionsForcedShape) {
  for (std::uint64_t seed : {0u, 1u, 99u}) {
    const auto w = generic_weights(2, seed);
    EXPECT_NE(w[0], 0);
    EXPECT_EQ(w[1], -w[0]);
  }
}

TEST(GenericWeights, FourDimensionsSeedSevenCertified) {
  const auto w = generic_weights(4, 7);
  Rational total = 0;
  for (const auto& h : w.values()) total += h;
  EXPECT_EQ(total, 0);
  EXPECT_EQ(w.certified_bound(), kDefaultGenericityBound);
  EXPECT_TRUE(bounded_injective(w.values(), kDefaultGenericityBound));
  EXPECT_EQ(generic_weights(4, 7), w);  // deterministic from seed
  EXPECT_NE(generic_weights(4, 8), w);
}

// Independent check of the certificate: enumerate every canonical point with
// components <= bound and look for equal evaluations directly.
TEST(GenericWeights, CertificateMatchesDirectEnumeration) {
  for (std::size_t n : {3u, 4u}) {
    const auto w = generic_weights(n, 11, 5);
    std::map<Rational, ProjectedPoint> seen;
    std::vector<int> l(n, 0);
    while (true) {
      if (*std::min_element(l.begin(), l.end()) == 0) {
        const auto p = ProjectedPoint::from_lattice(std::span<const int>(l));
        auto [it, inserted] = seen.emplace(eval_point(p, w), p);
        EXPECT_TRUE(inserted) << "collision between " << it->second << " and " << p;
      }
      std::size_t i = 0;
      while (i < n && l[i] == 5) l[i++] = 0;
      if (i == n) break;
      ++l[i];
    }
  }
  // A non-generic assignment the certificate must reject: h1 = h2.
  const std::vector<Rational> tied{Rational(3), Rational(3), Rational(-6)};
  EXPECT_FALSE(bounded_injective(tied, 2));
  // h1 = 2 h2 collides at bound 2 but not at bound 1.
  const std::vector<Rational> scaled{Rational(10), Rational(5), Rational(-15)};
  EXPECT_FALSE(bounded_injective(scaled, 2));
  EXPECT_TRUE(bounded_injective(scaled, 1));
}

// n = 3, seed 1: {0, +-h_i, h_i + h_j} are pairwise distinct except where the
// CY relation forces equality (h_i + h_j = -h_k).
TEST(GenericWeights, ThreeDimensionsSmallCombinations) {
  const auto w = generic_weights(3, 1);
  std::vector<std::pair<Rational, ProjectedPoint>> values;
  values.emplace_back(Rational(0), ProjectedPoint::origin(3));
  for (std::size_t i = 0; i < 3; ++i) {
    values.emplace_back(w[i], ProjectedPoint::origin(3).shifted_by_axis(i));
    values.emplace_back(-w[i], ProjectedPoint::origin(3).shifted_by_axis(i, -1));
    for (std::size_t j = i + 1; j < 3; ++j) {
      values.emplace_back(w[i] + w[j], ProjectedPoint::origin(3).shifted_by_axes((1u << i) | (1u << j)));
    }
  }
  for (std::size_t a = 0; a < values.size(); ++a) {
    for (std::size_t b = a + 1; b < values.size(); ++b) {
      EXPECT_EQ(values[a].first == values[b].first, values[a].second == values[b].second);
    }
  }
}

TEST(GenericWeights, LargeDimensionsClampBound) {
  const auto w = generic_weights(12, 3);
  EXPECT_GE(w.certified_bound(), 1);
  EXPECT_LE(w.certified_bound(), kDefaultGenericityBound);
  EXPECT_EQ(generic_weights(9, 3).certified_bound(), kDefaultGenericityBound);
  EXPECT_THROW(generic_weights(1, 0), InputError);
}

TEST(WeightAssignment, RejectsNonCalabiYau) {
  EXPECT_THROW(WeightAssignment::from_values({Rational(1), Rational(1)}), InputError);
}

TEST(EvalPoint, Examples) {
  const auto w2 = WeightAssignment::from_values({Rational(7, 3), Rational(-7, 3)});
  EXPECT_EQ(eval_point(ProjectedPoint::origin(2), w2), 0);
  EXPECT_EQ(eval_point(pt({1, 0}), w2), Rational(7, 3));
  const auto w3 = generic_weights(3, 4);
  EXPECT_EQ(eval_point(pt({0, 1, 1}), w3), -w3[0]);
  EXPECT_THROW(eval_point(pt({0, 1}), w3), InputError);
}

TEST(EvalPoint, FactorsThroughEquality) {
  const auto w = generic_weights(5, 21);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> l(5);
    for (auto& v : l) v = static_cast<int>(rng() % 7) - 3;
    std::vector<int> lifted = l;
    const int k = static_cast<int>(rng() % 5) - 2;
    for (auto& v : lifted) v += k;
    Rational raw = 0;
    for (std::size_t i = 0; i < 5; ++i) raw += l[i] * w[i];
    const auto p = ProjectedPoint::from_lattice(std::span<const int>(l));
    const auto q = ProjectedPoint::from_lattice(std::span<const int>(lifted));
    EXPECT_EQ(p, q);
    EXPECT_EQ(eval_point(p, w), eval_point(q, w));
    EXPECT_EQ(eval_point(p, w), raw);
  }
}

TEST(RationalText, RoundTripsAsNumeratorOverDenominator) {
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5/1");
  EXPECT_EQ(parse_rational("-3/2"), Rational(-3, 2));
  EXPECT_THROW(parse_rational("x/y"), InputError);
}

}  // namespace
}  // namespace chargelat
