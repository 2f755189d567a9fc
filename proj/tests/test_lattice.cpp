#include <gtest/gtest.h>

#include <random>
#include <set>

#include "chargelat/hypercube.hpp"
#include "chargelat/partition.hpp"
#include "support.hpp"

namespace chargelat {
namespace {

std::set<Box> as_set(const std::vector<Box>& v) { return {v.begin(), v.end()}; }

TEST(Box, RejectsBadDimensionAndCoordinates) {
  EXPECT_THROW(Box(std::size_t{0}), InputError);
  EXPECT_THROW(Box(std::size_t{17}), InputError);
  EXPECT_THROW((Box{1, -1}), InputError);
  EXPECT_THROW((Box{70000}), InputError);
  EXPECT_EQ((Box{2, 0}).minus(1), std::nullopt);
  EXPECT_EQ(*(Box{2, 0}).minus(0), (Box{1, 0}));
}

TEST(ValidatePartition, EmptyIsValid) {
  auto r = validate_partition(3, {});
  ASSERT_TRUE(std::holds_alternative<Partition>(r));
  EXPECT_TRUE(std::get<Partition>(r).empty());
}

TEST(ValidatePartition, PredecessorPresent) {
  const std::vector<Box> boxes{{0, 0}, {1, 0}};
  auto r = validate_partition(2, boxes);
  ASSERT_TRUE(std::holds_alternative<Partition>(r));
  EXPECT_EQ(std::get<Partition>(r).size(), 2u);
}

TEST(ValidatePartition, ReportsEveryViolation) {
  const std::vector<Box> lone{{1, 0}};
  auto r = validate_partition(2, lone);
  ASSERT_TRUE(std::holds_alternative<std::vector<MeltingViolation>>(r));
  const auto& v = std::get<std::vector<MeltingViolation>>(r);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], (MeltingViolation{{1, 0}, 0}));

  const std::vector<Box> corner{{1, 1}};
  auto r2 = validate_partition(2, corner);
  EXPECT_EQ(std::get<std::vector<MeltingViolation>>(r2).size(), 2u);
}

TEST(ValidatePartition, DimensionMismatchAndDuplicatesAreInputErrors) {
  const std::vector<Box> mixed{{0, 0}, {0, 0, 0}};
  EXPECT_THROW(validate_partition(2, mixed), InputError);
  const std::vector<Box> dup{{0, 0}, {0, 0}};
  EXPECT_THROW(validate_partition(2, dup), InputError);
}

TEST(AddableSet, EmptyHasOnlyOrigin) {
  EXPECT_EQ(addable_set(Partition(3)), (std::vector<Box>{{0, 0, 0}}));
}

TEST(AddableSet, SquareMatchesBruteForce) {
  const auto p = make_partition(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const auto brute = testing::brute_addable(p, 3);
  EXPECT_EQ(brute, (std::set<Box>{{2, 0}, {0, 2}}));
  EXPECT_EQ(as_set(addable_set(p)), brute);
}

TEST(AddableSet, FourDimensionalPairMatchesBruteForce) {
  const auto p = make_partition(4, {{0, 0, 0, 0}, {1, 0, 0, 0}});
  const auto brute = testing::brute_addable(p, 2);
  EXPECT_EQ(brute, (std::set<Box>{{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(as_set(addable_set(p)), brute);
}

TEST(RemovableSet, Examples) {
  EXPECT_EQ(removable_set(make_partition(3, {{0, 0, 0}})), (std::vector<Box>{{0, 0, 0}}));
  const auto square = make_partition(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(testing::brute_removable(square), (std::set<Box>{{1, 1}}));
  EXPECT_EQ(removable_set(square), (std::vector<Box>{{1, 1}}));
  EXPECT_TRUE(removable_set(Partition(6)).empty());
}

// Adding an addable box or removing a removable one keeps the melting rule,
// and both sets agree with the brute-force definition.
TEST(AddableRemovable, RandomPartitionsProperty) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto p = grow_random_partition(n, rng() % 9, rng);
    const auto add = addable_set(p);
    const auto rem = removable_set(p);
    for (const Box& b : add) {
      EXPECT_FALSE(p.contains(b));
      std::vector<Box> boxes = p.boxes();
      boxes.push_back(b);
      EXPECT_TRUE(std::holds_alternative<Partition>(validate_partition(n, boxes)));
    }
    for (const Box& b : rem) {
      EXPECT_TRUE(p.contains(b));
      std::vector<Box> boxes = p.boxes();
      boxes.erase(std::find(boxes.begin(), boxes.end(), b));
      EXPECT_TRUE(std::holds_alternative<Partition>(validate_partition(n, boxes)));
    }
    EXPECT_EQ(as_set(add), testing::brute_addable(p, 9));
    EXPECT_EQ(as_set(rem), testing::brute_removable(p));
  }
}

TEST(AllPartitions, YoungDiagramCountsArePartitionNumbers) {
  const auto all = all_partitions_up_to(2, 8);
  std::vector<int> by_size(9, 0);
  for (const auto& p : all) ++by_size[p.size()];
  EXPECT_EQ(by_size, (std::vector<int>{1, 1, 2, 3, 5, 7, 11, 15, 22}));
}

TEST(InG, SquareInSixDimensions) {
  // HC^(2) on axes 1,2 inside n = 6; target e1 + e2.
  const Box target{1, 1, 0, 0, 0, 0};
  const auto minus_top = make_partition(6, {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}});
  EXPECT_TRUE(in_G(minus_top, target));
  const auto single = make_partition(6, {{0, 0, 0, 0, 0, 0}});
  EXPECT_FALSE(in_G(single, target));
}

TEST(InG, TwoDimensionalOriginRemovable) {
  // c((1,1)) = h1 + h2 = 0 = c(origin), and the origin is removable.
  EXPECT_TRUE(in_G(make_partition(2, {{0, 0}}), Box{1, 1}));
}

TEST(MakeHypercube, Examples) {
  const std::vector<std::size_t> two{0, 1};
  const auto sq = make_hypercube(Box(6), two);
  EXPECT_EQ(as_set(sq), (std::set<Box>{{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0}}));
  const std::vector<std::size_t> one{0};
  EXPECT_EQ(as_set(make_hypercube(Box(3), one)), (std::set<Box>{{0, 0, 0}, {1, 0, 0}}));
  EXPECT_EQ(make_hypercube(Box(6), first_axes(6)).size(), 64u);
  const std::vector<std::size_t> dup{1, 1};
  EXPECT_THROW(make_hypercube(Box(3), dup), InputError);
  const std::vector<std::size_t> outside{3};
  EXPECT_THROW(make_hypercube(Box(3), outside), InputError);
}

TEST(HypercubeConfig, RejectsNonDownClosedMask) {
  EXPECT_THROW(HypercubeConfig::at_origin(3, 2, std::uint64_t{0b0010}), InputError);
  EXPECT_NO_THROW(HypercubeConfig::at_origin(3, 2, std::uint64_t{0b0011}));
}

TEST(EnumerateDownsets, SmallCounts) {
  EXPECT_EQ(enumerate_downsets(2, [](std::uint64_t) {}), 6u);
  EXPECT_EQ(testing::brute_downsets(3).size(), 20u);
  EXPECT_EQ(enumerate_downsets(3, [](std::uint64_t) {}), 20u);
}

TEST(EnumerateDownsets, MatchesBruteForceFilterExactly) {
  for (int d = 1; d <= 4; ++d) {
    std::vector<std::uint64_t> seen;
    const auto count = enumerate_downsets(d, [&](std::uint64_t m) { seen.push_back(m); });
    EXPECT_EQ(count, seen.size());
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end()) << "duplicate visit at d=" << d;
    EXPECT_EQ(seen, testing::brute_downsets(d)) << "d=" << d;
  }
}

TEST(EnumerateDownsets, RefusesIntractableDimension) {
  EXPECT_THROW(enumerate_downsets(7, [](std::uint64_t) {}), IntractableError);
  EXPECT_THROW(count_downsets(8), IntractableError);
  EXPECT_THROW(count_downsets(0), InputError);
}

TEST(EnumerateDownsets, ParallelVisitOrderMatchesSequential) {
  for (int d = 1; d <= 5; ++d) {
    std::vector<std::uint64_t> sequential;
    enumerate_downsets(d, [&](std::uint64_t m) { sequential.push_back(m); });
    for (unsigned jobs : {1u, 3u, 8u}) {
      auto visits = reduce_downsets<std::vector<std::uint64_t>>(
          d, jobs, [] { return std::vector<std::uint64_t>{}; },
          [](std::vector<std::uint64_t>& acc, std::uint64_t m) { acc.push_back(m); },
          [](std::vector<std::uint64_t>& total, std::vector<std::uint64_t>& part) {
            total.insert(total.end(), part.begin(), part.end());
          });
      EXPECT_EQ(visits, sequential) << "d=" << d << " jobs=" << jobs;
    }
  }
}

TEST(HypercubeG, CharacterizationExamples) {
  EXPECT_TRUE(hypercube_G_characterization(HypercubeConfig::at_origin(6, 2, std::uint64_t{0b1111}), 6));
  EXPECT_TRUE(hypercube_G_characterization(HypercubeConfig::at_origin(6, 6, std::uint64_t{0}), 6));
  EXPECT_FALSE(hypercube_G_characterization(HypercubeConfig::at_origin(6, 2, std::uint64_t{0b0001}), 6));
}

// The claimed membership list agrees with G computed from scratch by the
// melting rule, and with the cube-local shortcut, on every down-set.
TEST(HypercubeG, CharacterizationAgreesWithInG) {
  for (std::size_t n : {4u, 5u, 6u}) {
    for (int d = 1; d <= 4; ++d) {
      enumerate_downsets(d, [&](std::uint64_t mask) {
        const auto config = HypercubeConfig::at_origin(n, d, mask);
        const bool direct = in_G(config.to_partition(), config.top());
        EXPECT_EQ(hypercube_G_characterization(config, n), direct) << "n=" << n << " d=" << d << " mask=" << mask;
        EXPECT_EQ(hypercube_target_in_G(d, n, [mask](std::uint32_t c) { return (mask >> c & 1u) != 0; }), direct);
      });
    }
  }
}

}  // namespace
}  // namespace chargelat
