#include "flatcover/error.hpp"
#include "flatcover/verify.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace flatcover;

namespace {

PointSetF2 to_set(const oracle::Set& o) {
  PointSetF2 s(o.r);
  for (Point p = 0; p < o.in.size(); ++p)
    if (o.in[p]) s.insert(p);
  return s;
}

}  // namespace

TEST(Complete, AgreesWithOracleOnRandomSets) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 400; ++t) {
    const int r = 1 + rng() % 4;
    const auto o = oracle::random_set(r, rng, 0.3 + 0.6 * (rng() % 100) / 100.0);
    const auto s = to_set(o);
    for (int d = 0; d <= r; ++d) {
      const bool expected = oracle::complete(o, d);
      EXPECT_EQ(is_complete(s, d).holds, expected) << r << " " << d;
      EXPECT_EQ(is_complete_enumerative(s, d), expected);
    }
  }
}

TEST(Complete, CounterexampleIsGenuine) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 200; ++t) {
    const int r = 2 + rng() % 3;
    const auto s = to_set(oracle::random_set(r, rng, 0.5));
    const int d = 1 + rng() % r;
    const auto rep = is_complete(s, d);
    if (rep.holds) continue;
    ASSERT_TRUE(rep.counterexample.has_value());
    EXPECT_FALSE(find_complete_witness(s, *rep.counterexample, d, 1u << 30).has_value());
  }
}

TEST(Nonblocking, AllModesAgreeWithOracle) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 400; ++t) {
    const int r = 1 + rng() % 4;
    const auto o = oracle::random_set(r, rng, 0.05 + 0.5 * (rng() % 100) / 100.0);
    const auto s = to_set(o);
    for (int d = 0; d <= r; ++d) {
      const bool expected = oracle::nonblocking(o, d);
      for (auto mode : {NonblockingMode::automatic, NonblockingMode::duality, NonblockingMode::direct})
        EXPECT_EQ(is_nonblocking(s, d, mode).holds, expected) << r << " " << d;
      EXPECT_EQ(is_nonblocking_enumerative(s, d), expected);
    }
  }
}

TEST(Nonblocking, DualityWithComplement) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 300; ++t) {
    const int r = 1 + rng() % 4;
    const auto s = to_set(oracle::random_set(r, rng, 0.4));
    for (int d = 0; d <= r; ++d)
      EXPECT_EQ(is_nonblocking(s, d).holds, is_complete(s.complement(), r - d).holds) << r << " " << d;
  }
}

TEST(Monotonicity, SupersetsAndSubsets) {
  std::mt19937_64 rng(35);
  for (int t = 0; t < 150; ++t) {
    const int r = 2 + rng() % 4;
    auto s = to_set(oracle::random_set(r, rng, 0.5));
    const int d = 1 + rng() % (r - 1);
    const Point extra = rng() & low_mask(r);
    auto bigger = s;
    bigger.insert(extra);
    if (is_complete(s, d).holds) EXPECT_TRUE(is_complete(bigger, d).holds);
    if (is_nonblocking(bigger, d).holds) EXPECT_TRUE(is_nonblocking(s, d).holds);
  }
}

TEST(Examples, SmallSets) {
  for (int r = 1; r <= 5; ++r) {
    EXPECT_TRUE(is_complete(PointSetF2::full(r), r).holds);
    EXPECT_TRUE(is_nonblocking(PointSetF2(r), 0).holds);
    EXPECT_TRUE(is_nonblocking(PointSetF2(r), r).holds);
    const Point one[] = {0};
    EXPECT_TRUE(is_complete(PointSetF2::from_points(r, one), 0).holds);
    EXPECT_EQ(is_nonblocking(PointSetF2::from_points(r, one), 1).holds, true);
  }
  const Point two[] = {0, 1};
  EXPECT_TRUE(is_complete(PointSetF2::from_points(1, two), 1).holds);
  EXPECT_TRUE(is_complete(PointSetF2::from_points(2, two), 1).holds);
  EXPECT_FALSE(is_complete(PointSetF2::from_points(2, std::span<const Point>(two, 1)), 1).holds);
  const Point three[] = {0b01, 0b10, 0b11};
  EXPECT_TRUE(is_complete(PointSetF2::from_points(2, three), 1).holds);
  EXPECT_FALSE(is_complete(PointSetF2(3), 1).holds);
  EXPECT_THROW(is_complete(PointSetF2(3), 4), ParameterError);
}

TEST(Sum3, EquivalentToTwoCompletenessThroughSmallCases) {
  for (int r = 2; r <= 3; ++r)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (1u << r)); ++mask) {
      const auto o = oracle::from_mask(r, mask);
      const auto s = to_set(o);
      EXPECT_EQ(sum3_property(s), oracle::sum3(o));
    }
  std::mt19937_64 rng(36);
  for (int t = 0; t < 300; ++t) {
    const auto o = oracle::random_set(4, rng, 0.35);
    EXPECT_EQ(sum3_property(to_set(o)), oracle::sum3(o));
  }
}

TEST(Budget, TooSmallIsInfeasible) {
  VerifyOptions opts;
  opts.budget = 10;
  EXPECT_THROW(is_complete(PointSetF2::full(8), 3, opts), InfeasibleError);
  EXPECT_THROW(is_nonblocking(PointSetF2::full(8), 3, NonblockingMode::direct, opts), InfeasibleError);
}

TEST(RecordFromSet, WitnessesFromSearch) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 60; ++t) {
    const int r = 2 + rng() % 3;
    const auto o = oracle::random_set(r, rng, 0.7);
    const int d = 1 + rng() % r;
    if (!oracle::complete(o, d)) continue;
    const auto rec = record_from_set(to_set(o), d, Property::complete);
    EXPECT_TRUE(check_witnesses(rec).holds);
  }
}
