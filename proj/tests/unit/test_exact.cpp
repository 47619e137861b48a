#include "flatcover/error.hpp"
#include "flatcover/exact.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>

using namespace flatcover;

namespace {

// Smallest complete / largest non-blocking set sizes over every subset of F_2^r.
std::pair<int, int> brute_extremes(int r, int d) {
  int gamma = 1 << r, beta = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (1u << r)); ++mask) {
    const auto o = oracle::from_mask(r, mask);
    const int n = static_cast<int>(o.size());
    if (n < gamma && oracle::complete(o, d)) gamma = n;
    if (n > beta && oracle::nonblocking(o, d)) beta = n;
  }
  return {gamma, beta};
}

std::uint64_t choose(int n, int k) {
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

TEST(Exact, MatchesBruteForceUpToDimensionThree) {
  for (int r = 1; r <= 3; ++r)
    for (int d = 0; d <= r; ++d) {
      const auto [g, b] = brute_extremes(r, d);
      EXPECT_EQ(exact_gamma(r, d).value, static_cast<std::uint64_t>(g)) << r << "," << d;
      EXPECT_EQ(exact_beta(r, d).value, static_cast<std::uint64_t>(b)) << r << "," << d;
    }
}

TEST(Exact, Examples) {
  EXPECT_EQ(exact_gamma(3, 1).value, 2u);
  EXPECT_EQ(exact_gamma(3, 3).value, 8u);
  EXPECT_EQ(exact_gamma(3, 2).value, 6u);
  EXPECT_EQ(exact_gamma(2, 1).value, 2u);
  EXPECT_EQ(exact_beta(4, 3).value, 14u);
  const auto b42 = exact_beta(4, 2).value;
  EXPECT_GE(b42, 6u);
  EXPECT_LE(b42, 11u);
  EXPECT_EQ(exact_sum3(2).value, 4u);
  EXPECT_EQ(exact_sum3(3).value, 6u);
  EXPECT_EQ(exact_sum3(4).value, 7u);
}

TEST(Exact, OptimalSetsAttainTheValue) {
  for (int r = 1; r <= 4; ++r)
    for (int d = 0; d <= r; ++d) {
      const auto g = exact_gamma(r, d);
      EXPECT_TRUE(attains(g));
      EXPECT_EQ(g.optimal_set.size(), g.value);
      const auto b = exact_beta(r, r - d);
      EXPECT_TRUE(attains(b));
      EXPECT_EQ(g.value + b.value, (std::uint64_t{1} << r)) << "complement relation at " << r << "," << d;
    }
}

TEST(Exact, LowerBoundByPolynomialCount) {
  for (int r = 1; r <= 5; ++r)
    for (int d = 0; d <= r; ++d) {
      if (r == 5 && d >= 2 && d <= 3) continue;
      std::uint64_t floor = 0;
      for (int j = 0; j < d; ++j) floor += choose(r, j);
      EXPECT_GE(exact_gamma(r, d).value, floor) << r << "," << d;
    }
}

TEST(Exact, DimensionFiveTwo) {
  const auto g = exact_gamma(5, 2);
  EXPECT_EQ(g.value, 8u);
  EXPECT_TRUE(attains(g));
  oracle::Set o(5);
  for (Point p : g.optimal_set.points()) o.in[p] = true;
  EXPECT_TRUE(oracle::complete(o, 2));
}

TEST(Exact, DimensionFiveThree) {
  const auto g = exact_gamma(5, 3);
  EXPECT_EQ(g.value, 19u);
  EXPECT_TRUE(attains(g));
  oracle::Set o(5);
  for (Point p : g.optimal_set.points()) o.in[p] = true;
  EXPECT_TRUE(oracle::complete(o, 3));
}

TEST(Exact, TooLargeIsInfeasible) {
  EXPECT_THROW(exact_gamma(7, 3), InfeasibleError);
  EXPECT_THROW(exact_sum3(5), InfeasibleError);
  EXPECT_THROW(exact_gamma(6, 3, 1000), InfeasibleError);
  EXPECT_THROW(exact_gamma(3, 4), ParameterError);
}

TEST(Cache, RoundTripAndTamperedEntries) {
  const auto path = (std::filesystem::temp_directory_path() / "flatcover_unit_cache.json").string();
  std::filesystem::remove(path);
  EXPECT_EQ(ExactCache::load(path).size(), 0u);
  ExactCache cache;
  cache.put(exact_gamma(3, 2));
  cache.put(exact_beta(4, 3));
  cache.save(path);
  const auto back = ExactCache::load(path);
  EXPECT_EQ(back.size(), 2u);
  EXPECT_EQ(back.rejected(), 0u);
  ASSERT_TRUE(back.get(3, 2, "gamma").has_value());
  EXPECT_EQ(back.get(3, 2, "gamma")->value, 6u);
  EXPECT_FALSE(back.get(3, 1, "gamma").has_value());

  // claim a value one smaller than the stored set supports
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  in.close();
  for (auto& e : j.at("entries"))
    if (e.at("quantity") == "gamma") e["value"] = 5;
  std::ofstream(path) << j.dump();
  const auto tampered = ExactCache::load(path);
  EXPECT_EQ(tampered.rejected(), 1u);
  EXPECT_FALSE(tampered.get(3, 2, "gamma").has_value());

  std::ofstream(path) << "not json";
  EXPECT_THROW(ExactCache::load(path), FormatError);
  std::filesystem::remove(path);
}
