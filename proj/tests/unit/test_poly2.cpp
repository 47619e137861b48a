#include "flatcover/error.hpp"
#include "flatcover/poly2.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace flatcover;

namespace {

// Evaluation straight from the definition: sum over monomials of the product of the chosen coordinates.
bool eval_by_definition(const MultilinearPoly& p, Point v) {
  bool acc = false;
  for (Point m : p.monomials()) {
    bool term = true;
    for (int i = 0; i < p.vars(); ++i)
      if ((m >> i) & 1) term = term && ((v >> i) & 1);
    acc ^= term;
  }
  return acc;
}

MultilinearPoly random_poly(std::mt19937_64& rng, int r, int terms, int max_degree) {
  std::vector<Point> mons;
  for (int k = 0; k < terms; ++k) {
    const Point m = rng() & low_mask(r);
    if (std::popcount(m) <= max_degree) mons.push_back(m);
  }
  std::sort(mons.begin(), mons.end());
  mons.erase(std::unique(mons.begin(), mons.end()), mons.end());
  return MultilinearPoly(r, mons);
}

}  // namespace

TEST(Multilinear, DimensionExamples) {
  EXPECT_EQ(dim_multilinear(3, 1), 4);
  EXPECT_EQ(dim_multilinear(8, 2), 37);
  for (int r = 0; r <= 12; ++r) EXPECT_EQ(dim_multilinear(r, r), pow2(r));
}

TEST(Multilinear, EvalExamples) {
  const auto one = MultilinearPoly::constant(3, true);
  for (Point v = 0; v < 8; ++v) EXPECT_TRUE(one.eval(v));
  const auto x0x1 = MultilinearPoly::variable(2, 0) * MultilinearPoly::variable(2, 1);
  EXPECT_TRUE(x0x1.eval(0b11));
  EXPECT_FALSE(x0x1.eval(0b10));
  EXPECT_EQ(x0x1.degree(), 2);
  EXPECT_EQ(x0x1.to_string(), "x0x1");
}

TEST(Multilinear, ArithmeticMatchesPointwise) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    const int r = 1 + rng() % 7;
    const auto p = random_poly(rng, r, 6, r), q = random_poly(rng, r, 6, r);
    const auto s = p + q, m = p * q;
    for (Point v = 0; v < (Point{1} << r); ++v) {
      EXPECT_EQ(p.eval(v), eval_by_definition(p, v));
      EXPECT_EQ(s.eval(v), p.eval(v) != q.eval(v));
      EXPECT_EQ(m.eval(v), p.eval(v) && q.eval(v));
    }
    EXPECT_TRUE((p + p).is_zero());
    EXPECT_EQ(p * p, p);
  }
}

TEST(Interpolate, Examples) {
  EXPECT_TRUE(interpolate(3, std::vector<std::uint8_t>(8, 0)).is_zero());
  EXPECT_EQ(interpolate(3, std::vector<std::uint8_t>(8, 1)), MultilinearPoly::constant(3, true));
  const std::vector<std::uint8_t> at_zero{1, 0, 0, 0};
  const auto p = interpolate(2, at_zero);
  EXPECT_EQ(p.to_string(), "1 + x0 + x1 + x0x1");
  EXPECT_EQ(p.truth_table(), at_zero);
  EXPECT_THROW(interpolate(2, std::vector<std::uint8_t>(3, 0)), ParameterError);
}

TEST(Interpolate, PolynomialRoundTrip) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 300; ++t) {
    const int r = 1 + rng() % 10;
    const auto p = random_poly(rng, r, 10, r);
    const auto table = p.truth_table();
    EXPECT_EQ(interpolate(r, table), p);
  }
}

TEST(Indicator, Examples) {
  const FlatF2 whole(0, SubspaceF2::full(2));
  EXPECT_EQ(indicator_of_coflat(whole), MultilinearPoly::constant(2, true));
  EXPECT_EQ(indicator_of_coflat(whole).degree(), 0);
  const Equation x0[] = {{0b01, true}};
  EXPECT_EQ(indicator_of_coflat(FlatF2::from_equations(2, x0)), MultilinearPoly::variable(2, 0));
  const Equation both[] = {{0b01, true}, {0b10, true}};
  const auto p = indicator_of_coflat(FlatF2::from_equations(2, both));
  EXPECT_EQ(p.to_string(), "x0x1");
}

TEST(Indicator, SupportIsTheFlatForEveryCoflat) {
  for (int r = 1; r <= 5; ++r)
    for (int d = 0; d <= r; ++d)
      for (const auto& space : oracle::subspaces(r, r - d)) {
        std::vector<Point> gens(space.begin(), space.end());
        for (Point a = 0; a < (Point{1} << r); a += 3) {
          const FlatF2 f = FlatF2::through(r, a, gens);
          const auto p = indicator_of_coflat(f);
          EXPECT_LE(p.degree(), d);
          for (Point v = 0; v < (Point{1} << r); ++v) {
            const bool on = std::binary_search(space.begin(), space.end(), v ^ a);
            ASSERT_EQ(p.eval(v), on);
          }
        }
      }
}

TEST(Rank, Examples) {
  const std::vector<MultilinearPoly> one{MultilinearPoly::constant(3, true)};
  const std::vector<Point> pt{5};
  EXPECT_EQ(evaluation_rank(one, pt), 1);
  EXPECT_EQ(evaluation_rank(std::vector<MultilinearPoly>{}, pt), 0);
}

TEST(Rank, MonomialsSpanAllFunctions) {
  for (int r = 1; r <= 6; ++r) {
    std::vector<MultilinearPoly> mons;
    std::vector<Point> pts;
    for (Point m = 0; m < (Point{1} << r); ++m) {
      mons.emplace_back(r, std::vector<Point>{m});
      pts.push_back(m);
    }
    EXPECT_EQ(evaluation_rank(mons, pts), 1 << r);
    // degree <= d monomials evaluated everywhere have rank dim_multilinear(r, d)
    for (int d = 0; d <= r; ++d) {
      std::vector<MultilinearPoly> low;
      for (const auto& m : mons)
        if (m.degree() <= d) low.push_back(m);
      EXPECT_EQ(BigInt(evaluation_rank(low, pts)), dim_multilinear(r, d));
    }
  }
}

TEST(Fact1, Examples) {
  EXPECT_FALSE(fact1_check(MultilinearPoly::variable(2, 0)));
  EXPECT_FALSE(fact1_check(MultilinearPoly::constant(1, true)));
  EXPECT_THROW(fact1_check(MultilinearPoly::variable(1, 0)), ParameterError);
}

TEST(Fact1, LowDegreeSumsVanish) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 500; ++t) {
    const int d = 1 + rng() % 10;
    const auto p = random_poly(rng, d, 8, d - 1);
    bool sum = false;
    for (Point v = 0; v < (Point{1} << d); ++v) sum ^= eval_by_definition(p, v);
    EXPECT_FALSE(sum);
    EXPECT_FALSE(fact1_check(p));
  }
}

TEST(Fact2, NonzeroPolynomialsDoNotVanish) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 500; ++t) {
    const int r = 1 + rng() % 12;
    const auto p = random_poly(rng, r, 1 + rng() % 5, r);
    if (p.is_zero()) continue;
    const auto table = p.truth_table();
    EXPECT_TRUE(std::any_of(table.begin(), table.end(), [](std::uint8_t b) { return b != 0; }));
  }
}
