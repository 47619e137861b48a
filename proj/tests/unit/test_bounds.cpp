#include "flatcover/bounds.hpp"
#include "flatcover/error.hpp"
#include "flatcover/interval.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace flatcover;

namespace {

BigInt pow_int(long b, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

BigInt choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

double log_binomial_sum(int r, int d) {
  double s = 0;
  for (int j = 0; j <= d; ++j) s += std::exp(std::lgamma(r + 1.0) - std::lgamma(j + 1.0) - std::lgamma(r - j + 1.0));
  return std::log(s);
}

}  // namespace

TEST(BetaUpper, Examples) {
  EXPECT_EQ(beta_upper_sum(4, 2), 11);
  EXPECT_EQ(beta_upper_strong(4, 2), 9);
  EXPECT_EQ(beta_upper_sum(8, 2), 37);
  for (int r = 1; r <= 10; ++r) {
    EXPECT_EQ(beta_upper_sum(r, 0), 1);
    EXPECT_EQ(beta_upper_strong(r, 0), 0);
  }
}

TEST(BetaUpper, StrongNeverExceedsSum) {
  for (int r = 1; r <= 100; ++r)
    for (int d = 0; d <= r; ++d) {
      const BigInt s = beta_upper_strong(r, d);
      EXPECT_LE(s, beta_upper_sum(r, d)) << r << "," << d;
      if (d < r) {
        // largest b with b (1 - 2^{d-r}) <= S - 2^d, in integers
        const BigInt lhs = (s * (pow2(r) - pow2(d))), rhs = (beta_upper_sum(r, d) - pow2(d)) * pow2(r);
        EXPECT_LE(lhs, rhs);
        EXPECT_GT((s + 1) * (pow2(r) - pow2(d)), rhs);
      }
    }
}

TEST(GammaUpper, Examples) {
  const auto s = gamma_upper_simplex(14, 3);
  ASSERT_TRUE(s.applicable);
  EXPECT_NEAR(s.log2_value, std::log2(7.0) + 2.5 + 1.0 / 14 + 6, 1e-12);
  const auto g = gamma_upper_generic(14, 7, 4, 3);
  EXPECT_NEAR(g.log2_value, 12.0, 1e-12);
  EXPECT_FALSE(gamma_upper_simplex(14, 2).applicable);
  // rate of the simplex estimate at d = 3 is 3/7
  EXPECT_NEAR(gamma_upper_simplex(14000, 3).log2_value / 14000, 3.0 / 7, 1e-3);
}

TEST(GammaUpper, ExactComparisonsAgreeWithLogs) {
  for (int r = 3; r <= 40; ++r)
    for (int d = 3; d <= std::min(r, 14); ++d) {
      const double lg = gamma_upper_simplex(r, d).log2_value;
      if (lg > 900) continue;
      const BigInt below(std::floor(std::exp2(lg) * (1 - 1e-9)));
      const BigInt above(std::ceil(std::exp2(lg) * (1 + 1e-9)));
      EXPECT_TRUE(below_simplex_bound(below, r, d)) << r << "," << d;
      EXPECT_FALSE(below_simplex_bound(above, r, d)) << r << "," << d;
    }
  // 2^12 itself is not strictly below 2^12
  EXPECT_TRUE(below_generic_bound(4095, 14, 7, 4, 3));
  EXPECT_FALSE(below_generic_bound(4096, 14, 7, 4, 3));
}

TEST(GammaLower, ThreeConstant) {
  EXPECT_NEAR(gamma3_constant(), 3.3656, 1e-4);
  EXPECT_NEAR(gamma3_lower(16).value, 215.4, 0.05);
  EXPECT_NEAR(gamma3_lower(15).value, gamma3_constant() * std::exp2(45.0 / 8), 1e-9);
  EXPECT_TRUE(gamma3_lower(15).theorem_range);
  EXPECT_FALSE(gamma3_lower(14).theorem_range);
}

TEST(Entropy, Values) {
  EXPECT_NEAR(entropy(0.5), std::log(2.0), 1e-15);
  EXPECT_NEAR(entropy(0.25), 0.25 * std::log(4.0) + 0.75 * std::log(4.0 / 3), 1e-15);
  for (double x = 0.01; x < 1; x += 0.07) EXPECT_NEAR(entropy(x), entropy(1 - x), 1e-14);
  EXPECT_EQ(entropy(0), 0);
  EXPECT_EQ(entropy(1), 0);
  // e^{rH(d/r)} = r^r / (d^d (r-d)^{r-d})
  for (int r = 2; r <= 60; r += 3)
    for (int d = 1; d < r; ++d)
      EXPECT_NEAR(r * entropy(static_cast<double>(d) / r),
                  r * std::log(r) - d * std::log(d) - (r - d) * std::log(static_cast<double>(r - d)), 1e-9);
}

TEST(Sandwich, ExamplesAndFloatingCrossCheck) {
  EXPECT_TRUE(binomial_sandwich_check(10, 3));
  EXPECT_TRUE(binomial_sandwich_check(2, 1));
  EXPECT_TRUE(binomial_sandwich_check(50, 25));
  for (int r = 2; r <= 120; ++r)
    for (int d = 1; 2 * d <= r; ++d) {
      const double rh = r * entropy(static_cast<double>(d) / r);
      const double lc = std::lgamma(r + 1.0) - std::lgamma(d + 1.0) - std::lgamma(r - d + 1.0);
      const bool fp = rh - 0.5 * std::log(2.0 * r) <= lc + 1e-9 && log_binomial_sum(r, d) <= rh + 1e-9;
      EXPECT_TRUE(fp) << r << "," << d;
      EXPECT_TRUE(binomial_sandwich_check(r, d)) << r << "," << d;
    }
}

TEST(MainTerm, Examples) {
  EXPECT_TRUE(main_term_check(10, 5));
  // e^{10 ln 2} = 1024 against C(10,5) = 252
  EXPECT_EQ(choose(10, 5), 252);
  for (int r = 2; r <= 100; ++r)
    for (int d = 1; 2 * d <= r; ++d) EXPECT_TRUE(main_term_check(r, d)) << r << "," << d;
}

TEST(BetaLower, FormulaExamples) {
  const auto f82 = beta_lower_formulas(8, 2);
  ASSERT_TRUE(f82.balanced && f82.prime);
  EXPECT_EQ(*f82.balanced, 24);
  EXPECT_EQ(*f82.prime, 25);
  EXPECT_EQ(balanced_size_formula(6, 2), 13);
  EXPECT_EQ(balanced_size_formula(4, 2), 6);
  EXPECT_EQ(prime_size_formula(6, 2), 16);
  EXPECT_EQ(prime_size_formula(9, 2), 30);
  const auto f63 = beta_lower_formulas(6, 3);
  ASSERT_TRUE(f63.prime_half_log2);
  EXPECT_NEAR(*f63.prime_half_log2, std::log2(27.0), 1e-12);
  EXPECT_FALSE(beta_lower_formulas(5, 3).balanced);
  EXPECT_FALSE(beta_lower_formulas(5, 3).omitted.empty());
  EXPECT_THROW(balanced_size_formula(5, 3), ParameterError);
}

TEST(BetaLower, RkTripleExamples) {
  const auto a = beta_lower_formulas(16, 4);
  ASSERT_TRUE(a.rk_triple && a.rk);
  EXPECT_EQ(a.rk_triple->first, 4);
  EXPECT_EQ(*a.rk, 256);
  const auto b = beta_lower_formulas(18, 6);
  ASSERT_TRUE(b.rk);
  EXPECT_EQ(*b.rk, 3375);
  const auto c = beta_lower_formulas(100, 50);
  ASSERT_TRUE(c.rk);
  EXPECT_EQ(*c.rk, choose(50, 25) * choose(50, 25));
}

TEST(BetaLower, MultiblockOptimumByExhaustiveSearch) {
  // brute force over all part multisets for small (r, d)
  // parts come in non-increasing (d_i, r_i) order; D is the global d
  std::function<BigInt(int, int, int, int, int)> best = [&](int D, int r, int d, int dcap, int rcap) -> BigInt {
    BigInt out = 1;
    for (int di = 1; di <= std::min(d, dcap); ++di)
      for (int ri = di; ri <= std::min(r, D + di); ++ri) {
        if (di == dcap && ri > rcap) continue;
        out = std::max(out, BigInt(choose(ri, di) * best(D, r - ri, d - di, di, ri)));
      }
    return out;
  };
  for (int r = 1; r <= 14; ++r)
    for (int d = 1; d <= r; ++d) {
      const auto m = best_multiblock(r, d);
      EXPECT_EQ(m.value, best(d, r, d, d, r)) << r << "," << d;
      BigInt prod = 1;
      int sr = 0, sd = 0;
      for (auto [ri, di] : m.parts) {
        prod *= choose(ri, di);
        sr += ri;
        sd += di;
        EXPECT_LE(ri, d + di);
      }
      EXPECT_EQ(prod, m.value);
      EXPECT_LE(sr, r);
      EXPECT_LE(sd, d);
    }
}

TEST(Comparison, ExceptionalPairsAreReproducible) {
  const auto t = compare_balanced_prime(60);
  EXPECT_GT(t.pairs_checked, 0);
  bool has82 = false;
  for (const auto& e : t.prime_wins) {
    EXPECT_GT(e.prime, e.balanced);
    EXPECT_EQ(e.balanced, balanced_size_formula(e.r, e.d));
    EXPECT_EQ(e.prime, prime_size_formula(e.r, e.d));
    has82 = has82 || (e.r == 8 && e.d == 2);
  }
  EXPECT_TRUE(has82);
  for (const auto& e : t.ties) EXPECT_EQ(e.prime, e.balanced);
  int count = 0;
  for (int r = 4; r <= 60; ++r)
    for (int d = 2; 2 * d <= r; ++d) count += prime_size_formula(r, d) > balanced_size_formula(r, d);
  EXPECT_EQ(static_cast<std::size_t>(count), t.prime_wins.size());
}

TEST(Row, BestBracketsAreConsistent) {
  for (int r = 1; r <= 30; ++r)
    for (int d = 0; d <= r; ++d) {
      const auto row = bounds_row(r, d);
      EXPECT_LE(row.best_gamma_lower(), row.best_gamma_upper()) << r << "," << d;
      EXPECT_LE(row.best_beta_lower(), row.best_beta_upper()) << r << "," << d;
      const auto dual = bounds_row(r, r - d);
      EXPECT_EQ(row.best_beta_upper(), pow2(r) - dual.best_gamma_lower()) << r << "," << d;
      EXPECT_EQ(row.best_beta_lower(), pow2(r) - dual.best_gamma_upper()) << r << "," << d;
      for (const auto* list : {&row.gamma_lower, &row.gamma_upper, &row.beta_lower, &row.beta_upper})
        for (const Bound& b : *list) {
          EXPECT_TRUE(b.admits(b.implied)) << b.name << " " << r << "," << d;
          const BigInt next = b.side == Side::lower ? BigInt(b.implied - 1) : BigInt(b.implied + 1);
          if (next >= 0 && next <= pow2(r)) EXPECT_FALSE(b.admits(next)) << b.name << " " << r << "," << d;
        }
    }
}

TEST(Row, KnownValuesAreAdmitted) {
  for (int r = 2; r <= 20; ++r) {
    EXPECT_TRUE(bounds_row(r, 1).violations(Quantity::gamma, 2).empty()) << r;
    EXPECT_TRUE(bounds_row(r, 1).violations(Quantity::beta, 2).empty()) << r;
    EXPECT_TRUE(bounds_row(r, r).violations(Quantity::gamma, pow2(r)).empty()) << r;
    EXPECT_TRUE(bounds_row(r, r - 1).violations(Quantity::gamma, pow2(r) - 2).empty()) << r;
    EXPECT_FALSE(bounds_row(r, 1).violations(Quantity::gamma, 1).empty()) << r;
  }
  EXPECT_TRUE(bounds_row(4, 2).violations(Quantity::beta, 9).empty());
  EXPECT_FALSE(bounds_row(4, 2).violations(Quantity::beta, 10).empty());
  EXPECT_THROW(bounds_row(0, 0), ParameterError);
  EXPECT_THROW(bounds_row(5, 6), ParameterError);
}

TEST(Enclosure, OutwardRoundingBracketsTheTruth) {
  const Enclosure third = Enclosure::rational(1, 3);
  EXPECT_LE(third.lower(), 1.0 / 3);
  EXPECT_GE(third.upper(), 1.0 / 3);
  const Enclosure e = Enclosure(2).ln().exp();
  EXPECT_LE(e.lower(), 2.0);
  EXPECT_GE(e.upper(), 2.0);
  EXPECT_TRUE(Enclosure(1023).log2().certainly_less(Enclosure(10)));
  EXPECT_FALSE(Enclosure(1024).log2().certainly_less(Enclosure(10)));
  EXPECT_TRUE(Enclosure(pow_int(3, 40)).log2().certainly_less(Enclosure(64)));
}
