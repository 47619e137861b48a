#include "flatcover/bounds.hpp"

#include "flatcover/error.hpp"
#include "flatcover/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace flatcover {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log2_big(const BigInt& v) {
  if (v <= 0) return kNegInf;
  const unsigned bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 60) return std::log2(static_cast<double>(v.convert_to<unsigned long long>()));
  BigInt top = v >> (bits - 60);
  return std::log2(static_cast<double>(top.convert_to<unsigned long long>())) + (bits - 60);
}

// Smallest n in [0, hi] admitted by an upward-closed predicate; hi + 1 if none.
BigInt min_admitted(const std::function<bool(const BigInt&)>& admits, const BigInt& hi) {
  if (!admits(hi)) return hi + 1;
  BigInt lo = 0, top = hi;
  while (lo < top) {
    BigInt mid = (lo + top) / 2;
    if (admits(mid))
      top = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

// Largest n in [0, hi] admitted by a downward-closed predicate; -1 if none.
BigInt max_admitted(const std::function<bool(const BigInt&)>& admits, const BigInt& hi) {
  if (!admits(0)) return -1;
  BigInt lo = 0, top = hi;
  while (lo < top) {
    BigInt mid = (lo + top + 1) / 2;
    if (admits(mid))
      lo = mid;
    else
      top = mid - 1;
  }
  return lo;
}

Bound make_integral(std::string name, Quantity q, Side side, bool strict, std::string statement, BigInt value) {
  Bound b;
  b.name = std::move(name);
  b.quantity = q;
  b.side = side;
  b.strict = strict;
  b.statement = std::move(statement);
  b.log2_value = log2_big(value);
  b.exact = value;
  if (side == Side::lower)
    b.admits = strict ? std::function<bool(const BigInt&)>([value](const BigInt& n) { return n > value; })
                      : std::function<bool(const BigInt&)>([value](const BigInt& n) { return n >= value; });
  else
    b.admits = strict ? std::function<bool(const BigInt&)>([value](const BigInt& n) { return n < value; })
                      : std::function<bool(const BigInt&)>([value](const BigInt& n) { return n <= value; });
  return b;
}

Bound make_predicate(std::string name, Quantity q, Side side, bool strict, std::string statement, double log2_value,
                     std::function<bool(const BigInt&)> admits) {
  Bound b;
  b.name = std::move(name);
  b.quantity = q;
  b.side = side;
  b.strict = strict;
  b.statement = std::move(statement);
  b.log2_value = log2_value;
  b.admits = std::move(admits);
  return b;
}

void finish(Bound& b, int r) {
  const BigInt universe = pow2(r);
  b.implied = b.side == Side::lower ? min_admitted(b.admits, universe) : max_admitted(b.admits, universe);
}

Bound dual_of(const Bound& other, int r) {
  // gamma_r(d) = 2^r - beta_r(r - d) swaps quantity and side.
  const BigInt universe = pow2(r);
  Bound b;
  b.name = "dual:" + other.name;
  b.quantity = other.quantity == Quantity::gamma ? Quantity::beta : Quantity::gamma;
  b.side = other.side == Side::lower ? Side::upper : Side::lower;
  b.strict = other.strict;
  b.statement = "2^r minus [" + other.statement + "] at r - d";
  if (other.exact) {
    b.exact = universe - *other.exact;
    b.log2_value = log2_big(*b.exact);
  } else {
    b.log2_value = std::log2(std::ldexp(1.0, r) - std::exp2(other.log2_value));
  }
  auto inner = other.admits;
  b.admits = [inner, universe](const BigInt& n) { return inner(universe - n); };
  return b;
}

// Bounds that do not go through the complement relation.
struct DirectBounds {
  std::vector<Bound> gamma_lower, gamma_upper, beta_lower, beta_upper;
};

DirectBounds direct_bounds(int r, int d, const BoundsOptions& opts) {
  DirectBounds out;
  const BigInt universe = pow2(r);
  using Q = Quantity;
  using S = Side;

  // gamma lower
  out.gamma_lower.push_back(make_integral("binomial_sum", Q::gamma, S::lower, false, "sum_{j<d} C(r,j)",
                                          binomial_sum(r, d - 1)));
  if (d >= 1)
    out.gamma_lower.push_back(make_integral("lines", Q::gamma, S::lower, false, "gamma_r(1) = 2", 2));
  if (d >= 2) {
    const BigInt target = universe;
    out.gamma_lower.push_back(make_predicate(
        "sum3_counting", Q::gamma, S::lower, false, "C(|C|,3) >= 2^r (sums of three distinct elements)",
        std::log2(std::cbrt(6.0)) + r / 3.0, [target](const BigInt& n) {
          if (n < 3) return false;
          return n * (n - 1) * (n - 2) / 6 >= target;
        }));
  }
  if (d >= 3) {
    // 7(2^r - n) < 6^{-1/3} n^{2/3} C(n,2), cubed: 343*48 (2^r-n)^3 < n^2 (n(n-1))^3.
    out.gamma_lower.push_back(make_predicate(
        "gamma3_counting", Q::gamma, S::lower, true, "7(2^r - |C|) < 6^{-1/3} |C|^{2/3} C(|C|,2)",
        std::numeric_limits<double>::quiet_NaN(), [universe](const BigInt& n) {
          if (n >= universe) return true;
          BigInt gap = universe - n;
          BigInt pair = n * (n - 1);
          return BigInt(343 * 48) * gap * gap * gap < n * n * pair * pair * pair;
        }));
    const BigInt rhs = BigInt(16464) * pow2(3 * r);
    const double lg = std::log2(gamma3_constant()) + 3.0 * r / 8.0;
    if (r >= 15) {
      out.gamma_lower.push_back(make_predicate("gamma3_lower", Q::gamma, S::lower, true, "c 2^{3r/8}, c = 16464^{1/8}",
                                               lg, [rhs](const BigInt& n) { return ipow(n, 8) > rhs; }));
    } else {
      out.gamma_lower.push_back(make_predicate(
          "gamma3_branch", Q::gamma, S::lower, false, "|C| >= 2^{r/2} or |C|^{8/3} > 14 6^{1/3} 2^r",
          std::min(lg, r / 2.0), [rhs, universe](const BigInt& n) { return n * n >= universe || ipow(n, 8) > rhs; }));
    }
  }

  // gamma upper
  out.gamma_upper.push_back(make_integral("trivial", Q::gamma, S::upper, false, "|F_2^r|", universe));
  if (d >= 1 && d <= r - 1)
    out.gamma_upper.push_back(
        make_integral("hyperplanes", Q::gamma, S::upper, false, "gamma_r(r-1) = 2^r - 2", universe - 2));
  if (d == 1) out.gamma_upper.push_back(make_integral("lines", Q::gamma, S::upper, false, "gamma_r(1) = 2", 2));
  if (d >= 3 && r >= d) {
    RealBound sb = gamma_upper_simplex(r, d);
    if (sb.applicable)
      out.gamma_upper.push_back(make_predicate("simplex", Q::gamma, S::upper, true, "K_d 2^{(1/2 - eps_d) r}",
                                               sb.log2_value,
                                               [r, d](const BigInt& n) { return below_simplex_bound(n, r, d); }));
    const int n = (1 << std::min(d, 20)) - 1, mu = 1 << (std::min(d, 20) - 1);
    RealBound gb = gamma_upper_generic(r, n, mu, d);
    if (d <= 12 && gb.applicable)
      out.gamma_upper.push_back(make_predicate(
          "generic_simplex", Q::gamma, S::upper, true, "2^{(1-mu/n) r + n + d - mu} with the simplex code",
          gb.log2_value, [r, n, mu, d](const BigInt& s) { return below_generic_bound(s, r, n, mu, d); }));
    const double k = static_cast<double>(opts.bch_constant_num) / opts.bch_constant_den;
    RealBound bb = gamma_upper_bch(r, d, k);
    if (bb.applicable) {
      const long kn = opts.bch_constant_num, kd = opts.bch_constant_den;
      out.gamma_upper.push_back(make_predicate(
          "bch", Q::gamma, S::upper, true, "2^{0.5 r + K (d r / log2 r)^{2/3}}, K = " + std::to_string(k),
          bb.log2_value, [r, d, kn, kd](const BigInt& n) {
            if (n <= 0) return true;
            Enclosure ratio = Enclosure(static_cast<long>(d) * r) / Enclosure(static_cast<long>(r)).log2();
            Enclosure expo = Enclosure::rational(r, 2) + Enclosure::rational(kn, kd) * ratio.sqr().cbrt();
            return Enclosure(n).log2().certainly_less(expo);
          }));
    }
  }

  // beta upper
  out.beta_upper.push_back(
      make_integral("binomial_sum", Q::beta, S::upper, false, "sum_{j<=d} C(r,j)", beta_upper_sum(r, d)));
  if (d < r)
    out.beta_upper.push_back(make_integral("binomial_sum_strong", Q::beta, S::upper, false,
                                           "(1 - 2^{d-r}) beta <= sum_{j<=d} C(r,j) - 2^d", beta_upper_strong(r, d)));
  if (2 * d < r)
    out.beta_upper.push_back(make_integral("strong_half", Q::beta, S::upper, false,
                                           "sum_{j<=d} C(r,j) - 2^{d-1} for d < r/2",
                                           beta_upper_sum(r, d) - (d >= 1 ? pow2(d - 1) : BigInt(0))));
  if (1000L * d < 227L * r)
    out.beta_upper.push_back(make_integral("strong_0227", Q::beta, S::upper, false,
                                           "sum_{j<=d} C(r,j) - 2^d for d < 0.227 r", beta_upper_sum(r, d) - pow2(d)));
  if (d == 1) out.beta_upper.push_back(make_integral("lines", Q::beta, S::upper, false, "beta_r(1) = 2", 2));
  if (d == 0) out.beta_upper.push_back(make_integral("empty", Q::beta, S::upper, false, "beta_r(0) = 0", 0));
  if (r >= 1 && d == r - 1)
    out.beta_upper.push_back(
        make_integral("hyperplanes", Q::beta, S::upper, false, "beta_r(r-1) = 2^r - 2", universe - 2));

  // beta lower
  if (d >= 1) out.beta_lower.push_back(make_integral("lines", Q::beta, S::lower, false, "beta_r(1) = 2", 2));
  if (d == r) out.beta_lower.push_back(make_integral("full", Q::beta, S::lower, false, "beta_r(r) = 2^r", universe));
  BetaLowerFormulas f = beta_lower_formulas(r, d);
  if (f.balanced)
    out.beta_lower.push_back(make_integral("balanced", Q::beta, S::lower, false,
                                           "sum C(2d-rho,i) C(rho,j) floor(r/2d)^i (floor(r/2d)+1)^j", *f.balanced));
  if (f.balanced_corollary)
    out.beta_lower.push_back(make_integral("balanced_corollary", Q::beta, S::lower, false, "C(2d,d) floor(r/2d)^d",
                                           *f.balanced_corollary));
  if (f.prime)
    out.beta_lower.push_back(make_integral("prime", Q::beta, S::lower, false,
                                           "(floor(r/d)+1)^{d-rho} (floor(r/d)+2)^rho", *f.prime));
  if (f.prime_corollary_log2) {
    const BigInt rd = ipow(BigInt(r), d), dd = ipow(BigInt(d), d);
    out.beta_lower.push_back(make_predicate("prime_corollary", Q::beta, S::lower, true, "(r/d)^d",
                                            *f.prime_corollary_log2,
                                            [rd, dd](const BigInt& n) { return n * dd > rd; }));
  }
  if (f.prime_half_log2) {
    // beta >= 3^{r-d} 2^{2d-r}
    const BigInt num = ipow(BigInt(3), r - d) * pow2(2 * d), den = pow2(r);
    out.beta_lower.push_back(make_predicate("prime_half", Q::beta, S::lower, false, "(3/2)^r (4/3)^d for d >= r/2",
                                            *f.prime_half_log2,
                                            [num, den](const BigInt& n) { return n * den >= num; }));
  }
  if (f.multiblock_best && d >= 1)
    out.beta_lower.push_back(make_integral("multiblock_best", Q::beta, S::lower, false,
                                           "max prod C(r_i,d_i), r_i <= d + d_i", f.multiblock_best->value));
  if (f.rk)
    out.beta_lower.push_back(make_integral("rk", Q::beta, S::lower, false, "C(r1,d1)^k", *f.rk));
  if (f.rk_corollary_log2) {
    out.beta_lower.push_back(make_predicate(
        "rk_corollary", Q::beta, S::lower, true, "e^{r H(d/r) - 2 (r/d) ln r}", *f.rk_corollary_log2,
        [r, d](const BigInt& n) {
          if (n <= 0) return false;
          // ln bound = r ln r - d ln d - (r-d) ln(r-d) - (2r/d) ln r
          Enclosure lr = Enclosure(static_cast<long>(r)).ln();
          Enclosure x = Enclosure(static_cast<long>(r)) * lr - Enclosure(static_cast<long>(d)) *
                                                                   Enclosure(static_cast<long>(d)).ln();
          if (r - d > 1)
            x = x - Enclosure(static_cast<long>(r - d)) * Enclosure(static_cast<long>(r - d)).ln();
          x = x - Enclosure::rational(2L * r, d) * lr;
          return x.certainly_less(Enclosure(n).ln());
        }));
  }
  if (2 * d > r && r / 2 >= 2) {
    const int h = r / 2;
    out.beta_lower.push_back(make_integral("balanced_monotone", Q::beta, S::lower, false,
                                           "beta_r(floor(r/2)) >= C(2 floor(r/2), floor(r/2))", binomial(2 * h, h)));
  }
  for (auto* list : {&out.gamma_lower, &out.gamma_upper, &out.beta_lower, &out.beta_upper})
    for (Bound& b : *list) finish(b, r);
  return out;
}

}  // namespace

const char* to_string(Quantity q) { return q == Quantity::gamma ? "gamma" : "beta"; }
const char* to_string(Side s) { return s == Side::lower ? "lower" : "upper"; }

BigInt BoundsRow::best_gamma_lower() const {
  BigInt best = 0;
  for (const auto& b : gamma_lower) best = std::max(best, b.implied);
  return best;
}
BigInt BoundsRow::best_gamma_upper() const {
  BigInt best = pow2(r);
  for (const auto& b : gamma_upper) best = std::min(best, b.implied);
  return best;
}
BigInt BoundsRow::best_beta_lower() const {
  BigInt best = 0;
  for (const auto& b : beta_lower) best = std::max(best, b.implied);
  return best;
}
BigInt BoundsRow::best_beta_upper() const {
  BigInt best = pow2(r);
  for (const auto& b : beta_upper) best = std::min(best, b.implied);
  return best;
}

std::vector<std::string> BoundsRow::violations(Quantity q, const BigInt& value) const {
  std::vector<std::string> out;
  const auto& lo = q == Quantity::gamma ? gamma_lower : beta_lower;
  const auto& hi = q == Quantity::gamma ? gamma_upper : beta_upper;
  for (const auto* list : {&lo, &hi})
    for (const Bound& b : *list)
      if (!b.admits(value)) out.push_back(b.name);
  return out;
}

BoundsRow bounds_row(int r, int d, const BoundsOptions& opts) {
  if (r < 1 || r > 200) throw ParameterError("bounds are evaluated for 1 <= r <= 200");
  if (d < 0 || d > r) throw ParameterError("bounds need 0 <= d <= r");
  DirectBounds here = direct_bounds(r, d, opts);
  DirectBounds mirror = direct_bounds(r, r - d, opts);
  BoundsRow row;
  row.r = r;
  row.d = d;
  row.gamma_lower = here.gamma_lower;
  row.gamma_upper = here.gamma_upper;
  row.beta_lower = here.beta_lower;
  row.beta_upper = here.beta_upper;
  for (const Bound& b : mirror.beta_upper) row.gamma_lower.push_back(dual_of(b, r));
  for (const Bound& b : mirror.beta_lower) row.gamma_upper.push_back(dual_of(b, r));
  for (const Bound& b : mirror.gamma_upper) row.beta_lower.push_back(dual_of(b, r));
  for (const Bound& b : mirror.gamma_lower) row.beta_upper.push_back(dual_of(b, r));
  for (auto* list : {&row.gamma_lower, &row.gamma_upper, &row.beta_lower, &row.beta_upper})
    for (Bound& b : *list)
      if (b.name.rfind("dual:", 0) == 0) finish(b, r);
  return row;
}

double entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw ParameterError("entropy is defined on [0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log(x) - (1.0 - x) * std::log1p(-x);
}

bool binomial_sandwich_check(int r, int d) {
  if (d < 1 || 2 * d > r) throw ParameterError("sandwich needs 1 <= d <= r/2");
  // E := e^{rH(d/r)} = num / den.
  const BigInt num = ipow(BigInt(r), r);
  const BigInt den = ipow(BigInt(d), d) * ipow(BigInt(r - d), r - d);
  const BigInt c = binomial(r, d);
  const BigInt s = binomial_sum(r, d);
  // E / sqrt(2r) <= C  <=>  num^2 <= 2r C^2 den^2
  const bool left = num * num <= BigInt(2 * r) * c * c * den * den;
  const bool middle = c < s;
  const bool right = s * den <= num;
  return left && middle && right;
}

bool main_term_check(int r, int d) {
  if (d < 1 || 2 * d > r) throw ParameterError("main-term comparison needs 1 <= d <= r/2");
  // r^r / (d^d (r-d)^{r-d}) > C(2d,d) r^d / (2d)^d
  const BigInt lhs = ipow(BigInt(r), r) * ipow(BigInt(2 * d), d);
  const BigInt rhs = binomial(2 * d, d) * ipow(BigInt(r), d) * ipow(BigInt(d), d) * ipow(BigInt(r - d), r - d);
  return lhs > rhs;
}

double gamma3_constant() { return std::pow(16464.0, 1.0 / 8.0); }

Gamma3Lower gamma3_lower(int r) {
  if (r < 3) throw ParameterError("gamma3_lower needs r >= 3");
  Gamma3Lower g;
  g.value = gamma3_constant() * std::exp2(3.0 * r / 8.0);
  g.theorem_range = r >= 15;
  return g;
}

BigInt beta_upper_sum(int r, int d) {
  if (d < 0 || d > r) throw ParameterError("beta_upper_sum needs 0 <= d <= r");
  return binomial_sum(r, d);
}

BigInt beta_upper_strong(int r, int d) {
  if (d < 0 || d > r) throw ParameterError("beta_upper_strong needs 0 <= d <= r");
  if (d == r) return pow2(r);  // the inequality degenerates to 0 <= 0
  // b (2^r - 2^d) <= (S - 2^d) 2^r
  const BigInt num = (binomial_sum(r, d) - pow2(d)) * pow2(r);
  const BigInt den = pow2(r) - pow2(d);
  return num / den;
}

RealBound gamma_upper_simplex(int r, int d) {
  RealBound b;
  if (d < 3 || r < d) {
    b.reason = "needs r >= d >= 3";
    return b;
  }
  if (d > 30) {
    b.reason = "K_d overflows for d > 30";
    return b;
  }
  const double n = std::ldexp(1.0, d) - 1;
  const double eps = 1.0 / (2.0 * n);
  b.log2_value = std::log2(n) + std::ldexp(1.0, d - 1) - 1.5 + eps + (0.5 - eps) * r;
  b.applicable = true;
  return b;
}

RealBound gamma_upper_generic(int r, int n, int mu, int d) {
  RealBound b;
  if (n < 1 || mu < 1 || mu > n || d < 1) {
    b.reason = "needs n >= mu >= 1, d >= 1";
    return b;
  }
  b.log2_value = (1.0 - static_cast<double>(mu) / n) * r + n + d - mu;
  b.applicable = true;
  return b;
}

RealBound gamma_upper_bch(int r, int d, double k_constant) {
  RealBound b;
  if (d < 3 || r < d) {
    b.reason = "needs r >= d >= 3";
    return b;
  }
  b.log2_value = 0.5 * r + k_constant * std::cbrt(std::pow(static_cast<double>(d) * r / std::log2(r), 2.0));
  b.applicable = true;
  return b;
}

bool below_simplex_bound(const BigInt& size, int r, int d) {
  if (d < 3 || d > 30) throw ParameterError("simplex comparison needs 3 <= d <= 30");
  if (size <= 0) return true;
  if (d > 12) {
    // log2 K_d + (1/2 - eps) r, with eps = 1/(2(2^d - 1))
    const long n = (1L << d) - 1;
    Enclosure rhs = Enclosure(n).log2() + Enclosure((1L << (d - 1)) - 2) + Enclosure::rational(1, 2) +
                    Enclosure::rational(1, 2 * n) + Enclosure::rational(static_cast<long>(r) * (n - 1), 2 * n);
    return Enclosure(size).log2().certainly_less(rhs);
  }
  // size < (2^d-1) 2^E, E q integral for q = 2(2^d - 1).
  const long n = (1L << d) - 1;
  const long q = 2 * n;
  const long eq = (n - 2 + r) * n + 1 - r;  // (2^d - 3 + r)(2^d - 1) + 1 - r
  return ipow(size, static_cast<unsigned>(q)) < ipow(BigInt(n), static_cast<unsigned>(q)) * pow2(static_cast<int>(eq));
}

bool below_generic_bound(const BigInt& size, int r, int n, int mu, int d) {
  // size^n < 2^{(n - mu) r + n (n + d - mu)}
  const long e = static_cast<long>(n - mu) * r + static_cast<long>(n) * (n + d - mu);
  if (e < 0) return size == 0;
  return ipow(size, static_cast<unsigned>(n)) < pow2(static_cast<int>(e));
}

BigInt balanced_size_formula(int r, int d) {
  if (d < 2 || 2 * d > r) throw ParameterError("double-sum formula needs 2 <= d <= r/2");
  const int q = r / (2 * d), rho = r % (2 * d);
  BigInt s = 0;
  for (int j = 0; j <= rho && j <= d; ++j) {
    const int i = d - j;
    if (i > 2 * d - rho) continue;
    s += binomial(2 * d - rho, i) * binomial(rho, j) * ipow(BigInt(q), i) * ipow(BigInt(q + 1), j);
  }
  return s;
}

BigInt prime_size_formula(int r, int d) {
  if (d < 2 || d > r) throw ParameterError("product formula needs r >= d >= 2");
  const int q = r / d, rho = r % d;
  return ipow(BigInt(q + 1), d - rho) * ipow(BigInt(q + 2), rho);
}

MultiblockChoice best_multiblock(int r, int d) {
  if (d < 1 || d > r) throw ParameterError("multiblock search needs r >= d >= 1");
  // Unbounded knapsack over parts (r_i, d_i), maximizing sum log C(r_i, d_i).
  const int R = r, D = d;
  std::vector<double> best((R + 1) * (D + 1), 0.0);
  std::vector<std::pair<int, int>> choice((R + 1) * (D + 1), {0, 0});
  std::vector<std::vector<double>> lgc(R + 1, std::vector<double>(D + 1, 0.0));
  for (int a = 0; a <= R; ++a)
    for (int b = 0; b <= std::min(a, D); ++b) lgc[a][b] = std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0);
  for (int a = 0; a <= R; ++a)
    for (int b = 0; b <= D; ++b) {
      double& cell = best[a * (D + 1) + b];
      for (int di = 1; di <= b; ++di)
        for (int ri = di; ri <= std::min(a, D + di); ++ri) {
          const double v = best[(a - ri) * (D + 1) + (b - di)] + lgc[ri][di];
          if (v > cell + 1e-12) {
            cell = v;
            choice[a * (D + 1) + b] = {ri, di};
          }
        }
    }
  MultiblockChoice out;
  out.value = 1;
  int a = R, b = D;
  while (choice[a * (D + 1) + b].first != 0) {
    auto [ri, di] = choice[a * (D + 1) + b];
    out.parts.emplace_back(ri, di);
    out.value *= binomial(ri, di);
    a -= ri;
    b -= di;
  }
  std::sort(out.parts.begin(), out.parts.end(), std::greater<>());
  return out;
}

BetaLowerFormulas beta_lower_formulas(int r, int d) {
  if (r < 1 || d < 0 || d > r) throw ParameterError("beta_lower_formulas needs 0 <= d <= r, r >= 1");
  BetaLowerFormulas f;
  f.r = r;
  f.d = d;
  if (d >= 2 && 2 * d <= r) {
    f.balanced = balanced_size_formula(r, d);
    f.balanced_corollary = binomial(2 * d, d) * ipow(BigInt(r / (2 * d)), d);
    f.main_term_holds = main_term_check(r, d);
  } else {
    f.omitted.push_back("balanced: needs 2 <= d <= r/2");
  }
  if (d >= 2) {
    f.prime = prime_size_formula(r, d);
    f.prime_corollary_log2 = d * (std::log2(r) - std::log2(d));
    if (2 * d >= r) f.prime_half_log2 = r * std::log2(1.5) + d * std::log2(4.0 / 3.0);
  } else {
    f.omitted.push_back("prime: needs d >= 2");
  }
  if (d >= 1) {
    f.multiblock_best = best_multiblock(r, d);
  } else {
    f.omitted.push_back("multiblock: needs d >= 1");
  }
  if (static_cast<long>(d) * d >= r && 2 * d <= r) {
    const int k = r / d, d1 = d / k, r1 = static_cast<int>(static_cast<long>(d1) * r / d);
    f.rk_triple = {k, {d1, r1}};
    f.rk = ipow(binomial(r1, d1), k);
    const double hx = entropy(static_cast<double>(d) / r);
    f.rk_corollary_log2 = (r * hx - 2.0 * r / d * std::log(r)) / std::log(2.0);
  } else {
    f.omitted.push_back("rk: needs sqrt(r) <= d <= r/2");
  }
  return f;
}

ComparisonTable compare_balanced_prime(int r_limit) {
  ComparisonTable t;
  for (int r = 4; r <= r_limit; ++r)
    for (int d = 2; 2 * d <= r; ++d) {
      ++t.pairs_checked;
      ComparisonEntry e{r, d, balanced_size_formula(r, d), prime_size_formula(r, d)};
      if (e.prime > e.balanced)
        t.prime_wins.push_back(e);
      else if (e.prime == e.balanced)
        t.ties.push_back(e);
    }
  return t;
}

}  // namespace flatcover
