#pragma once

// Closed-form bounds on gamma_r(d) (smallest d-complete set) and beta_r(d)
// (largest d-non-blocking set), evaluated exactly where the formula is
// integral and with outward-rounded enclosures otherwise.

#include "flatcover/bigint.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flatcover {

enum class Quantity { gamma, beta };
enum class Side { lower, upper };

const char* to_string(Quantity q);
const char* to_string(Side s);

struct Bound {
  std::string name;
  Quantity quantity = Quantity::gamma;
  Side side = Side::lower;
  bool strict = false;
  std::string statement;
  double log2_value = 0;       // log2 of the bound's real value; -inf for 0
  std::optional<BigInt> exact; // set when the formula is an integer
  BigInt implied;              // tightest integer the bound allows
  // Rigorous test that a candidate value is consistent with the bound.
  std::function<bool(const BigInt&)> admits;
};

struct BoundsOptions {
  // The absolute constant of the dual-BCH estimate, as num/den.
  long bch_constant_num = 16;
  long bch_constant_den = 1;
};

struct BoundsRow {
  int r = 0, d = 0;
  std::vector<Bound> gamma_lower, gamma_upper, beta_lower, beta_upper;

  BigInt best_gamma_lower() const;
  BigInt best_gamma_upper() const;
  BigInt best_beta_lower() const;
  BigInt best_beta_upper() const;
  // Names of bounds that reject the value (empty iff the value is sandwiched).
  std::vector<std::string> violations(Quantity q, const BigInt& value) const;
};

BoundsRow bounds_row(int r, int d, const BoundsOptions& opts = {});

// H(x) = -x ln x - (1-x) ln(1-x); 0 at the endpoints.
double entropy(double x);

// (1/sqrt(2r)) e^{rH(d/r)} <= C(r,d) < sum_{j<=d} C(r,j) <= e^{rH(d/r)},
// decided in exact integer arithmetic via e^{rH(d/r)} = r^r / (d^d (r-d)^{r-d}).
bool binomial_sandwich_check(int r, int d);
// e^{rH(d/r)} > C(2d,d) (r/2d)^d, exactly.
bool main_term_check(int r, int d);

// (16464)^{1/8}.
double gamma3_constant();
struct Gamma3Lower {
  double value = 0;       // c * 2^{3r/8}
  bool theorem_range = false;  // r >= 15
};
Gamma3Lower gamma3_lower(int r);

BigInt beta_upper_sum(int r, int d);
// Largest integer b with (1 - 2^{d-r}) b <= sum_{j<=d} C(r,j) - 2^d.
BigInt beta_upper_strong(int r, int d);

struct RealBound {
  double log2_value = 0;
  bool applicable = false;
  std::string reason;  // why not applicable
};
// K_d 2^{(1/2 - eps_d) r}, eps_d = 1/(2(2^d - 1)), K_d = (2^d - 1) 2^{2^{d-1} - 3/2 + eps_d}.
RealBound gamma_upper_simplex(int r, int d);
// 2^{(1 - mu/n) r + n + d - mu}.
RealBound gamma_upper_generic(int r, int n, int mu, int d);
// 2^{0.5 r + K (d r / log2 r)^{2/3}}.
RealBound gamma_upper_bch(int r, int d, double k_constant);

// Rigorous membership tests for the simplex / generic code estimates.
bool below_simplex_bound(const BigInt& size, int r, int d);
bool below_generic_bound(const BigInt& size, int r, int n, int mu, int d);

struct MultiblockChoice {
  std::vector<std::pair<int, int>> parts;  // (r_i, d_i)
  BigInt value;
};

struct BetaLowerFormulas {
  int r = 0, d = 0;
  std::optional<BigInt> balanced;                 // double sum, 2 <= d <= r/2
  std::optional<BigInt> balanced_corollary;       // C(2d,d) floor(r/2d)^d
  std::optional<BigInt> prime;                    // product, r >= d >= 2
  std::optional<double> prime_corollary_log2;     // (r/d)^d
  std::optional<double> prime_half_log2;          // (3/2)^r (4/3)^d, d >= r/2
  std::optional<MultiblockChoice> multiblock_best;
  std::optional<std::pair<int, std::pair<int, int>>> rk_triple;  // (k, (d1, r1))
  std::optional<BigInt> rk;                       // C(r1, d1)^k
  std::optional<double> rk_corollary_log2;        // e^{rH(d/r) - 2(r/d) ln r}
  std::optional<bool> main_term_holds;
  std::vector<std::string> omitted;               // "formula: reason"
};

BetaLowerFormulas beta_lower_formulas(int r, int d);

BigInt balanced_size_formula(int r, int d);
BigInt prime_size_formula(int r, int d);
// Best product of C(r_i, d_i) under sum r_i <= r, sum d_i <= d, r_i <= d + d_i.
MultiblockChoice best_multiblock(int r, int d);

struct ComparisonEntry {
  int r = 0, d = 0;
  BigInt balanced, prime;
};
// Pairs 2 <= d <= r/2, r <= r_limit, where the product formula is strictly
// larger than the double sum (the double sum loses), plus ties.
struct ComparisonTable {
  std::vector<ComparisonEntry> prime_wins;
  std::vector<ComparisonEntry> ties;
  int pairs_checked = 0;
};
ComparisonTable compare_balanced_prime(int r_limit);

}  // namespace flatcover
