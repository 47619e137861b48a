#pragma once

#include "flatcover/f2.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace flatcover {

inline constexpr std::uint64_t kCodeLengthMax = std::uint64_t{1} << 20;
inline constexpr int kWeightEnumMaxDim = 24;

using BitVec = std::vector<std::uint64_t>;

// Binary linear code given by k independent generator rows of length n.
class LinearCode {
 public:
  LinearCode(int n, std::vector<BitVec> generators);

  int length() const { return n_; }
  int dim() const { return static_cast<int>(gen_.size()); }
  const std::vector<BitVec>& generators() const { return gen_; }

  // Codeword sum_{j : bit j of coeffs} gen_j.
  BitVec codeword(std::uint64_t coeffs) const;
  // Same, packed in one word; requires n <= 64.
  std::uint64_t codeword_word(std::uint64_t coeffs) const;

 private:
  int n_;
  std::vector<BitVec> gen_;
};

struct WeightStats {
  std::map<int, std::uint64_t> distribution;
  int min_nonzero = 0;  // 0 when the code is {0}
  int max = 0;
};

// GF(2^m) with a primitive modulus from the built-in table (m = 3..16).
class GF2mField {
 public:
  explicit GF2mField(int m);
  GF2mField(int m, std::uint32_t modulus);

  int degree() const { return m_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t order() const { return (1u << m_) - 1; }
  // alpha^e for the primitive element alpha = x.
  std::uint32_t alpha_pow(std::uint64_t e) const { return exp_[e % order()]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

 private:
  int m_;
  std::uint32_t modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

std::uint32_t primitive_modulus(int m);

// [2^d - 1, d] simplex code: columns are the nonzero vectors of F_2^d.
LinearCode simplex_code(int d);

// Dual of the binary BCH code of length 2^m - 1 with design parameter e:
// rows are the bit expansions of i -> alpha^{j i} for odd j < 2e.
LinearCode dual_bch(int m, int e);
// e <= 2^{ceil(m/2) - 1}, which guarantees dimension e*m.
bool dual_bch_dimension_condition(int m, int e);

WeightStats weight_stats(const LinearCode& c);

// Nonzero weights satisfy |w - 2^{m-1}| <= (e-1) 2^{m/2}.
bool carlitz_uchiyama_check(const LinearCode& c, int m, int e);
bool carlitz_uchiyama_check(const WeightStats& w, int m, int e);
// The variant centred at n/2 with radius (e-1) sqrt(n), n = 2^m - 1.
bool carlitz_uchiyama_n_form_check(const WeightStats& w, int m, int e);

// n >= sum_{i<k} ceil(mu / 2^i).
bool griesmer_holds(int n, int k, int mu);

}  // namespace flatcover
