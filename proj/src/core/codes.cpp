#include "flatcover/codes.hpp"

#include "flatcover/config.hpp"
#include "flatcover/error.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <thread>

namespace flatcover {

namespace {

std::size_t words_for(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

bool get_bit(const BitVec& v, std::size_t i) { return (v[i >> 6] >> (i & 63)) & 1; }

// Keep an independent subset spanning the same code.
std::vector<BitVec> independent_rows(int n, const std::vector<BitVec>& rows) {
  std::vector<BitVec> reduced, kept;
  std::vector<std::size_t> pivots;
  for (const BitVec& row : rows) {
    if (row.size() != words_for(n)) throw ParameterError("generator row has the wrong length");
    if (n % 64 && (row.back() >> (n % 64))) throw ParameterError("generator row has bits beyond the code length");
    BitVec x = row;
    for (std::size_t k = 0; k < reduced.size(); ++k)
      if (get_bit(x, pivots[k]))
        for (std::size_t w = 0; w < x.size(); ++w) x[w] ^= reduced[k][w];
    std::size_t p = 0;
    while (p < static_cast<std::size_t>(n) && !get_bit(x, p)) ++p;
    if (p == static_cast<std::size_t>(n)) continue;
    reduced.push_back(std::move(x));
    pivots.push_back(p);
    kept.push_back(row);
  }
  return kept;
}

}  // namespace

LinearCode::LinearCode(int n, std::vector<BitVec> generators) : n_(n) {
  if (n < 1 || static_cast<std::uint64_t>(n) > kCodeLengthMax)
    throw ParameterError("code length must lie in [1, 2^20]");
  gen_ = independent_rows(n, generators);
  if (gen_.size() != generators.size()) throw ParameterError("generator rows are linearly dependent");
  if (gen_.size() > 63) throw ParameterError("code dimension above 63 is not supported");
}

BitVec LinearCode::codeword(std::uint64_t coeffs) const {
  BitVec out(words_for(n_), 0);
  for (std::size_t j = 0; j < gen_.size(); ++j)
    if ((coeffs >> j) & 1)
      for (std::size_t w = 0; w < out.size(); ++w) out[w] ^= gen_[j][w];
  return out;
}

std::uint64_t LinearCode::codeword_word(std::uint64_t coeffs) const {
  if (n_ > 64) throw ParameterError("codeword does not fit in one word");
  return codeword(coeffs)[0];
}

std::uint32_t primitive_modulus(int m) {
  static constexpr std::uint32_t table[] = {
      0x0,     0x0,    0x0,    0xB,    0x13,   0x25,   0x43,   0x89,   0x11D,
      0x211,   0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
  };
  if (m < 3 || m > 16) throw ParameterError("GF(2^m) table covers m = 3..16");
  return table[m];
}

GF2mField::GF2mField(int m) : GF2mField(m, primitive_modulus(m)) {}

GF2mField::GF2mField(int m, std::uint32_t modulus) : m_(m), modulus_(modulus) {
  if (m < 2 || m > 20) throw ParameterError("extension degree out of range");
  if ((modulus >> m) != 1) throw ConstructionError("modulus must have degree exactly m");
  const std::uint32_t n = order();
  exp_.assign(n, 0);
  log_.assign(std::size_t{1} << m, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (i > 0 && x == 1) throw ConstructionError("modulus is not primitive: alpha has order " + std::to_string(i));
    exp_[i] = x;
    log_[x] = i;
    x <<= 1;
    if (x >> m) x ^= modulus;
  }
  if (x != 1) throw ConstructionError("modulus is reducible");
}

std::uint32_t GF2mField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % order()];
}

LinearCode simplex_code(int d) {
  if (d < 1) throw ParameterError("simplex code needs d >= 1");
  if (d > 20 || (std::uint64_t{1} << d) - 1 > kCodeLengthMax)
    throw ParameterError("simplex code length exceeds N_MAX = 2^20");
  const int n = (1 << d) - 1;
  std::vector<BitVec> rows(d, BitVec(words_for(n), 0));
  for (int col = 0; col < n; ++col) {
    const unsigned v = static_cast<unsigned>(col + 1);
    for (int b = 0; b < d; ++b)
      if ((v >> b) & 1) rows[b][col >> 6] |= std::uint64_t{1} << (col & 63);
  }
  return LinearCode(n, std::move(rows));
}

bool dual_bch_dimension_condition(int m, int e) {
  return e >= 1 && e <= (1 << ((m + 1) / 2 - 1));
}

LinearCode dual_bch(int m, int e) {
  if (m < 3) throw ParameterError("dual BCH needs m >= 3");
  if (e < 1 || !dual_bch_dimension_condition(m, e))
    throw ParameterError("dual BCH needs 1 <= e <= 2^{ceil(m/2)-1}");
  GF2mField field(m);
  const int n = static_cast<int>(field.order());
  std::vector<BitVec> rows;
  for (int j = 1; j <= 2 * e - 1; j += 2) {
    std::vector<BitVec> block(m, BitVec(words_for(n), 0));
    for (int i = 0; i < n; ++i) {
      const std::uint32_t a = field.alpha_pow(static_cast<std::uint64_t>(j) * i);
      for (int b = 0; b < m; ++b)
        if ((a >> b) & 1) block[b][i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    for (auto& row : block) rows.push_back(std::move(row));
  }
  std::vector<BitVec> basis = independent_rows(n, rows);
  return LinearCode(n, std::move(basis));
}

WeightStats weight_stats(const LinearCode& c) {
  const int k = c.dim();
  if (k > kWeightEnumMaxDim)
    throw InfeasibleError("weight enumeration needs k <= 24, got k = " + std::to_string(k),
                          std::uint64_t{1} << kWeightEnumMaxDim);
  const int n = c.length();
  const std::uint64_t total = std::uint64_t{1} << k;
  const int workers = static_cast<int>(std::min<std::uint64_t>(thread_count(), std::max<std::uint64_t>(1, total >> 12)));
  std::vector<std::vector<std::uint64_t>> hist(workers, std::vector<std::uint64_t>(n + 1, 0));

  auto run = [&](int w) {
    const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    if (lo >= hi) return;
    // Gray-code walk: step i flips generator countr_zero(i).
    std::uint64_t gray = lo ^ (lo >> 1);
    BitVec cw = c.codeword(gray);
    int wt = 0;
    for (auto x : cw) wt += std::popcount(x);
    auto& h = hist[w];
    ++h[wt];
    for (std::uint64_t i = lo + 1; i < hi; ++i) {
      const BitVec& g = c.generators()[std::countr_zero(i)];
      wt = 0;
      for (std::size_t q = 0; q < cw.size(); ++q) {
        cw[q] ^= g[q];
        wt += std::popcount(cw[q]);
      }
      ++h[wt];
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  WeightStats out;
  for (int wt = 0; wt <= n; ++wt) {
    std::uint64_t cnt = 0;
    for (const auto& h : hist) cnt += h[wt];
    if (!cnt) continue;
    out.distribution[wt] = cnt;
    if (wt > 0 && (out.min_nonzero == 0 || wt < out.min_nonzero)) out.min_nonzero = wt;
    out.max = std::max(out.max, wt);
  }
  return out;
}

bool carlitz_uchiyama_check(const WeightStats& w, int m, int e) {
  if (m < 1 || e < 1) throw ParameterError("Carlitz-Uchiyama check needs m, e >= 1");
  // (wt - 2^{m-1})^2 <= (e-1)^2 2^m, in exact integers.
  const long long centre = 1LL << (m - 1);
  const long long radius_sq = static_cast<long long>(e - 1) * (e - 1) * (1LL << m);
  for (const auto& [wt, cnt] : w.distribution) {
    if (wt == 0) continue;
    const long long dev = wt - centre;
    if (dev * dev > radius_sq) return false;
  }
  return true;
}

bool carlitz_uchiyama_check(const LinearCode& c, int m, int e) {
  return carlitz_uchiyama_check(weight_stats(c), m, e);
}

bool carlitz_uchiyama_n_form_check(const WeightStats& w, int m, int e) {
  // |wt - n/2| <= (e-1) sqrt(n)  <=>  (2 wt - n)^2 <= 4 (e-1)^2 n.
  const long long n = (1LL << m) - 1;
  for (const auto& [wt, cnt] : w.distribution) {
    if (wt == 0) continue;
    const long long dev = 2LL * wt - n;
    if (dev * dev > 4LL * (e - 1) * (e - 1) * n) return false;
  }
  return true;
}

bool griesmer_holds(int n, int k, int mu) {
  long long s = 0;
  for (int i = 0; i < k; ++i) s += (mu + (1LL << i) - 1) >> i;
  return n >= s;
}

}  // namespace flatcover
