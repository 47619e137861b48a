#include "flatcover/config.hpp"

#include "flatcover/bigint.hpp"
#include "flatcover/error.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace flatcover {

namespace {
std::atomic<int> g_r_max{kDefaultRMax};
std::atomic<int> g_threads{0};
}  // namespace

int r_max() { return g_r_max.load(); }

void set_r_max(int r) {
  if (r < 1 || r > 40) throw ParameterError("r_max must lie in [1, 40]");
  g_r_max.store(r);
}

int thread_count() {
  int n = g_threads.load();
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_thread_count(int n) { g_threads.store(n < 0 ? 0 : n); }

std::uint64_t default_budget() {
  if (const char* env = std::getenv("FLATCOVER_BUDGET")) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw ParameterError(std::string("FLATCOVER_BUDGET is not a positive integer: ") + env);
  }
  return kDefaultBudget;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

BigInt binomial_sum(int r, int d) {
  BigInt s = 0;
  for (int j = 0; j <= d && j <= r; ++j) s += binomial(r, j);
  return s;
}

BigInt pow2(int e) {
  if (e < 0) throw ParameterError("pow2 of a negative exponent");
  BigInt one = 1;
  return one << e;
}

BigInt ipow(const BigInt& base, unsigned e) {
  BigInt result = 1, b = base;
  while (e) {
    if (e & 1u) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

BigInt gaussian_binomial(int r, int d) {
  if (d < 0 || d > r) return 0;
  BigInt num = 1, den = 1;
  for (int i = 0; i < d; ++i) {
    num *= pow2(r - i) - 1;
    den *= pow2(d - i) - 1;
  }
  return num / den;
}

}  // namespace flatcover
