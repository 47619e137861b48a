#pragma once

// Exact gamma_r(d) / beta_r(d) for small r by exhaustive search.

#include "flatcover/bounds.hpp"
#include "flatcover/pointset.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>

namespace flatcover {

enum class ExactMethod { full_enumeration, branch_and_bound, closed_form };
const char* to_string(ExactMethod m);

struct ExactResult {
  int r = 0, d = 0;
  std::string quantity;  // "gamma", "beta" or "sum3"
  std::uint64_t value = 0;
  PointSetF2 optimal_set{1};
  ExactMethod method = ExactMethod::full_enumeration;
  std::uint64_t work = 0;
  std::string note;
};

// r <= 4: every subset, smallest first. r = 5, 6: branch and bound (or the
// closed forms for d in {0, 1, r-1, r}).
ExactResult exact_gamma(int r, int d, std::uint64_t budget = 0);
// r <= 4: every subset, largest first, tested directly against co-d-flats.
// r = 5, 6: through the complement relation with gamma.
ExactResult exact_beta(int r, int d, std::uint64_t budget = 0);
// Smallest set whose three-element sums (distinct summands) cover F_2^r; r <= 4.
ExactResult exact_sum3(int r, std::uint64_t budget = 0);

// Re-checks that a stored set attains the stored value.
bool attains(const ExactResult& res);

// Persistent results keyed by (r, d, quantity); entries are re-verified on load.
class ExactCache {
 public:
  static ExactCache load(const std::string& path);  // missing file: empty cache
  void save(const std::string& path) const;
  std::optional<ExactResult> get(int r, int d, const std::string& quantity) const;
  void put(const ExactResult& res);
  std::size_t size() const { return entries_.size(); }
  std::size_t rejected() const { return rejected_; }

 private:
  std::map<std::tuple<int, int, std::string>, ExactResult> entries_;
  std::size_t rejected_ = 0;
};

}  // namespace flatcover
