#pragma once

// Explicit d-complete and d-non-blocking sets, each paired with a witness
// map v -> F_v certifying the defining property point by point.

#include "flatcover/bigint.hpp"
#include "flatcover/codes.hpp"
#include "flatcover/f2.hpp"
#include "flatcover/pointset.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flatcover {

enum class ConstructionKind {
  product,
  sum3,
  simplex,
  generic_code,
  bch,
  balanced,
  prime,
  multiblock,
  full,      // the whole space (d-complete for every d)
  searched,  // an arbitrary set whose witnesses are found by search
};

enum class Property { complete, nonblocking };

const char* to_string(ConstructionKind k);
ConstructionKind kind_from_string(const std::string& s);
const char* to_string(Property p);

struct ConstructionRecord {
  int r = 0, d = 0;
  ConstructionKind kind = ConstructionKind::full;
  Property property = Property::complete;
  BigInt size;
  std::function<bool(Point)> contains;
  // Calls the sink for every member, possibly more than once.
  std::function<void(const std::function<void(Point)>&)> for_each;
  std::function<FlatF2(Point)> witness;
  nlohmann::json meta = nlohmann::json::object();

  // Characteristic mask; requires r <= r_max().
  PointSetF2 materialize() const;
};

// Witness-flat condition at a single point against an arbitrary membership test.
bool witness_ok(Property p, int d, Point v, const FlatF2& f, const std::function<bool(Point)>& in_set);

ConstructionRecord complete_full(int r, int d);
ConstructionRecord complete_product(const ConstructionRecord& c1, const ConstructionRecord& c2);
ConstructionRecord sum3_complete(int r);

struct CodeFacts {
  int n = 0, k = 0;
  int mu = 0;  // minimum nonzero weight
  int M = 0;   // maximum weight
};
CodeFacts code_facts(const LinearCode& code);

// Block-union construction from a code of length n <= 64. Pass facts when the
// weights are already known (or bounded); otherwise they are enumerated.
ConstructionRecord complete_from_code(const LinearCode& code, int r, int d,
                                      std::optional<CodeFacts> facts = std::nullopt,
                                      ConstructionKind kind = ConstructionKind::generic_code);
ConstructionRecord complete_simplex(int r, int d);

struct BchParameters {
  int m = 0, e = 0;
  int m_formula = 0;  // before clamping
  bool clamped = false;
  bool dimension_condition = false;  // e <= 2^{ceil(m/2) - 1}
};
BchParameters bch_parameters(int r, int d);
ConstructionRecord complete_bch(int r, int d, std::optional<int> m = std::nullopt, std::optional<int> e = std::nullopt);

ConstructionRecord nonblocking_balanced(int r, int d);
ConstructionRecord nonblocking_prime(int r, int d);
ConstructionRecord nonblocking_multiblock(int r, int d, std::vector<std::pair<int, int>> parts);

struct RkParameters {
  int k = 0, d1 = 0, r1 = 0;
  std::vector<std::pair<int, int>> parts;
};
RkParameters rk_parameters(int r, int d);
ConstructionRecord nonblocking_rk(int r, int d);

// The bound the construction's own theorem promises, checked exactly.
struct TheoremBound {
  std::string name;
  std::string relation;  // "<" or "<=" or "=="
  double log2_value = 0;
  bool satisfied = false;
};
std::vector<TheoremBound> theorem_bounds(const ConstructionRecord& rec);

}  // namespace flatcover
