#pragma once

// Deciding d-completeness and d-non-blocking: pruned subspace search,
// brute-force enumeration oracles, and point-by-point witness checks.

#include "flatcover/config.hpp"
#include "flatcover/constructions.hpp"
#include "flatcover/f2.hpp"
#include "flatcover/pointset.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace flatcover {

struct VerifyOptions {
  std::uint64_t budget = 0;  // 0: default_budget()
  // Witness checks cover every point up to this dimension, sample above it.
  int full_check_max_r = 22;
  std::uint64_t samples = 100000;
  std::uint64_t seed = kDefaultSeed;
  bool force_sample = false;
  bool collect_witnesses = false;  // keep one flat per point (small r only)
};

struct VerifyReport {
  Property property = Property::complete;
  int d = 0;
  bool holds = false;
  std::optional<Point> counterexample;
  std::optional<FlatF2> counterexample_flat;  // the failing witness, if any
  bool sampled = false;
  std::uint64_t checked = 0;  // points examined
  std::uint64_t seed = 0;     // meaningful when sampled
  std::uint64_t work = 0;     // membership tests spent
  std::vector<std::pair<Point, FlatF2>> witnesses;
};

// Search for a d-flat through v inside C + {v}; nullopt if there is none.
// Work is added to *work and checked against budget.
std::optional<FlatF2> find_complete_witness(const PointSetF2& c, Point v, int d, std::uint64_t budget,
                                            std::uint64_t* work = nullptr);

VerifyReport is_complete(const PointSetF2& c, int d, const VerifyOptions& opts = {});

// automatic takes direct enumeration when it fits the budget, else duality.
enum class NonblockingMode { automatic, duality, direct };
VerifyReport is_nonblocking(const PointSetF2& b, int d, NonblockingMode mode = NonblockingMode::automatic,
                            const VerifyOptions& opts = {});

// Independent brute-force oracles that enumerate every subspace.
bool is_complete_enumerative(const PointSetF2& c, int d);
bool is_nonblocking_enumerative(const PointSetF2& b, int d);

// Checks rec.witness at every point (or a seeded sample). When set is given,
// membership is taken from it instead of the record (mutation testing).
VerifyReport check_witnesses(const ConstructionRecord& rec, const PointSetF2* set = nullptr,
                             const VerifyOptions& opts = {});

// Every point is a sum of three pairwise distinct elements of C.
bool sum3_property(const PointSetF2& c);

// Wraps an arbitrary set as a record whose witnesses come from search.
ConstructionRecord record_from_set(const PointSetF2& set, int d, Property p);

}  // namespace flatcover
