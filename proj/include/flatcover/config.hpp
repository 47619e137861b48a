#pragma once

#include <cstdint>

namespace flatcover {

// Largest ambient dimension for which a characteristic mask may be
// materialized. Points and flats themselves support up to 64 coordinates.
inline constexpr int kDefaultRMax = 30;
inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;
inline constexpr std::uint64_t kDefaultSeed = 0xF1A7;

int r_max();
void set_r_max(int r);

// Worker count for data-parallel loops; 0 restores the hardware default.
int thread_count();
void set_thread_count(int n);

// Default search budget, honouring FLATCOVER_BUDGET when set.
std::uint64_t default_budget();

}  // namespace flatcover
