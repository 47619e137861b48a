#pragma once

// Brute-force reference implementations. Nothing here calls into the
// library's linear algebra; subspaces are closures of explicit point sets.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Pt = std::uint64_t;
using Space = std::vector<Pt>;  // sorted list of all points of a subspace

inline Space closure(const std::vector<Pt>& gens) {
  std::set<Pt> s{0};
  for (Pt g : gens) {
    std::vector<Pt> add;
    for (Pt x : s) add.push_back(x ^ g);
    s.insert(add.begin(), add.end());
  }
  return {s.begin(), s.end()};
}

inline int rank(const std::vector<Pt>& rows) {
  const auto c = closure(rows);
  int k = 0;
  while ((std::size_t{1} << k) < c.size()) ++k;
  return k;
}

// Every k-dimensional subspace of F_2^r, each exactly once.
inline std::vector<Space> subspaces(int r, int k) {
  std::set<Space> level{{0}};
  for (int i = 0; i < k; ++i) {
    std::set<Space> next;
    for (const auto& s : level)
      for (Pt v = 1; v < (Pt{1} << r); ++v)
        if (!std::binary_search(s.begin(), s.end(), v)) {
          std::vector<Pt> gens(s.begin(), s.end());
          gens.push_back(v);
          next.insert(closure(gens));
        }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

struct Set {
  int r;
  std::vector<bool> in;
  explicit Set(int r_) : r(r_), in(std::size_t{1} << r_, false) {}
  bool has(Pt p) const { return in[p]; }
  std::size_t size() const { return std::count(in.begin(), in.end(), true); }
};

inline bool complete(const Set& c, int d) {
  const auto spaces = subspaces(c.r, d);
  for (Pt v = 0; v < (Pt{1} << c.r); ++v) {
    bool ok = false;
    for (const auto& l : spaces) {
      ok = std::all_of(l.begin(), l.end(), [&](Pt x) { return x == 0 || c.has(v ^ x); });
      if (ok) break;
    }
    if (!ok) return false;
  }
  return true;
}

inline bool nonblocking(const Set& b, int d) {
  const auto spaces = subspaces(b.r, b.r - d);
  for (Pt v = 0; v < (Pt{1} << b.r); ++v) {
    bool ok = false;
    for (const auto& l : spaces) {
      ok = std::none_of(l.begin(), l.end(), [&](Pt x) { return x != 0 && b.has(v ^ x); });
      if (ok) break;
    }
    if (!ok) return false;
  }
  return true;
}

inline bool sum3(const Set& c) {
  std::vector<Pt> pts;
  for (Pt p = 0; p < (Pt{1} << c.r); ++p)
    if (c.has(p)) pts.push_back(p);
  std::vector<bool> hit(std::size_t{1} << c.r, false);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) hit[pts[i] ^ pts[j] ^ pts[k]] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

inline Set from_mask(int r, std::uint64_t mask) {
  Set s(r);
  for (Pt p = 0; p < (Pt{1} << r); ++p) s.in[p] = (mask >> p) & 1;
  return s;
}

inline Set random_set(int r, std::mt19937_64& rng, double density) {
  Set s(r);
  std::bernoulli_distribution coin(density);
  for (Pt p = 0; p < (Pt{1} << r); ++p) s.in[p] = coin(rng);
  return s;
}

inline int popcount(Pt x) {
  int n = 0;
  for (; x; x &= x - 1) ++n;
  return n;
}

}  // namespace oracle
