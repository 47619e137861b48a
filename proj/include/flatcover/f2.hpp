#pragma once

// Linear algebra over F_2 on machine words.
//
// A point of F_2^r is an r-bit word: coordinate i is bit i (little endian).
// Subspaces are kept in reduced row-echelon form where the pivot of a row is
// its most significant set bit, every pivot column is zero in all other rows,
// and rows are sorted by ascending pivot. Two generator lists span the same
// subspace iff their canonical bases are identical.

#include "flatcover/bigint.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace flatcover {

using Point = std::uint64_t;
inline constexpr int kMaxDim = 64;

inline Point low_mask(int r) { return r >= 64 ? ~Point{0} : (Point{1} << r) - 1; }
inline bool parity(Point x) { return (std::popcount(x) & 1) != 0; }
inline bool dot(Point a, Point b) { return parity(a & b); }
inline int weight(Point x) { return std::popcount(x); }

// GF(2) row rank of a list of words.
int rank_f2(std::span<const Point> rows);

// Rank of a matrix whose rows are arbitrarily wide bit vectors (all rows
// must have the same number of 64-bit words).
int rank_f2_wide(std::vector<std::vector<std::uint64_t>> rows);

void check_dim(int r);

class SubspaceF2 {
 public:
  // The zero subspace of F_2^r.
  explicit SubspaceF2(int r);

  static SubspaceF2 span(int r, std::span<const Point> generators);
  static SubspaceF2 full(int r);
  // Span of the standard basis vectors e_lo, ..., e_{hi-1}.
  static SubspaceF2 coordinate(int r, int lo, int hi);

  int ambient() const { return r_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  std::span<const Point> basis() const { return basis_; }

  // Minimal representative of the coset p + self (numerically least word).
  Point reduce(Point p) const;
  bool contains(Point p) const { return reduce(p) == 0; }

  // All 2^dim elements, ordered by the binary counter over the basis.
  std::vector<Point> points() const;

  // {a : a.x = 0 for every x in self}; dimension r - dim.
  SubspaceF2 annihilator() const;

  bool operator==(const SubspaceF2& other) const = default;

 private:
  SubspaceF2(int r, std::vector<Point> basis) : r_(r), basis_(std::move(basis)) {}
  int r_;
  std::vector<Point> basis_;
};

// One affine parity condition: dot(coeffs, u) == rhs.
struct Equation {
  Point coeffs = 0;
  bool rhs = false;
};

// anchor + direction, with the anchor canonicalized to the numerically least
// member of the flat.
class FlatF2 {
 public:
  FlatF2(Point anchor, SubspaceF2 direction);

  // Solution set of a consistent system of parity conditions.
  static FlatF2 from_equations(int r, std::span<const Equation> equations);
  // p + span(generators).
  static FlatF2 through(int r, Point p, std::span<const Point> generators);

  int ambient() const { return direction_.ambient(); }
  int dim() const { return direction_.dim(); }
  int codim() const { return ambient() - dim(); }
  Point anchor() const { return anchor_; }
  const SubspaceF2& direction() const { return direction_; }

  bool contains(Point p) const {
    for (const Equation& eq : checks_)
      if (dot(eq.coeffs, p) != eq.rhs) return false;
    return true;
  }

  // A full parity-check description (codim independent equations).
  std::span<const Equation> equations() const { return checks_; }

  std::vector<Point> points() const;

  bool operator==(const FlatF2& other) const {
    return anchor_ == other.anchor_ && direction_ == other.direction_;
  }

 private:
  Point anchor_;
  SubspaceF2 direction_;
  std::vector<Equation> checks_;
};

// Streams every d-dimensional subspace of F_2^r exactly once, in canonical
// order: pivot sets in lexicographic order, then the free entries of the
// echelon form as a binary counter.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(int r, int d);
  std::optional<SubspaceF2> next();

 private:
  bool advance_pivots();
  void reset_free();

  int r_, d_;
  std::vector<int> pivots_;
  std::vector<std::pair<int, int>> free_;  // (row, column)
  std::uint64_t counter_ = 0;
  std::uint64_t counter_end_ = 0;
  bool done_ = false;
};

std::vector<SubspaceF2> all_subspaces(int r, int d);

// Coordinate-aligned direct sum F_2^r = V_1 + ... + V_k; block i spans the
// consecutive standard basis vectors starting at offset(i).
class BlockDecomposition {
 public:
  BlockDecomposition() = default;
  BlockDecomposition(int r, std::vector<int> dims);

  int ambient() const { return r_; }
  int blocks() const { return static_cast<int>(dims_.size()); }
  int block_dim(int i) const { return dims_[i]; }
  int offset(int i) const { return offsets_[i]; }
  Point block_mask(int i) const { return masks_[i]; }
  const std::vector<int>& dims() const { return dims_; }

  // Weight functional w_i: support size of v inside block i.
  int weight(int i, Point v) const { return std::popcount(v & masks_[i]); }
  Point component(int i, Point v) const { return v & masks_[i]; }
  // Bitmask over block indices where v has a nonzero component.
  std::uint64_t block_support(Point v) const;

 private:
  int r_ = 0;
  std::vector<int> dims_;
  std::vector<int> offsets_;
  std::vector<Point> masks_;
};

BlockDecomposition direct_sum_split(int r, std::span<const int> dims);
// parts blocks with dims floor(r/parts) and the remainder spread over the
// last (r mod parts) blocks as floor(r/parts) + 1.
std::vector<int> balanced_dims(int r, int parts);

// r-character binary string, coordinate 0 leftmost.
std::string point_to_string(Point p, int r);
Point point_from_string(const std::string& s);

}  // namespace flatcover
