#pragma once

// Multilinear polynomials over F_2. A monomial is the set of variables it
// contains, encoded as an r-bit word (x0*x2 <-> 0b101, the constant 1 <-> 0).

#include "flatcover/bigint.hpp"
#include "flatcover/f2.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace flatcover {

class MultilinearPoly {
 public:
  explicit MultilinearPoly(int r);
  MultilinearPoly(int r, std::vector<Point> monomials);

  static MultilinearPoly constant(int r, bool value);
  static MultilinearPoly variable(int r, int i);
  // dot(coeffs, x) + c as a polynomial.
  static MultilinearPoly affine(int r, Point coeffs, bool c);

  int vars() const { return r_; }
  const std::vector<Point>& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }
  int degree() const;

  bool eval(Point v) const;

  MultilinearPoly operator+(const MultilinearPoly& other) const;
  MultilinearPoly operator*(const MultilinearPoly& other) const;
  bool operator==(const MultilinearPoly& other) const = default;

  // Values on all 2^r points, indexed by point.
  std::vector<std::uint8_t> truth_table() const;

  // e.g. "1 + x0 + x0x1"; the zero polynomial prints as "0".
  std::string to_string() const;

 private:
  int r_;
  std::vector<Point> monomials_;  // sorted, distinct
};

// dim of the space of multilinear polynomials of degree <= d in r variables.
BigInt dim_multilinear(int r, int d);

// Unique multilinear P with P(v) = table[v]; table.size() must be 2^r.
MultilinearPoly interpolate(int r, std::span<const std::uint8_t> table);

// Degree <= codim polynomial equal to 1 exactly on the flat: the product of
// the affine factors (a.x + b + 1) over a parity-check description.
MultilinearPoly indicator_of_coflat(const FlatF2& flat);

// GF(2) rank of the |polys| x |points| evaluation matrix.
int evaluation_rank(std::span<const MultilinearPoly> polys, std::span<const Point> points);

// Sum of P over F_2^d for a polynomial in d variables of degree < d.
bool fact1_check(const MultilinearPoly& p);

}  // namespace flatcover
