#pragma once

#include "flatcover/f2.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace flatcover {

// A subset of F_2^r stored as its 2^r-bit characteristic mask.
// Bit p of the mask is set iff the point p belongs to the set.
class PointSetF2 {
 public:
  explicit PointSetF2(int r);
  static PointSetF2 from_points(int r, std::span<const Point> points);
  static PointSetF2 full(int r);

  int dim() const { return r_; }
  std::uint64_t universe() const { return std::uint64_t{1} << r_; }
  std::uint64_t size() const;
  bool empty() const { return size() == 0; }

  bool contains(Point p) const { return (words_[p >> 6] >> (p & 63)) & 1; }
  void insert(Point p);
  void erase(Point p);

  PointSetF2 complement() const;
  PointSetF2 translate(Point t) const;
  std::vector<Point> points() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const PointSetF2& other) const = default;

 private:
  void check_point(Point p) const;
  int r_;
  std::vector<std::uint64_t> words_;
};

}  // namespace flatcover
