#include "flatcover/pointset.hpp"

#include "flatcover/config.hpp"
#include "flatcover/error.hpp"

#include <bit>
#include <string>

namespace flatcover {

PointSetF2::PointSetF2(int r) : r_(r) {
  if (r < 0 || r > r_max())
    throw ParameterError("point set dimension " + std::to_string(r) + " exceeds r_max = " + std::to_string(r_max()));
  words_.assign(r >= 6 ? (std::size_t{1} << (r - 6)) : 1, 0);
}

PointSetF2 PointSetF2::from_points(int r, std::span<const Point> points) {
  PointSetF2 s(r);
  for (Point p : points) s.insert(p);
  return s;
}

PointSetF2 PointSetF2::full(int r) {
  PointSetF2 s(r);
  if (r >= 6)
    for (auto& w : s.words_) w = ~std::uint64_t{0};
  else
    s.words_[0] = (std::uint64_t{1} << (std::uint64_t{1} << r)) - 1;
  return s;
}

void PointSetF2::check_point(Point p) const {
  if (p >= universe()) throw ParameterError("point outside F_2^" + std::to_string(r_));
}

std::uint64_t PointSetF2::size() const {
  std::uint64_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

void PointSetF2::insert(Point p) {
  check_point(p);
  words_[p >> 6] |= std::uint64_t{1} << (p & 63);
}

void PointSetF2::erase(Point p) {
  check_point(p);
  words_[p >> 6] &= ~(std::uint64_t{1} << (p & 63));
}

PointSetF2 PointSetF2::complement() const {
  PointSetF2 out = full(r_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
  return out;
}

PointSetF2 PointSetF2::translate(Point t) const {
  check_point(t);
  PointSetF2 out(r_);
  for (Point p : points()) out.insert(p ^ t);
  return out;
}

std::vector<Point> PointSetF2::points() const {
  std::vector<Point> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back((i << 6) | std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

}  // namespace flatcover
