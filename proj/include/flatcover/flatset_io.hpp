#pragma once

// flatset v1 text format:
//   # flatset v1
//   r=<int>
//   mode=points|hexmask
// followed either by one r-character binary string per point (coordinate 0
// leftmost, ascending point order) or by the 2^r-bit mask in hex, 64 digits
// per line, each digit covering four consecutive points with the lowest point
// in the digit's least significant bit, lowest points first.

#include "flatcover/pointset.hpp"

#include <iosfwd>
#include <string>

namespace flatcover {

enum class FlatsetMode { points, hexmask };

void write_flatset(std::ostream& os, const PointSetF2& set, FlatsetMode mode);
PointSetF2 read_flatset(std::istream& is);

void save_flatset(const std::string& path, const PointSetF2& set, FlatsetMode mode);
PointSetF2 load_flatset(const std::string& path);

}  // namespace flatcover
