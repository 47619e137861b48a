#include "flatcover/flatset_io.hpp"

#include "flatcover/error.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace flatcover {

namespace {

constexpr int kHexPerLine = 64;
constexpr const char* kHexDigits = "0123456789abcdef";

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t')) ++b;
  return s.substr(b);
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw FormatError(std::string("invalid hex digit '") + c + "'");
}

std::string expect_line(std::istream& is, const char* what) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError(std::string("flatset: missing ") + what + " line");
  return strip(line);
}

}  // namespace

void write_flatset(std::ostream& os, const PointSetF2& set, FlatsetMode mode) {
  const int r = set.dim();
  os << "# flatset v1\n" << "r=" << r << "\n" << "mode=" << (mode == FlatsetMode::points ? "points" : "hexmask") << "\n";
  if (mode == FlatsetMode::points) {
    for (Point p : set.points()) os << point_to_string(p, r) << "\n";
    return;
  }
  const std::uint64_t nibbles = (set.universe() + 3) / 4;
  std::string line;
  for (std::uint64_t k = 0; k < nibbles; ++k) {
    const std::uint64_t bit = 4 * k;
    unsigned v = static_cast<unsigned>((set.words()[bit >> 6] >> (bit & 63)) & 0xF);
    line.push_back(kHexDigits[v]);
    if (line.size() == kHexPerLine) {
      os << line << "\n";
      line.clear();
    }
  }
  if (!line.empty()) os << line << "\n";
}

PointSetF2 read_flatset(std::istream& is) {
  if (expect_line(is, "header") != "# flatset v1") throw FormatError("flatset: expected '# flatset v1' header");
  std::string rl = expect_line(is, "r=");
  if (rl.rfind("r=", 0) != 0) throw FormatError("flatset: expected 'r=<int>'");
  int r = 0;
  try {
    std::size_t used = 0;
    r = std::stoi(rl.substr(2), &used);
    if (used != rl.size() - 2) throw FormatError("flatset: bad r value");
  } catch (const std::logic_error&) {
    throw FormatError("flatset: bad r value '" + rl + "'");
  }
  if (r < 0 || r > kMaxDim) throw FormatError("flatset: r out of range");
  std::string ml = expect_line(is, "mode=");
  PointSetF2 set(r);
  std::string line;
  if (ml == "mode=points") {
    while (std::getline(is, line)) {
      line = strip(line);
      if (line.empty()) continue;
      if (static_cast<int>(line.size()) != r)
        throw FormatError("flatset: point '" + line + "' does not have r = " + std::to_string(r) + " coordinates");
      set.insert(point_from_string(line));
    }
    return set;
  }
  if (ml != "mode=hexmask") throw FormatError("flatset: mode must be points or hexmask");
  const std::uint64_t nibbles = (set.universe() + 3) / 4;
  std::uint64_t k = 0;
  while (std::getline(is, line)) {
    line = strip(line);
    for (char c : line) {
      if (k >= nibbles) throw FormatError("flatset: hexmask longer than 2^r bits");
      const std::uint64_t v = static_cast<std::uint64_t>(hex_value(c));
      for (int j = 0; j < 4; ++j) {
        if (!((v >> j) & 1)) continue;
        const std::uint64_t p = 4 * k + j;
        if (p >= set.universe()) throw FormatError("flatset: hexmask sets a bit beyond 2^r");
        set.insert(p);
      }
      ++k;
    }
  }
  if (k != nibbles) throw FormatError("flatset: hexmask shorter than 2^r bits");
  return set;
}

void save_flatset(const std::string& path, const PointSetF2& set, FlatsetMode mode) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  write_flatset(os, set, mode);
  if (!os) throw IoError("write to '" + path + "' failed");
}

PointSetF2 load_flatset(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path + "'");
  return read_flatset(is);
}

}  // namespace flatcover
