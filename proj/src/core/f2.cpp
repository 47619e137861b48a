#include "flatcover/f2.hpp"

#include "flatcover/error.hpp"

#include <algorithm>
#include <array>

namespace flatcover {

namespace {

int top_bit(Point x) { return 63 - std::countl_zero(x); }

// Canonical RREF of the span of the given words.
std::vector<Point> canonical_basis(std::span<const Point> generators) {
  std::array<Point, 64> by_pivot{};
  for (Point g : generators) {
    while (g) {
      int b = top_bit(g);
      if (!by_pivot[b]) {
        by_pivot[b] = g;
        break;
      }
      g ^= by_pivot[b];
    }
  }
  // Clear each pivot column from the rows with higher pivots.
  for (int b = 0; b < 64; ++b) {
    if (!by_pivot[b]) continue;
    for (int c = b + 1; c < 64; ++c)
      if (by_pivot[c] && ((by_pivot[c] >> b) & 1)) by_pivot[c] ^= by_pivot[b];
  }
  std::vector<Point> basis;
  for (int b = 0; b < 64; ++b)
    if (by_pivot[b]) basis.push_back(by_pivot[b]);
  return basis;
}

}  // namespace

void check_dim(int r) {
  if (r < 0 || r > kMaxDim) throw ParameterError("dimension out of range: " + std::to_string(r));
}

int rank_f2(std::span<const Point> rows) { return static_cast<int>(canonical_basis(rows).size()); }

int rank_f2_wide(std::vector<std::vector<std::uint64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t words = rows.front().size();
  int rank = 0;
  std::size_t next_row = 0;
  for (std::size_t w = 0; w < words && next_row < rows.size(); ++w) {
    for (int bit = 0; bit < 64 && next_row < rows.size(); ++bit) {
      const std::uint64_t m = std::uint64_t{1} << bit;
      std::size_t pivot = next_row;
      while (pivot < rows.size() && !(rows[pivot][w] & m)) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[pivot], rows[next_row]);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i != next_row && (rows[i][w] & m))
          for (std::size_t k = w; k < words; ++k) rows[i][k] ^= rows[next_row][k];
      }
      ++next_row;
      ++rank;
    }
  }
  return rank;
}

SubspaceF2::SubspaceF2(int r) : r_(r) { check_dim(r); }

SubspaceF2 SubspaceF2::span(int r, std::span<const Point> generators) {
  check_dim(r);
  for (Point g : generators)
    if (g & ~low_mask(r)) throw ParameterError("generator does not fit in r bits");
  return SubspaceF2(r, canonical_basis(generators));
}

SubspaceF2 SubspaceF2::full(int r) { return coordinate(r, 0, r); }

SubspaceF2 SubspaceF2::coordinate(int r, int lo, int hi) {
  check_dim(r);
  if (lo < 0 || hi > r || lo > hi) throw ParameterError("coordinate range out of bounds");
  std::vector<Point> basis;
  for (int i = lo; i < hi; ++i) basis.push_back(Point{1} << i);
  return SubspaceF2(r, std::move(basis));
}

Point SubspaceF2::reduce(Point p) const {
  for (auto it = basis_.rbegin(); it != basis_.rend(); ++it)
    if ((p >> top_bit(*it)) & 1) p ^= *it;
  return p;
}

std::vector<Point> SubspaceF2::points() const {
  const std::size_t n = std::size_t{1} << basis_.size();
  std::vector<Point> out(n);
  for (std::size_t mask = 1; mask < n; ++mask) {
    int low = std::countr_zero(mask);
    out[mask] = out[mask & (mask - 1)] ^ basis_[low];
  }
  return out;
}

SubspaceF2 SubspaceF2::annihilator() const {
  Point pivot_mask = 0;
  for (Point b : basis_) pivot_mask |= Point{1} << top_bit(b);
  std::vector<Point> dual;
  for (int j = 0; j < r_; ++j) {
    if ((pivot_mask >> j) & 1) continue;
    Point a = Point{1} << j;
    for (Point b : basis_)
      if ((b >> j) & 1) a |= Point{1} << top_bit(b);
    dual.push_back(a);
  }
  return SubspaceF2(r_, canonical_basis(dual));
}

FlatF2::FlatF2(Point anchor, SubspaceF2 direction)
    : anchor_(direction.reduce(anchor)), direction_(std::move(direction)) {
  if (anchor & ~low_mask(direction_.ambient())) throw ParameterError("anchor does not fit in r bits");
  const SubspaceF2 normals = direction_.annihilator();
  for (Point a : normals.basis()) checks_.push_back({a, dot(a, anchor_)});
}

FlatF2 FlatF2::from_equations(int r, std::span<const Equation> equations) {
  check_dim(r);
  // Echelonize the augmented system; rhs travels alongside each row.
  std::array<Point, 64> row{};
  std::array<bool, 64> rhs{};
  std::array<bool, 64> used{};
  for (const Equation& eq : equations) {
    if (eq.coeffs & ~low_mask(r)) throw ParameterError("equation does not fit in r bits");
    Point c = eq.coeffs;
    bool b = eq.rhs;
    while (c) {
      int t = top_bit(c);
      if (!used[t]) {
        used[t] = true;
        row[t] = c;
        rhs[t] = b;
        break;
      }
      c ^= row[t];
      b ^= rhs[t];
    }
    if (!c && b) throw ParameterError("inconsistent parity conditions: flat is empty");
  }
  for (int p = 0; p < 64; ++p) {
    if (!used[p]) continue;
    for (int q = p + 1; q < 64; ++q)
      if (used[q] && ((row[q] >> p) & 1)) {
        row[q] ^= row[p];
        rhs[q] ^= rhs[p];
      }
  }
  Point particular = 0;
  std::vector<Point> rows;
  for (int p = 0; p < 64; ++p) {
    if (!used[p]) continue;
    rows.push_back(row[p]);
    if (rhs[p]) particular |= Point{1} << p;
  }
  SubspaceF2 normals = SubspaceF2::span(r, rows);
  return FlatF2(particular, normals.annihilator());
}

FlatF2 FlatF2::through(int r, Point p, std::span<const Point> generators) {
  return FlatF2(p, SubspaceF2::span(r, generators));
}

std::vector<Point> FlatF2::points() const {
  std::vector<Point> pts = direction_.points();
  for (Point& p : pts) p ^= anchor_;
  return pts;
}

SubspaceEnumerator::SubspaceEnumerator(int r, int d) : r_(r), d_(d) {
  check_dim(r);
  if (d < 0 || d > r) throw ParameterError("subspace dimension must satisfy 0 <= d <= r");
  for (int i = 0; i < d; ++i) pivots_.push_back(i);
  reset_free();
}

void SubspaceEnumerator::reset_free() {
  free_.clear();
  Point pivot_mask = 0;
  for (int p : pivots_) pivot_mask |= Point{1} << p;
  for (int row = 0; row < d_; ++row)
    for (int col = 0; col < pivots_[row]; ++col)
      if (!((pivot_mask >> col) & 1)) free_.emplace_back(row, col);
  if (free_.size() >= 64) throw ParameterError("subspace enumeration too large");
  counter_ = 0;
  counter_end_ = std::uint64_t{1} << free_.size();
}

bool SubspaceEnumerator::advance_pivots() {
  int i = d_ - 1;
  while (i >= 0 && pivots_[i] == r_ - d_ + i) --i;
  if (i < 0) return false;
  ++pivots_[i];
  for (int j = i + 1; j < d_; ++j) pivots_[j] = pivots_[j - 1] + 1;
  reset_free();
  return true;
}

std::optional<SubspaceF2> SubspaceEnumerator::next() {
  if (done_) return std::nullopt;
  std::vector<Point> rows(d_);
  for (int i = 0; i < d_; ++i) rows[i] = Point{1} << pivots_[i];
  for (std::size_t k = 0; k < free_.size(); ++k)
    if ((counter_ >> k) & 1) rows[free_[k].first] |= Point{1} << free_[k].second;
  SubspaceF2 out = SubspaceF2::span(r_, rows);
  if (++counter_ == counter_end_ && !advance_pivots()) done_ = true;
  return out;
}

std::vector<SubspaceF2> all_subspaces(int r, int d) {
  std::vector<SubspaceF2> out;
  SubspaceEnumerator it(r, d);
  while (auto s = it.next()) out.push_back(std::move(*s));
  return out;
}

BlockDecomposition::BlockDecomposition(int r, std::vector<int> dims) : r_(r), dims_(std::move(dims)) {
  check_dim(r);
  int sum = 0;
  for (int d : dims_) {
    if (d < 0) throw ParameterError("block dimensions must be non-negative");
    offsets_.push_back(sum);
    masks_.push_back(d == 0 ? 0 : (low_mask(d) << sum));
    sum += d;
  }
  if (sum != r)
    throw ParameterError("block dimensions sum to " + std::to_string(sum) + ", expected r = " + std::to_string(r));
  if (dims_.size() > 64) throw ParameterError("at most 64 blocks are supported");
}

std::uint64_t BlockDecomposition::block_support(Point v) const {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < masks_.size(); ++i)
    if (v & masks_[i]) s |= std::uint64_t{1} << i;
  return s;
}

BlockDecomposition direct_sum_split(int r, std::span<const int> dims) {
  return BlockDecomposition(r, std::vector<int>(dims.begin(), dims.end()));
}

std::vector<int> balanced_dims(int r, int parts) {
  if (parts < 1) throw ParameterError("need at least one block");
  const int base = r / parts, rho = r % parts;
  std::vector<int> dims(parts, base);
  for (int i = parts - rho; i < parts; ++i) dims[i] = base + 1;
  return dims;
}

std::string point_to_string(Point p, int r) {
  std::string s(r, '0');
  for (int i = 0; i < r; ++i)
    if ((p >> i) & 1) s[i] = '1';
  return s;
}

Point point_from_string(const std::string& s) {
  if (s.size() > 64) throw FormatError("point string longer than 64 coordinates");
  Point p = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      p |= Point{1} << i;
    else if (s[i] != '0')
      throw FormatError("point string must contain only 0/1: '" + s + "'");
  }
  return p;
}

}  // namespace flatcover
