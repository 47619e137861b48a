#include "flatcover/poly2.hpp"

#include "flatcover/error.hpp"

#include <algorithm>

namespace flatcover {

namespace {

// Sort and cancel pairs: coefficients live in F_2.
std::vector<Point> normalize(std::vector<Point> terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<Point> out;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) & 1) out.push_back(terms[i]);
    i = j;
  }
  return out;
}

}  // namespace

MultilinearPoly::MultilinearPoly(int r) : r_(r) { check_dim(r); }

MultilinearPoly::MultilinearPoly(int r, std::vector<Point> monomials) : r_(r) {
  check_dim(r);
  for (Point m : monomials)
    if (m & ~low_mask(r)) throw ParameterError("monomial uses a variable beyond r");
  monomials_ = normalize(std::move(monomials));
}

MultilinearPoly MultilinearPoly::constant(int r, bool value) {
  return value ? MultilinearPoly(r, {Point{0}}) : MultilinearPoly(r);
}

MultilinearPoly MultilinearPoly::variable(int r, int i) {
  if (i < 0 || i >= r) throw ParameterError("variable index out of range");
  return MultilinearPoly(r, {Point{1} << i});
}

MultilinearPoly MultilinearPoly::affine(int r, Point coeffs, bool c) {
  std::vector<Point> terms;
  if (c) terms.push_back(0);
  for (int i = 0; i < r; ++i)
    if ((coeffs >> i) & 1) terms.push_back(Point{1} << i);
  return MultilinearPoly(r, std::move(terms));
}

int MultilinearPoly::degree() const {
  int d = 0;
  for (Point m : monomials_) d = std::max(d, weight(m));
  return d;
}

bool MultilinearPoly::eval(Point v) const {
  bool acc = false;
  for (Point m : monomials_) acc ^= (m & ~v) == 0;
  return acc;
}

MultilinearPoly MultilinearPoly::operator+(const MultilinearPoly& other) const {
  if (r_ != other.r_) throw ParameterError("polynomials live in different rings");
  MultilinearPoly out(r_);
  std::set_symmetric_difference(monomials_.begin(), monomials_.end(), other.monomials_.begin(),
                                other.monomials_.end(), std::back_inserter(out.monomials_));
  return out;
}

MultilinearPoly MultilinearPoly::operator*(const MultilinearPoly& other) const {
  if (r_ != other.r_) throw ParameterError("polynomials live in different rings");
  std::vector<Point> terms;
  terms.reserve(monomials_.size() * other.monomials_.size());
  for (Point a : monomials_)
    for (Point b : other.monomials_) terms.push_back(a | b);  // x_i^2 = x_i
  MultilinearPoly out(r_);
  out.monomials_ = normalize(std::move(terms));
  return out;
}

std::vector<std::uint8_t> MultilinearPoly::truth_table() const {
  if (r_ > 26) throw ParameterError("truth table too large");
  const std::size_t n = std::size_t{1} << r_;
  std::vector<std::uint8_t> t(n, 0);
  for (Point m : monomials_) t[m] ^= 1;
  // Zeta transform over the subset lattice: f(v) = sum_{m subset v} c_m.
  for (int i = 0; i < r_; ++i)
    for (std::size_t v = 0; v < n; ++v)
      if ((v >> i) & 1) t[v] ^= t[v ^ (std::size_t{1} << i)];
  return t;
}

std::string MultilinearPoly::to_string() const {
  if (monomials_.empty()) return "0";
  std::vector<Point> order = monomials_;
  std::sort(order.begin(), order.end(), [](Point a, Point b) {
    if (weight(a) != weight(b)) return weight(a) < weight(b);
    // Lexicographic on the sorted variable lists.
    while (a && b) {
      int la = std::countr_zero(a), lb = std::countr_zero(b);
      if (la != lb) return la < lb;
      a &= a - 1;
      b &= b - 1;
    }
    return false;
  });
  std::string s;
  for (Point m : order) {
    if (!s.empty()) s += " + ";
    if (m == 0) {
      s += "1";
      continue;
    }
    for (int i = 0; i < r_; ++i)
      if ((m >> i) & 1) s += "x" + std::to_string(i);
  }
  return s;
}

BigInt dim_multilinear(int r, int d) {
  if (d < 0 || d > r) throw ParameterError("dim_multilinear requires 0 <= d <= r");
  return binomial_sum(r, d);
}

MultilinearPoly interpolate(int r, std::span<const std::uint8_t> table) {
  check_dim(r);
  if (r > 26) throw ParameterError("interpolation limited to r <= 26");
  const std::size_t n = std::size_t{1} << r;
  if (table.size() != n) throw ParameterError("truth table must have 2^r entries");
  std::vector<std::uint8_t> c(table.begin(), table.end());
  // Moebius transform: c_m = sum_{x subset m} f(x) (self-inverse over F_2).
  for (int i = 0; i < r; ++i)
    for (std::size_t m = 0; m < n; ++m)
      if ((m >> i) & 1) c[m] ^= c[m ^ (std::size_t{1} << i)];
  std::vector<Point> monos;
  for (std::size_t m = 0; m < n; ++m)
    if (c[m] & 1) monos.push_back(m);
  return MultilinearPoly(r, std::move(monos));
}

MultilinearPoly indicator_of_coflat(const FlatF2& flat) {
  const int r = flat.ambient();
  MultilinearPoly p = MultilinearPoly::constant(r, true);
  for (const Equation& eq : flat.equations()) p = p * MultilinearPoly::affine(r, eq.coeffs, !eq.rhs);
  return p;
}

int evaluation_rank(std::span<const MultilinearPoly> polys, std::span<const Point> points) {
  if (polys.empty() || points.empty()) return 0;
  const std::size_t words = (points.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(polys.size());
  for (const auto& p : polys) {
    if (p.vars() != polys.front().vars()) throw ParameterError("polynomials live in different rings");
    std::vector<std::uint64_t> row(words, 0);
    for (std::size_t j = 0; j < points.size(); ++j)
      if (p.eval(points[j])) row[j >> 6] |= std::uint64_t{1} << (j & 63);
    rows.push_back(std::move(row));
  }
  return rank_f2_wide(std::move(rows));
}

bool fact1_check(const MultilinearPoly& p) {
  const int d = p.vars();
  if (d < 1) throw ParameterError("fact1_check needs at least one variable");
  if (p.degree() >= d) throw ParameterError("fact1_check requires degree < number of variables");
  if (d > 26) throw ParameterError("fact1_check limited to d <= 26");
  bool sum = false;
  for (Point v = 0; v < (Point{1} << d); ++v) sum ^= p.eval(v);
  return sum;
}

}  // namespace flatcover
