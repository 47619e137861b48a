#include "flatcover/constructions.hpp"

#include "flatcover/bounds.hpp"
#include "flatcover/config.hpp"
#include "flatcover/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>

namespace flatcover {

namespace {

using Sink = std::function<void(Point)>;

// Coordinates (bit positions) of v inside block i, ascending.
std::vector<int> support_in_block(const BlockDecomposition& b, int i, Point v) {
  std::vector<int> out;
  Point x = b.component(i, v);
  while (x) {
    out.push_back(std::countr_zero(x));
    x &= x - 1;
  }
  return out;
}

std::vector<int> zeros_in_block(const BlockDecomposition& b, int i, Point v) {
  return support_in_block(b, i, ~v & b.block_mask(i));
}

// Every point whose weight in block i lies in allowed[i] (and, if total >= 0,
// whose overall weight is total). Each point is produced once.
void enumerate_weights(const BlockDecomposition& b, const std::vector<std::vector<int>>& allowed, int total,
                       const Sink& sink) {
  const int k = b.blocks();
  std::function<void(int, Point, int)> rec = [&](int i, Point acc, int w) {
    if (i == k) {
      if (total < 0 || w == total) sink(acc);
      return;
    }
    const int dim = b.block_dim(i);
    for (int wi : allowed[i]) {
      if (wi < 0 || wi > dim) continue;
      if (total >= 0 && w + wi > total) continue;
      if (wi == 0) {
        rec(i + 1, acc, w);
        continue;
      }
      // Gosper's hack over wi-subsets of dim bits.
      Point s = low_mask(wi);
      const Point last = low_mask(wi) << (dim - wi);
      while (true) {
        rec(i + 1, acc | (s << b.offset(i)), w + wi);
        if (s == last) break;
        Point c = s & (~s + 1);
        Point rr = s + c;
        s = (((rr ^ s) >> 2) / c) | rr;
      }
    }
  };
  rec(0, 0, 0);
}

Equation coord_eq(int bit, bool value) { return {Point{1} << bit, value}; }

nlohmann::json dims_json(const BlockDecomposition& b) { return b.dims(); }

void check_r(int r) {
  if (r < 1 || r > kMaxDim) throw ParameterError("r must satisfy 1 <= r <= 64");
}

// Incremental GF(2) basis of words, keyed by top bit.
struct XorBasis {
  std::array<Point, 64> row{};
  int rank = 0;
  bool add(Point x) {
    while (x) {
      int t = 63 - std::countl_zero(x);
      if (!row[t]) {
        row[t] = x;
        ++rank;
        return true;
      }
      x ^= row[t];
    }
    return false;
  }
};

}  // namespace

const char* to_string(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::product: return "product";
    case ConstructionKind::sum3: return "sum3";
    case ConstructionKind::simplex: return "simplex";
    case ConstructionKind::generic_code: return "generic_code";
    case ConstructionKind::bch: return "bch";
    case ConstructionKind::balanced: return "balanced";
    case ConstructionKind::prime: return "prime";
    case ConstructionKind::multiblock: return "multiblock";
    case ConstructionKind::full: return "full";
    case ConstructionKind::searched: return "searched";
  }
  return "?";
}

ConstructionKind kind_from_string(const std::string& s) {
  for (auto k : {ConstructionKind::product, ConstructionKind::sum3, ConstructionKind::simplex,
                 ConstructionKind::generic_code, ConstructionKind::bch, ConstructionKind::balanced,
                 ConstructionKind::prime, ConstructionKind::multiblock, ConstructionKind::full,
                 ConstructionKind::searched})
    if (s == to_string(k)) return k;
  throw ParameterError("unknown construction kind '" + s + "'");
}

const char* to_string(Property p) { return p == Property::complete ? "complete" : "nonblocking"; }

PointSetF2 ConstructionRecord::materialize() const {
  if (r > r_max())
    throw ParameterError("cannot materialize a set in dimension " + std::to_string(r) + " (r_max = " +
                         std::to_string(r_max()) + ")");
  PointSetF2 s(r);
  for_each([&](Point p) { s.insert(p); });
  return s;
}

bool witness_ok(Property p, int d, Point v, const FlatF2& f, const std::function<bool(Point)>& in_set) {
  if (!f.contains(v)) return false;
  if (p == Property::complete) {
    if (f.dim() != d) return false;
    for (Point x : f.direction().points())
      if (x && !in_set(v ^ x)) return false;
    return true;
  }
  if (f.codim() > d) return false;
  for (Point x : f.direction().points())
    if (x && in_set(v ^ x)) return false;
  return true;
}

ConstructionRecord complete_full(int r, int d) {
  check_r(r);
  if (d < 0 || d > r) throw ParameterError("complete_full needs 0 <= d <= r");
  ConstructionRecord rec;
  rec.r = r;
  rec.d = d;
  rec.kind = ConstructionKind::full;
  rec.property = Property::complete;
  rec.size = pow2(r);
  rec.contains = [r](Point v) { return (v & ~low_mask(r)) == 0; };
  rec.for_each = [r](const Sink& sink) {
    for (Point v = 0; v <= low_mask(r); ++v) {
      sink(v);
      if (v == low_mask(r)) break;
    }
  };
  rec.witness = [r, d](Point v) { return FlatF2(v, SubspaceF2::coordinate(r, 0, d)); };
  return rec;
}

ConstructionRecord complete_product(const ConstructionRecord& c1, const ConstructionRecord& c2) {
  if (c1.property != Property::complete || c2.property != Property::complete)
    throw ParameterError("product needs two complete sets");
  if (c1.d != c2.d)
    throw ParameterError("product needs equal d (got " + std::to_string(c1.d) + " and " + std::to_string(c2.d) + ")");
  const int r1 = c1.r, r2 = c2.r, r = r1 + r2, d = c1.d;
  if (r > kMaxDim) throw ParameterError("product dimension exceeds 64");
  ConstructionRecord rec;
  rec.r = r;
  rec.d = d;
  rec.kind = ConstructionKind::product;
  rec.property = Property::complete;
  rec.size = c1.size * c2.size;
  auto a = std::make_shared<ConstructionRecord>(c1);
  auto b = std::make_shared<ConstructionRecord>(c2);
  const Point lo = low_mask(r1);
  rec.contains = [a, b, lo, r1](Point v) { return a->contains(v & lo) && b->contains(v >> r1); };
  rec.for_each = [a, b, r1](const Sink& sink) {
    std::vector<Point> second;
    b->for_each([&](Point y) { second.push_back(y); });
    std::sort(second.begin(), second.end());
    second.erase(std::unique(second.begin(), second.end()), second.end());
    a->for_each([&](Point x) {
      for (Point y : second) sink(x | (y << r1));
    });
  };
  rec.witness = [a, b, lo, r1, r](Point v) {
    FlatF2 f1 = a->witness(v & lo);
    FlatF2 f2 = b->witness(v >> r1);
    auto e = f1.direction().basis();
    auto f = f2.direction().basis();
    std::vector<Point> gens;
    for (std::size_t i = 0; i < e.size() && i < f.size(); ++i) gens.push_back(e[i] | (f[i] << r1));
    return FlatF2::through(r, v, gens);
  };
  rec.meta = {{"r1", r1}, {"r2", r2}, {"factors", {to_string(c1.kind), to_string(c2.kind)}}};
  return rec;
}

ConstructionRecord sum3_complete(int r) {
  if (r < 2 || r > kMaxDim) throw ParameterError("sum3_complete needs 2 <= r <= 64");
  std::vector<int> dims = balanced_dims(r, 3);
  BlockDecomposition blocks(r, dims);
  // Blocks of dimension one cannot write their own generator as a sum of
  // three distinct block elements; patch points fix that.
  std::vector<int> unit;
  for (int i = 0; i < 3; ++i)
    if (dims[i] == 1) unit.push_back(i);
  auto gen = [&](int i) { return Point{1} << blocks.offset(i); };
  std::vector<Point> patches;
  // partner[i]: an element q of C with q + gen(i) also in C.
  std::array<Point, 3> partner{};
  if (unit.size() >= 2) {
    patches.push_back(gen(unit[0]) ^ gen(unit[1]));
    partner[unit[0]] = gen(unit[1]);
    partner[unit[1]] = gen(unit[0]);
    if (unit.size() == 3) {
      patches.push_back(gen(unit[2]) ^ gen(unit[0]));
      partner[unit[2]] = gen(unit[0]);
    }
  } else if (unit.size() == 1) {
    const int i = unit[0];
    int j = i + 1;
    while (j < 3 && dims[j] < 2) ++j;
    patches.push_back(gen(i) ^ gen(j));
    partner[i] = gen(j);
  }
  ConstructionRecord rec;
  rec.r = r;
  rec.d = 2;
  rec.kind = ConstructionKind::sum3;
  rec.property = Property::complete;
  BigInt size = 1;  // zero
  for (int b : dims) size += pow2(b) - 1;
  size += static_cast<long>(patches.size());
  rec.size = size;
  rec.contains = [blocks, patches](Point v) {
    if (std::popcount(blocks.block_support(v)) <= 1) return true;
    return std::find(patches.begin(), patches.end(), v) != patches.end();
  };
  rec.for_each = [blocks, patches](const Sink& sink) {
    sink(0);
    for (int i = 0; i < blocks.blocks(); ++i) {
      const int b = blocks.block_dim(i);
      for (Point x = 1; x < (Point{1} << b); ++x) sink(x << blocks.offset(i));
    }
    for (Point p : patches) sink(p);
  };
  rec.witness = [blocks, partner, r](Point v) {
    // Find pairwise distinct c1, c2, c3 in C with v = c1 + c2 + c3; the flat
    // is then {v, c1, c2, c3}.
    std::array<Point, 3> part{};
    int nonzero = 0;
    for (int i = 0; i < 3; ++i) {
      part[i] = blocks.component(i, v);
      if (part[i]) ++nonzero;
    }
    Point c1 = 0, c2 = 0;
    if (nonzero >= 2) {
      std::vector<Point> nz;
      for (Point p : part)
        if (p) nz.push_back(p);
      c1 = nz[0];
      c2 = nz[1];
    } else if (nonzero == 1) {
      int i = 0;
      while (!part[i]) ++i;
      const Point a = part[i];
      if (blocks.block_dim(i) >= 2) {
        Point u = Point{1} << blocks.offset(i);
        if (u == a) u <<= 1;
        c1 = a ^ u;
        c2 = u;
      } else {
        c1 = a ^ partner[i];
        c2 = partner[i];
      }
    } else {
      int i = 0;
      while (i < 3 && blocks.block_dim(i) < 2) ++i;
      if (i < 3) {
        c1 = Point{1} << blocks.offset(i);
        c2 = c1 << 1;
      } else {
        // all blocks have dim <= 1: use two unit generators and their patch
        int a = 0;
        while (blocks.block_dim(a) != 1) ++a;
        c1 = Point{1} << blocks.offset(a);
        c2 = partner[a];
      }
    }
    const Point gens[2] = {v ^ c1, v ^ c2};
    return FlatF2::through(r, v, gens);
  };
  rec.meta = {{"block_dims", dims_json(blocks)}, {"patches", patches.size()}};
  return rec;
}

CodeFacts code_facts(const LinearCode& code) {
  WeightStats w = weight_stats(code);
  return {code.length(), code.dim(), w.min_nonzero, w.max};
}

ConstructionRecord complete_from_code(const LinearCode& code, int r, int d, std::optional<CodeFacts> facts,
                                      ConstructionKind kind) {
  check_r(r);
  const int n = code.length();
  const int k = code.dim();
  if (n > 64) throw ParameterError("code length must be <= 64 for the block construction");
  if (d < 1) throw ParameterError("complete_from_code needs d >= 1");
  if (r < n) throw ParameterError("precondition r >= n failed: r = " + std::to_string(r) + ", n = " + std::to_string(n));
  if (k < d)
    throw ParameterError("precondition dim(S) >= d failed: dim = " + std::to_string(k) + ", d = " + std::to_string(d));
  CodeFacts cf = facts ? *facts : code_facts(code);
  const long lhs = static_cast<long>(n - cf.M) * (r / n);
  if (lhs < d)
    throw ParameterError("precondition (n - M) * floor(r/n) >= d failed: (" + std::to_string(n) + " - " +
                         std::to_string(cf.M) + ") * " + std::to_string(r / n) + " = " + std::to_string(lhs) +
                         " < " + std::to_string(d));

  BlockDecomposition blocks(r, balanced_dims(r, n));
  // cols[i]: bit j set iff generator j has a one in position i.
  auto cols = std::make_shared<std::vector<Point>>(n, 0);
  std::vector<Point> rows;
  for (int j = 0; j < k; ++j) {
    Point w = code.codeword_word(std::uint64_t{1} << j);
    rows.push_back(w);
    for (int i = 0; i < n; ++i)
      if ((w >> i) & 1) (*cols)[i] |= Point{1} << j;
  }
  // Block pattern S is covered iff some nonzero codeword vanishes on S,
  // i.e. the columns indexed by S have rank < k.
  auto admissible = [cols, k](std::uint64_t support) {
    XorBasis basis;
    while (support) {
      int i = std::countr_zero(support);
      support &= support - 1;
      basis.add((*cols)[i]);
      if (basis.rank == k) return false;
    }
    return true;
  };

  // Depth-first walk over admissible patterns (a down-closed family).
  auto walk = [blocks, cols, k, n](const std::function<void(std::uint64_t)>& visit) {
    std::uint64_t budget = default_budget();
    std::uint64_t nodes = 0;
    std::function<void(int, std::uint64_t, const XorBasis&)> rec = [&](int start, std::uint64_t s,
                                                                        const XorBasis& basis) {
      if (++nodes > budget) throw InfeasibleError("block-pattern enumeration exceeds budget", budget);
      visit(s);
      for (int i = start; i < n; ++i) {
        if (blocks.block_dim(i) == 0) continue;
        XorBasis next = basis;
        next.add((*cols)[i]);
        if (next.rank == k) continue;
        rec(i + 1, s | (std::uint64_t{1} << i), next);
      }
    };
    rec(0, 0, XorBasis{});
  };

  BigInt size = 0;
  walk([&](std::uint64_t s) {
    BigInt term = 1;
    for (std::uint64_t t = s; t; t &= t - 1) term *= pow2(blocks.block_dim(std::countr_zero(t))) - 1;
    size += term;
  });

  ConstructionRecord rec;
  rec.r = r;
  rec.d = d;
  rec.kind = kind;
  rec.property = Property::complete;
  rec.size = size;
  rec.contains = [blocks, admissible](Point v) { return admissible(blocks.block_support(v)); };
  rec.for_each = [blocks, walk](const Sink& sink) {
    walk([&](std::uint64_t s) {
      // all points whose block support is exactly s
      std::vector<int> idx;
      for (std::uint64_t t = s; t; t &= t - 1) idx.push_back(std::countr_zero(t));
      std::function<void(std::size_t, Point)> rec2 = [&](std::size_t j, Point acc) {
        if (j == idx.size()) {
          sink(acc);
          return;
        }
        const int b = blocks.block_dim(idx[j]);
        for (Point x = 1; x < (Point{1} << b); ++x) rec2(j + 1, acc | (x << blocks.offset(idx[j])));
      };
      rec2(0, 0);
    });
  };
  std::vector<Point> sub(rows.begin(), rows.begin() + d);
  rec.witness = [blocks, sub, r, d](Point v) {
    std::vector<Point> u;
    for (Point g : sub) {
      Point x = 0;
      for (Point t = g; t; t &= t - 1) x |= blocks.component(std::countr_zero(t), v);
      u.push_back(x);
    }
    if (rank_f2(u) == d) return FlatF2::through(r, v, u);
    // Some nonzero s in the subcode kills v, so v lies in the subspace
    // spanned by the blocks where s vanishes, which sits inside C.
    for (std::uint64_t c = 1; c < (std::uint64_t{1} << d); ++c) {
      Point s = 0;
      for (int j = 0; j < d; ++j)
        if ((c >> j) & 1) s ^= sub[j];
      if (s & blocks.block_support(v)) continue;
      std::vector<Point> gens;
      for (int i = 0; i < blocks.blocks() && static_cast<int>(gens.size()) < d; ++i) {
        if ((s >> i) & 1) continue;
        for (int t = 0; t < blocks.block_dim(i) && static_cast<int>(gens.size()) < d; ++t)
          gens.push_back(Point{1} << (blocks.offset(i) + t));
      }
      return FlatF2::through(r, v, gens);
    }
    throw ConstructionError("no witness flat for point " + point_to_string(v, r));
  };
  rec.meta = {{"n", n}, {"k", k}, {"mu", cf.mu}, {"M", cf.M}, {"rho", r % n}, {"block_dims", dims_json(blocks)}};
  return rec;
}

ConstructionRecord complete_simplex(int r, int d) {
  if (d < 3) throw ParameterError("complete_simplex needs d >= 3");
  if (d > 6) throw ParameterError("complete_simplex supports d <= 6 (code length 2^d - 1 <= 64)");
  check_r(r);
  const int n = (1 << d) - 1;
  if (r < n) {
    if (d > r) throw ParameterError("complete_simplex needs d <= r");
    ConstructionRecord rec = complete_full(r, d);
    rec.kind = ConstructionKind::simplex;
    rec.meta = {{"trivial", true}, {"n", n}};
    return rec;
  }
  const int half = 1 << (d - 1);
  ConstructionRecord rec =
      complete_from_code(simplex_code(d), r, d, CodeFacts{n, d, half, half}, ConstructionKind::simplex);
  rec.meta["trivial"] = false;
  return rec;
}

BchParameters bch_parameters(int r, int d) {
  if (d < 3 || r < d) throw ParameterError("bch_parameters needs r >= d >= 3");
  BchParameters p;
  const double x = static_cast<double>(d) * r;
  p.m_formula = static_cast<int>(std::ceil((2.0 / 3.0) * (std::log2(x) - std::log2(std::log2(x))) - 1e-12));
  p.m = std::max(p.m_formula, 3);
  p.clamped = p.m != p.m_formula;
  p.e = (d + p.m - 1) / p.m;
  p.dimension_condition = dual_bch_dimension_condition(p.m, p.e);
  return p;
}

ConstructionRecord complete_bch(int r, int d, std::optional<int> m_override, std::optional<int> e_override) {
  BchParameters p = bch_parameters(r, d);
  if (m_override) p.m = *m_override;
  if (e_override) p.e = *e_override;
  if (m_override || e_override) p.dimension_condition = dual_bch_dimension_condition(p.m, p.e);
  if (p.m < 3 || p.m > 6) throw ParameterError("complete_bch supports 3 <= m <= 6 (code length <= 64)");
  if (p.e < 1) throw ParameterError("complete_bch needs e >= 1");
  const int n = (1 << p.m) - 1;
  if (!(r > n)) throw ParameterError("precondition r > n failed: r = " + std::to_string(r) + ", n = " + std::to_string(n));
  if (!p.dimension_condition)
    throw ParameterError("precondition e <= 2^(ceil(m/2) - 1) failed: m = " + std::to_string(p.m) +
                         ", e = " + std::to_string(p.e));
  LinearCode code = dual_bch(p.m, p.e);
  CodeFacts cf;
  cf.n = n;
  cf.k = code.dim();
  bool exact_weights = cf.k <= kWeightEnumMaxDim;
  if (exact_weights) {
    cf = code_facts(code);
  } else {
    // Carlitz-Uchiyama interval around 2^{m-1} with radius (e-1) 2^{m/2}.
    const BigInt rad2 = BigInt(p.e - 1) * (p.e - 1) * pow2(p.m);
    BigInt rad = boost::multiprecision::sqrt(rad2);
    const BigInt centre = pow2(p.m - 1);
    cf.M = static_cast<int>(std::min<BigInt>(centre + rad, n));
    BigInt lo = centre - rad;
    if (rad * rad != rad2) lo -= 1;
    cf.mu = static_cast<int>(std::max<BigInt>(lo, 1));
  }
  ConstructionRecord rec = complete_from_code(code, r, d, cf, ConstructionKind::bch);
  rec.meta["m"] = p.m;
  rec.meta["e"] = p.e;
  rec.meta["m_formula"] = p.m_formula;
  rec.meta["m_clamped"] = p.clamped;
  rec.meta["overridden"] = static_cast<bool>(m_override || e_override);
  rec.meta["weights"] = exact_weights ? "enumerated" : "carlitz_uchiyama";
  return rec;
}

ConstructionRecord nonblocking_balanced(int r, int d) {
  check_r(r);
  if (d < 2 || 2 * d > r) throw ParameterError("nonblocking_balanced needs 2 <= d <= r/2");
  BlockDecomposition blocks(r, balanced_dims(r, 2 * d));
  ConstructionRecord rec;
  rec.r = r;
  rec.d = d;
  rec.kind = ConstructionKind::balanced;
  rec.property = Property::nonblocking;
  rec.size = balanced_size_formula(r, d);
  rec.contains = [blocks, d](Point v) {
    if (std::popcount(v) != d) return false;
    for (int i = 0; i < blocks.blocks(); ++i)
      if (blocks.weight(i, v) > 1) return false;
    return true;
  };
  rec.for_each = [blocks, d](const Sink& sink) {
    enumerate_weights(blocks, std::vector<std::vector<int>>(blocks.blocks(), {0, 1}), d, sink);
  };
  rec.witness = [blocks, d, r](Point v) {
    std::vector<Equation> eqs;
    const int k = blocks.blocks();
    bool all_small = true;
    for (int i = 0; i < k && all_small; ++i) {
      if (blocks.weight(i, v) >= 2) {
        auto s = support_in_block(blocks, i, v);
        eqs = {coord_eq(s[0], true), coord_eq(s[1], true)};
        all_small = false;
      }
    }
    if (all_small) {
      if (std::popcount(v) == d) {
        for (Point x = v; x; x &= x - 1) eqs.push_back(coord_eq(std::countr_zero(x), true));
      } else {
        // d + 1 blocks on which w_i(v) takes the majority value
        const int ones = std::popcount(v);
        const int target = ones > d ? 1 : 0;
        std::vector<int> idx;
        for (int i = 0; i < k && static_cast<int>(idx.size()) < d + 1; ++i)
          if (blocks.weight(i, v) == target) idx.push_back(i);
        for (std::size_t j = 1; j < idx.size(); ++j)
          eqs.push_back({blocks.block_mask(idx[0]) ^ blocks.block_mask(idx[j]), false});
      }
    }
    return FlatF2::from_equations(r, eqs);
  };
  rec.meta = {{"block_dims", dims_json(blocks)}, {"rho", r % (2 * d)}};
  return rec;
}

ConstructionRecord nonblocking_prime(int r, int d) {
  check_r(r);
  if (d < 2 || d > r) throw ParameterError("nonblocking_prime needs r >= d >= 2");
  BlockDecomposition blocks(r, balanced_dims(r, d));
  ConstructionRecord rec;
  rec.r = r;
  rec.d = d;
  rec.kind = ConstructionKind::prime;
  rec.property = Property::nonblocking;
  rec.size = prime_size_formula(r, d);
  rec.contains = [blocks](Point v) {
    for (int i = 0; i < blocks.blocks(); ++i)
      if (blocks.weight(i, v) > 1) return false;
    return true;
  };
  rec.for_each = [blocks](const Sink& sink) {
    enumerate_weights(blocks, std::vector<std::vector<int>>(blocks.blocks(), {0, 1}), -1, sink);
  };
  rec.witness = [blocks, r](Point v) {
    std::vector<Equation> eqs;
    for (int i = 0; i < blocks.blocks(); ++i)
      if (blocks.weight(i, v) >= 2) {
        auto s = support_in_block(blocks, i, v);
        eqs = {coord_eq(s[0], true), coord_eq(s[1], true)};
        return FlatF2::from_equations(r, eqs);
      }
    for (int i = 0; i < blocks.blocks(); ++i) {
      if (blocks.weight(i, v) == 0)
        eqs.push_back({blocks.block_mask(i), false});
      else
        eqs.push_back(coord_eq(std::countr_zero(blocks.component(i, v)), true));
    }
    return FlatF2::from_equations(r, eqs);
  };
  rec.meta = {{"block_dims", dims_json(blocks)}, {"rho", r % d}};
  return rec;
}

ConstructionRecord nonblocking_multiblock(int r, int d, std::vector<std::pair<int, int>> parts) {
  check_r(r);
  if (d < 1 || d > r) throw ParameterError("nonblocking_multiblock needs 1 <= d <= r");
  if (parts.empty()) throw ParameterError("nonblocking_multiblock needs at least one part");
  int sum_r = 0, sum_d = 0;
  for (auto [ri, di] : parts) {
    if (ri < 1) throw ParameterError("part dimension r_i must be >= 1");
    if (di < 0 || di > ri)
      throw ParameterError("constraint d_i <= r_i violated by part (" + std::to_string(ri) + "," + std::to_string(di) + ")");
    if (ri > d + di)
      throw ParameterError("constraint r_i <= d + d_i violated by part (" + std::to_string(ri) + "," +
                           std::to_string(di) + "): " + std::to_string(ri) + " > " + std::to_string(d + di));
    sum_r += ri;
    sum_d += di;
  }
  if (sum_r > r)
    throw ParameterError("constraint sum r_i <= r violated: " + std::to_string(sum_r) + " > " + std::to_string(r));
  if (sum_d > d)
    throw ParameterError("constraint sum d_i <= d violated: " + std::to_string(sum_d) + " > " + std::to_string(d));
  const auto given = parts;
  for (int i = sum_r; i < r; ++i) parts.emplace_back(1, 0);
  std::vector<int> dims;
  std::vector<int> want;
  BigInt size = 1;
  for (auto [ri, di] : parts) {
    dims.push_back(ri);
    want.push_back(di);
    size *= binomial(ri, di);
  }
  BlockDecomposition blocks(r, dims);
  ConstructionRecord rec;
  rec.r = r;
  rec.d = d;
  rec.kind = ConstructionKind::multiblock;
  rec.property = Property::nonblocking;
  rec.size = size;
  rec.contains = [blocks, want](Point v) {
    for (int i = 0; i < blocks.blocks(); ++i)
      if (blocks.weight(i, v) != want[i]) return false;
    return true;
  };
  rec.for_each = [blocks, want](const Sink& sink) {
    std::vector<std::vector<int>> allowed;
    for (int w : want) allowed.push_back({w});
    enumerate_weights(blocks, allowed, -1, sink);
  };
  rec.witness = [blocks, want, d, r](Point v) {
    const int k = blocks.blocks();
    std::vector<Equation> eqs;
    for (int i = 0; i < k; ++i) {
      const int w = blocks.weight(i, v), di = want[i];
      if (w < di + 1) continue;
      auto s = support_in_block(blocks, i, v);
      s.resize(di + 1);
      if (di < d) {
        for (int e : s) eqs.push_back(coord_eq(e, true));
      } else {
        // E inside supp(u) or disjoint from it: all coordinates of E agree
        for (std::size_t j = 1; j < s.size(); ++j) eqs.push_back({(Point{1} << s[0]) | (Point{1} << s[j]), false});
      }
      return FlatF2::from_equations(r, eqs);
    }
    for (int i = 0; i < k; ++i) {
      const int w = blocks.weight(i, v), di = want[i], ri = blocks.block_dim(i);
      if (w > di - 1) continue;
      auto z = zeros_in_block(blocks, i, v);
      z.resize(ri - di + 1);
      if (ri < di + d) {
        for (int e : z) eqs.push_back(coord_eq(e, false));
      } else {
        for (std::size_t j = 1; j < z.size(); ++j) eqs.push_back({(Point{1} << z[0]) | (Point{1} << z[j]), false});
      }
      return FlatF2::from_equations(r, eqs);
    }
    for (Point x = v; x; x &= x - 1) eqs.push_back(coord_eq(std::countr_zero(x), true));
    return FlatF2::from_equations(r, eqs);
  };
  nlohmann::json pj = nlohmann::json::array();
  for (auto [ri, di] : given) pj.push_back({ri, di});
  rec.meta = {{"parts", pj}, {"padding", r - sum_r}};
  return rec;
}

RkParameters rk_parameters(int r, int d) {
  if (!(static_cast<long>(d) * d >= r && 2 * d <= r)) throw ParameterError("rk_parameters needs sqrt(r) <= d <= r/2");
  RkParameters p;
  p.k = r / d;
  p.d1 = d / p.k;
  p.r1 = static_cast<int>(static_cast<long>(p.d1) * r / d);
  p.parts.assign(p.k, {p.r1, p.d1});
  return p;
}

ConstructionRecord nonblocking_rk(int r, int d) {
  RkParameters p = rk_parameters(r, d);
  ConstructionRecord rec = nonblocking_multiblock(r, d, p.parts);
  rec.meta["rk"] = {{"k", p.k}, {"d1", p.d1}, {"r1", p.r1}};
  return rec;
}

std::vector<TheoremBound> theorem_bounds(const ConstructionRecord& rec) {
  std::vector<TheoremBound> out;
  const int r = rec.r, d = rec.d;
  auto add = [&](std::string name, std::string rel, double lg, bool ok) {
    out.push_back({std::move(name), std::move(rel), lg, ok});
  };
  const double lg_size = rec.size > 0 ? std::log2(rec.size.convert_to<double>()) : -INFINITY;
  (void)lg_size;
  if (rec.property == Property::nonblocking) {
    const BigInt sum = beta_upper_sum(r, d), strong = beta_upper_strong(r, d);
    add("binomial_sum", "<=", std::log2(sum.convert_to<double>()), rec.size <= sum);
    add("binomial_sum_strong", "<=", std::log2(strong.convert_to<double>()), rec.size <= strong);
    if (rec.kind == ConstructionKind::balanced) {
      BigInt f = balanced_size_formula(r, d);
      add("balanced_formula", "==", std::log2(f.convert_to<double>()), rec.size == f);
    } else if (rec.kind == ConstructionKind::prime) {
      BigInt f = prime_size_formula(r, d);
      add("prime_formula", "==", std::log2(f.convert_to<double>()), rec.size == f);
    }
    return out;
  }
  const bool trivial = rec.meta.contains("trivial") && rec.meta["trivial"].get<bool>();
  if (rec.kind == ConstructionKind::full || trivial) {
    add("trivial", "<=", r, rec.size <= pow2(r));
    return out;
  }
  if (rec.kind == ConstructionKind::simplex && d <= 12) {
    RealBound sb = gamma_upper_simplex(r, d);
    add("simplex", "<", sb.log2_value, below_simplex_bound(rec.size, r, d));
  }
  if (rec.kind == ConstructionKind::simplex || rec.kind == ConstructionKind::generic_code ||
      rec.kind == ConstructionKind::bch) {
    const int n = rec.meta["n"], mu = rec.meta["mu"];
    RealBound gb = gamma_upper_generic(r, n, mu, d);
    add("generic_code", "<", gb.log2_value, below_generic_bound(rec.size, r, n, mu, d));
  }
  if (rec.kind == ConstructionKind::bch) {
    BoundsRow row = bounds_row(r, d);
    for (const Bound& b : row.gamma_upper)
      if (b.name == "bch") add("bch", "<", b.log2_value, b.admits(rec.size));
  }
  if (rec.kind == ConstructionKind::sum3) {
    // the three-element sums must reach every point
    add("sum3_counting", ">=", r, rec.size * (rec.size - 1) * (rec.size - 2) / 6 >= pow2(r));
  }
  if (rec.kind == ConstructionKind::product) add("trivial", "<=", r, rec.size <= pow2(r));
  return out;
}

}  // namespace flatcover
