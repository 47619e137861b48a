#include "flatcover/verify.hpp"

#include "flatcover/error.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <memory>
#include <mutex>
#include <random>
#include <thread>

namespace flatcover {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

std::uint64_t resolve_budget(std::uint64_t b) { return b ? b : default_budget(); }

struct SearchState {
  const PointSetF2& c;
  Point v;
  int d;
  std::uint64_t budget;
  std::uint64_t work = 0;
  std::vector<Point> chosen;

  void spend(std::uint64_t n) {
    work += n;
    if (work > budget) throw InfeasibleError("subspace search exceeded the work budget", budget);
  }

  // cand: sorted elements x such that x + span(chosen) lies in C - v and
  // x exceeds every chosen vector.
  bool dfs(const std::vector<Point>& cand) {
    const int k = static_cast<int>(chosen.size());
    if (k == d) return true;
    const std::uint64_t need_after = (std::uint64_t{1} << d) - (std::uint64_t{1} << (k + 1));
    for (std::size_t idx = 0; idx < cand.size(); ++idx) {
      if (cand.size() - idx - 1 < need_after) break;
      const Point u = cand[idx];
      std::vector<Point> next;
      spend(cand.size() - idx);
      for (std::size_t j = idx + 1; j < cand.size(); ++j) {
        const Point x = cand[j];
        const Point y = x ^ u;
        bool in = k == 0 ? c.contains(v ^ y) : std::binary_search(cand.begin(), cand.end(), y);
        if (in) next.push_back(x);
      }
      if (next.size() < need_after) continue;
      chosen.push_back(u);
      if (dfs(next)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

std::optional<FlatF2> search_witness(const PointSetF2& c, const std::vector<Point>& members, Point v, int d,
                                     std::uint64_t budget, std::uint64_t* work) {
  const int r = c.dim();
  if (d == 0) return FlatF2(v, SubspaceF2(r));
  std::vector<Point> cand;
  cand.reserve(members.size());
  for (Point p : members)
    if (p != v) cand.push_back(p ^ v);
  std::sort(cand.begin(), cand.end());
  SearchState st{c, v, d, budget, 0, {}};
  bool found = false;
  try {
    found = st.dfs(cand);
  } catch (...) {
    if (work) *work += st.work;
    throw;
  }
  if (work) *work += st.work;
  if (!found) return std::nullopt;
  return FlatF2::through(r, v, st.chosen);
}

// Runs check(v) over v in [0, n); returns the smallest failing v (kNone if
// none). Chunks are handed out in increasing order, so the smallest failure
// is found regardless of the thread count.
std::uint64_t parallel_first_failure(std::uint64_t n, const std::function<bool(std::uint64_t)>& check) {
  const std::uint64_t chunk = 256;
  const std::uint64_t chunks = (n + chunk - 1) / chunk;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{kNone};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    try {
      while (true) {
        const std::uint64_t ci = next.fetch_add(1);
        if (ci >= chunks) return;
        const std::uint64_t lo = ci * chunk, hi = std::min(n, lo + chunk);
        if (lo > best.load()) return;
        for (std::uint64_t v = lo; v < hi; ++v) {
          if (v > best.load()) break;
          if (!check(v)) {
            std::uint64_t cur = best.load();
            while (v < cur && !best.compare_exchange_weak(cur, v)) {
            }
            break;
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
      best.store(0);
    }
  };
  const int t = std::max(1, std::min<int>(thread_count(), static_cast<int>(std::min<std::uint64_t>(chunks, 1024))));
  if (t == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < t; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return best.load();
}

void check_dim_range(const PointSetF2& s, int d) {
  if (d < 0 || d > s.dim()) throw ParameterError("d must satisfy 0 <= d <= r");
}

}  // namespace

std::optional<FlatF2> find_complete_witness(const PointSetF2& c, Point v, int d, std::uint64_t budget,
                                            std::uint64_t* work) {
  check_dim_range(c, d);
  return search_witness(c, c.points(), v, d, resolve_budget(budget), work);
}

VerifyReport is_complete(const PointSetF2& c, int d, const VerifyOptions& opts) {
  check_dim_range(c, d);
  const std::uint64_t budget = resolve_budget(opts.budget);
  const std::vector<Point> members = c.points();
  std::atomic<std::uint64_t> total{0};
  auto check = [&](std::uint64_t v) {
    std::uint64_t w = 0;
    std::optional<FlatF2> f;
    try {
      f = search_witness(c, members, v, d, budget, &w);
    } catch (const InfeasibleError&) {
      total += w;
      throw;
    }
    if (total.fetch_add(w) + w > budget)
      throw InfeasibleError("completeness check exceeded the work budget", budget);
    return f.has_value();
  };
  VerifyReport rep;
  rep.property = Property::complete;
  rep.d = d;
  const std::uint64_t fail = parallel_first_failure(c.universe(), check);
  rep.work = total.load();
  rep.holds = fail == kNone;
  rep.checked = rep.holds ? c.universe() : fail + 1;
  if (!rep.holds) rep.counterexample = fail;
  if (rep.holds && opts.collect_witnesses) {
    for (Point v = 0; v < c.universe(); ++v) rep.witnesses.emplace_back(v, *search_witness(c, members, v, d, budget, nullptr));
  }
  return rep;
}

namespace {

BigInt direct_cost(const PointSetF2& b, int d) {
  const int r = b.dim();
  const BigInt per_flat = std::min(BigInt(b.size()) * std::max(d, 1), pow2(r - d));
  return gaussian_binomial(r, d) * pow2(r) * per_flat;
}

}  // namespace

VerifyReport is_nonblocking(const PointSetF2& b, int d, NonblockingMode mode, const VerifyOptions& opts) {
  check_dim_range(b, d);
  const int r = b.dim();
  const std::uint64_t budget = resolve_budget(opts.budget);
  if (mode == NonblockingMode::automatic) mode = direct_cost(b, d) <= budget ? NonblockingMode::direct
                                                                             : NonblockingMode::duality;
  VerifyReport rep;
  if (mode == NonblockingMode::duality) {
    rep = is_complete(b.complement(), r - d, opts);
    rep.property = Property::nonblocking;
    rep.d = d;
    return rep;
  }
  const BigInt cost = direct_cost(b, d);
  if (cost > budget)
    throw InfeasibleError("direct co-" + std::to_string(d) + "-flat enumeration needs " + cost.str() +
                              " membership tests",
                          budget);
  // A co-d-flat through v is cut out by a d-dimensional space A of normals:
  // x lies on it iff a.(x + v) = 0 for every a in a basis of A.
  const std::vector<SubspaceF2> normals = all_subspaces(r, d);
  const std::vector<Point> members = b.points();
  const bool by_members = BigInt(members.size()) * std::max(d, 1) < pow2(r - d);
  std::vector<std::vector<Point>> directions;
  if (!by_members)
    for (const auto& a : normals) directions.push_back(a.annihilator().points());
  std::atomic<std::uint64_t> total{0};
  auto check = [&](std::uint64_t v) {
    std::uint64_t w = 0;
    bool ok = false;
    for (std::size_t i = 0; i < normals.size() && !ok; ++i) {
      bool clean = true;
      if (by_members) {
        const auto& basis = normals[i].basis();
        for (Point x : members) {
          ++w;
          if (x == v) continue;
          bool on = true;
          for (Point a : basis)
            if (dot(a, x ^ v)) {
              on = false;
              break;
            }
          if (on) {
            clean = false;
            break;
          }
        }
      } else {
        for (Point x : directions[i]) {
          ++w;
          if (x && b.contains(v ^ x)) {
            clean = false;
            break;
          }
        }
      }
      ok = clean;
    }
    total += w;
    return ok;
  };
  rep.property = Property::nonblocking;
  rep.d = d;
  const std::uint64_t fail = parallel_first_failure(b.universe(), check);
  rep.work = total.load();
  rep.holds = fail == kNone;
  rep.checked = rep.holds ? b.universe() : fail + 1;
  if (!rep.holds) rep.counterexample = fail;
  return rep;
}

bool is_complete_enumerative(const PointSetF2& c, int d) {
  check_dim_range(c, d);
  const int r = c.dim();
  const auto subspaces = all_subspaces(r, d);
  for (Point v = 0; v < c.universe(); ++v) {
    bool ok = false;
    for (const auto& l : subspaces) {
      bool inside = true;
      for (Point x : l.points())
        if (x && !c.contains(v ^ x)) {
          inside = false;
          break;
        }
      if (inside) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool is_nonblocking_enumerative(const PointSetF2& b, int d) {
  check_dim_range(b, d);
  const int r = b.dim();
  const auto subspaces = all_subspaces(r, r - d);
  for (Point v = 0; v < b.universe(); ++v) {
    bool ok = false;
    for (const auto& l : subspaces) {
      bool clean = true;
      for (Point x : l.points())
        if (x && b.contains(v ^ x)) {
          clean = false;
          break;
        }
      if (clean) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

VerifyReport check_witnesses(const ConstructionRecord& rec, const PointSetF2* set, const VerifyOptions& opts) {
  const int r = rec.r;
  if (set && set->dim() != r) throw ParameterError("override set has the wrong dimension");
  std::function<bool(Point)> in_set = set ? std::function<bool(Point)>([set](Point p) { return set->contains(p); })
                                          : rec.contains;
  // For non-blocking sets the witness flats are large; test the (usually
  // few) members against the flat's equations instead.
  std::shared_ptr<std::vector<Point>> members;
  if (rec.property == Property::nonblocking) {
    if (set) {
      members = std::make_shared<std::vector<Point>>(set->points());
    } else if (rec.size <= BigInt(1) << 22) {
      members = std::make_shared<std::vector<Point>>();
      rec.for_each([&](Point p) { members->push_back(p); });
      std::sort(members->begin(), members->end());
      members->erase(std::unique(members->begin(), members->end()), members->end());
    }
  }
  auto ok_at = [&](Point v) {
    FlatF2 f = rec.witness(v);
    if (!f.contains(v) || f.ambient() != r) return false;
    if (rec.property == Property::complete) return witness_ok(Property::complete, rec.d, v, f, in_set);
    if (f.codim() > rec.d) return false;
    if (members && members->size() < (std::uint64_t{1} << std::min(f.dim(), 63))) {
      for (Point b : *members)
        if (b != v && f.contains(b)) return false;
      return true;
    }
    return witness_ok(Property::nonblocking, rec.d, v, f, in_set);
  };
  auto safe_ok = [&](Point v) {
    try {
      return ok_at(v);
    } catch (const ConstructionError&) {
      return false;
    } catch (const ParameterError&) {
      return false;
    }
  };
  VerifyReport rep;
  rep.property = rec.property;
  rep.d = rec.d;
  const bool sample = opts.force_sample || r > opts.full_check_max_r;
  std::uint64_t fail_index = kNone;
  std::vector<Point> sample_points;
  if (sample) {
    std::mt19937_64 rng(opts.seed);
    sample_points.resize(opts.samples);
    for (auto& p : sample_points) p = rng() & low_mask(r);
    fail_index = parallel_first_failure(sample_points.size(), [&](std::uint64_t i) { return safe_ok(sample_points[i]); });
    rep.sampled = true;
    rep.seed = opts.seed;
    rep.checked = fail_index == kNone ? sample_points.size() : fail_index + 1;
  } else {
    const std::uint64_t n = std::uint64_t{1} << r;
    fail_index = parallel_first_failure(n, [&](std::uint64_t v) { return safe_ok(v); });
    rep.checked = fail_index == kNone ? n : fail_index + 1;
  }
  rep.holds = fail_index == kNone;
  if (!rep.holds) {
    const Point v = sample ? sample_points[fail_index] : fail_index;
    rep.counterexample = v;
    try {
      rep.counterexample_flat = rec.witness(v);
    } catch (const Error&) {
    }
  } else if (opts.collect_witnesses && !sample && r <= 12) {
    for (Point v = 0; v < (Point{1} << r); ++v) rep.witnesses.emplace_back(v, rec.witness(v));
  }
  return rep;
}

bool sum3_property(const PointSetF2& c) {
  const std::vector<Point> m = c.points();
  if (m.size() < 3) return false;
  for (Point v = 0; v < c.universe(); ++v) {
    bool found = false;
    for (std::size_t i = 0; i < m.size() && !found; ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        const Point third = v ^ m[i] ^ m[j];
        if (third != m[i] && third != m[j] && c.contains(third)) {
          found = true;
          break;
        }
      }
    if (!found) return false;
  }
  return true;
}

ConstructionRecord record_from_set(const PointSetF2& set, int d, Property p) {
  check_dim_range(set, d);
  const int r = set.dim();
  auto s = std::make_shared<PointSetF2>(set);
  auto target = std::make_shared<PointSetF2>(p == Property::complete ? set : set.complement());
  const int search_d = p == Property::complete ? d : r - d;
  ConstructionRecord rec;
  rec.r = r;
  rec.d = d;
  rec.kind = ConstructionKind::searched;
  rec.property = p;
  rec.size = static_cast<unsigned long long>(set.size());
  rec.contains = [s](Point v) { return s->contains(v); };
  rec.for_each = [s](const std::function<void(Point)>& sink) {
    for (Point v : s->points()) sink(v);
  };
  rec.witness = [target, search_d, r](Point v) {
    auto f = find_complete_witness(*target, v, search_d, 0);
    if (!f) throw ConstructionError("no witness flat through " + point_to_string(v, r));
    return *f;
  };
  return rec;
}

}  // namespace flatcover
