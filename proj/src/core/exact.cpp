#include "flatcover/exact.hpp"

#include "flatcover/config.hpp"
#include "flatcover/error.hpp"
#include "flatcover/f2.hpp"
#include "flatcover/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <unordered_set>

namespace flatcover {

namespace {

// Sets of points of F_2^r (r <= 6) as 64-bit masks.
using Mask = std::uint64_t;

constexpr int kFullEnumMaxR = 4;
constexpr int kSearchMaxR = 6;

Mask universe_mask(int r) { return r >= 6 ? ~Mask{0} : (Mask{1} << (1 << r)) - 1; }

// masks[v]: (v + L) \ {v} for every k-dimensional subspace L.
std::vector<std::vector<Mask>> flat_masks(int r, int k) {
  const auto subs = all_subspaces(r, k);
  const int n = 1 << r;
  std::vector<std::vector<Mask>> out(n);
  for (int v = 0; v < n; ++v)
    for (const auto& l : subs) {
      Mask m = 0;
      for (Point x : l.points())
        if (x) m |= Mask{1} << (v ^ x);
      out[v].push_back(m);
    }
  return out;
}

bool covers_all(Mask s, const std::vector<std::vector<Mask>>& flats, std::uint64_t& work) {
  for (const auto& options : flats) {
    bool ok = false;
    for (Mask m : options) {
      ++work;
      if (!(m & ~s)) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool avoids_all(Mask s, const std::vector<std::vector<Mask>>& coflats, std::uint64_t& work) {
  for (const auto& options : coflats) {
    bool ok = false;
    for (Mask m : options) {
      ++work;
      if (!(m & s)) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

// Calls f on every n-bit mask with exactly k bits, in increasing order, until f returns true.
template <class F>
std::optional<Mask> first_subset(int n, int k, F&& f) {
  if (k == 0) return f(Mask{0}) ? std::optional<Mask>(0) : std::nullopt;
  Mask s = (k >= 64) ? ~Mask{0} : (Mask{1} << k) - 1;
  const Mask last = s << (n - k);
  while (true) {
    if (f(s)) return s;
    if (s == last) return std::nullopt;
    Mask c = s & (~s + 1);
    Mask rr = s + c;
    s = (((rr ^ s) >> 2) / c) | rr;
  }
}

PointSetF2 to_set(int r, Mask m) {
  PointSetF2 s(r);
  for (Point p = 0; p < (Point{1} << r); ++p)
    if ((m >> p) & 1) s.insert(p);
  return s;
}

void check_rd(int r, int d) {
  if (r < 1) throw ParameterError("exact values need r >= 1");
  if (d < 0 || d > r) throw ParameterError("exact values need 0 <= d <= r");
}

void spend_check(std::uint64_t work, std::uint64_t budget, const std::string& what) {
  if (work > budget) throw InfeasibleError(what + " exceeded the work budget", budget);
}

class GammaSearch {
 public:
  GammaSearch(int r, int d, std::uint64_t budget)
      : r_(r), n_(1 << r), flats_(flat_masks(r, d)), budget_(budget) {}

  std::optional<Mask> run(int target, Mask start) {
    target_ = target;
    seen_.clear();
    if (dfs(start)) return found_;
    return std::nullopt;
  }
  std::uint64_t work() const { return work_; }

 private:
  bool dfs(Mask s) {
    if (!seen_.insert(s).second) return false;
    const int have = std::popcount(s);
    const int room = target_ - have;
    int best_v = -1;
    std::size_t best_count = ~std::size_t{0};
    int lower = 0;
    for (int v = 0; v < n_; ++v) {
      int cheapest = 64;
      std::size_t count = 0;
      for (Mask m : flats_[v]) {
        const int add = std::popcount(m & ~s);
        cheapest = std::min(cheapest, add);
        if (add <= room) ++count;
      }
      work_ += flats_[v].size();
      if (cheapest == 0) continue;
      if (count == 0) return false;
      lower = std::max(lower, cheapest);
      if (count < best_count) {
        best_count = count;
        best_v = v;
      }
    }
    spend_check(work_, budget_, "branch-and-bound search");
    if (best_v < 0) {
      found_ = s;
      return true;
    }
    if (lower > room) return false;
    std::vector<std::pair<int, Mask>> options;
    for (Mask m : flats_[best_v]) {
      const int add = std::popcount(m & ~s);
      if (add <= room) options.emplace_back(add, m);
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [add, m] : options)
      if (dfs(s | m)) return true;
    return false;
  }

  int r_, n_;
  std::vector<std::vector<Mask>> flats_;
  std::uint64_t budget_;
  std::uint64_t work_ = 0;
  int target_ = 0;
  Mask found_ = 0;
  std::unordered_set<Mask> seen_;
};

std::optional<ExactResult> closed_form(int r, int d, const std::string& quantity) {
  // gamma_r(0) = beta_r(0) = 0, gamma_r(1) = beta_r(1) = 2,
  // gamma_r(r-1) = beta_r(r-1) = 2^r - 2, gamma_r(r) = beta_r(r) = 2^r.
  const Mask pair = 0b11;  // {0, e_0}
  Mask m;
  if (d == 0)
    m = 0;
  else if (d == r)
    m = universe_mask(r);
  else if (d == 1)
    m = pair;
  else if (d == r - 1)
    m = universe_mask(r) & ~pair;
  else
    return std::nullopt;
  ExactResult res;
  res.r = r;
  res.d = d;
  res.quantity = quantity;
  res.optimal_set = to_set(r, m);
  res.value = res.optimal_set.size();
  res.method = ExactMethod::closed_form;
  res.note = "value from the d in {0, 1, r-1, r} closed forms; set verified";
  return res;
}

}  // namespace

const char* to_string(ExactMethod m) {
  switch (m) {
    case ExactMethod::full_enumeration: return "full_enumeration";
    case ExactMethod::branch_and_bound: return "branch_and_bound";
    case ExactMethod::closed_form: return "closed_form";
  }
  return "?";
}

ExactResult exact_gamma(int r, int d, std::uint64_t budget) {
  check_rd(r, d);
  if (!budget) budget = default_budget();
  const int n = 1 << r;
  if (r <= kFullEnumMaxR) {
    const auto flats = flat_masks(r, d);
    std::uint64_t work = 0;
    for (int size = 0; size <= n; ++size) {
      auto hit = first_subset(n, size, [&](Mask s) {
        bool ok = covers_all(s, flats, work);
        spend_check(work, budget, "subset enumeration");
        return ok;
      });
      if (hit) {
        ExactResult res;
        res.r = r;
        res.d = d;
        res.quantity = "gamma";
        res.value = size;
        res.optimal_set = to_set(r, *hit);
        res.method = ExactMethod::full_enumeration;
        res.work = work;
        return res;
      }
    }
    throw ConstructionError("no complete set found; the full space should always qualify");
  }
  if (r > kSearchMaxR)
    throw InfeasibleError("exact values are computed only for r <= " + std::to_string(kSearchMaxR), budget);
  if (auto cf = closed_form(r, d, "gamma")) {
    if (!attains(*cf)) throw ConstructionError("closed-form set failed verification");
    return *cf;
  }
  // WLOG the flat through 0 is span(e_0, ..., e_{d-1}): GL(r,2) acts
  // transitively on d-subspaces and preserves completeness.
  Mask start = 0;
  for (Point x = 1; x < (Point{1} << d); ++x) start |= Mask{1} << x;
  GammaSearch search(r, d, budget);
  const BoundsRow row = bounds_row(r, d);
  int target = std::max<int>(std::popcount(start), static_cast<int>(row.best_gamma_lower()));
  for (; target <= n; ++target) {
    if (auto hit = search.run(target, start)) {
      ExactResult res;
      res.r = r;
      res.d = d;
      res.quantity = "gamma";
      res.optimal_set = to_set(r, *hit);
      res.value = res.optimal_set.size();
      res.method = ExactMethod::branch_and_bound;
      res.work = search.work();
      res.note = "iterative deepening from the best proven lower bound " + row.best_gamma_lower().str();
      return res;
    }
  }
  throw ConstructionError("branch and bound found no complete set");
}

ExactResult exact_beta(int r, int d, std::uint64_t budget) {
  check_rd(r, d);
  if (!budget) budget = default_budget();
  const int n = 1 << r;
  if (r <= kFullEnumMaxR) {
    const auto coflats = flat_masks(r, r - d);
    std::uint64_t work = 0;
    for (int size = n; size >= 0; --size) {
      auto hit = first_subset(n, size, [&](Mask s) {
        bool ok = avoids_all(s, coflats, work);
        spend_check(work, budget, "subset enumeration");
        return ok;
      });
      if (hit) {
        ExactResult res;
        res.r = r;
        res.d = d;
        res.quantity = "beta";
        res.value = size;
        res.optimal_set = to_set(r, *hit);
        res.method = ExactMethod::full_enumeration;
        res.work = work;
        return res;
      }
    }
    throw ConstructionError("the empty set should always be non-blocking");
  }
  if (r > kSearchMaxR)
    throw InfeasibleError("exact values are computed only for r <= " + std::to_string(kSearchMaxR), budget);
  if (auto cf = closed_form(r, d, "beta")) {
    if (!attains(*cf)) throw ConstructionError("closed-form set failed verification");
    return *cf;
  }
  ExactResult g = exact_gamma(r, r - d, budget);
  ExactResult res;
  res.r = r;
  res.d = d;
  res.quantity = "beta";
  res.optimal_set = g.optimal_set.complement();
  res.value = res.optimal_set.size();
  res.method = g.method;
  res.work = g.work;
  res.note = "complement of an optimal (r-d)-complete set";
  return res;
}

ExactResult exact_sum3(int r, std::uint64_t budget) {
  if (r < 2 || r > kFullEnumMaxR) throw InfeasibleError("exact_sum3 enumerates only 2 <= r <= 4", budget);
  if (!budget) budget = default_budget();
  const int n = 1 << r;
  // triples[v]: masks {a, b, c}, a < b < c, a + b + c = v
  std::vector<std::vector<Mask>> triples(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        triples[a ^ b ^ c].push_back((Mask{1} << a) | (Mask{1} << b) | (Mask{1} << c));
  std::uint64_t work = 0;
  for (int size = 3; size <= n; ++size) {
    auto hit = first_subset(n, size, [&](Mask s) {
      bool ok = covers_all(s, triples, work);
      spend_check(work, budget, "subset enumeration");
      return ok;
    });
    if (hit) {
      ExactResult res;
      res.r = r;
      res.d = 2;
      res.quantity = "sum3";
      res.value = size;
      res.optimal_set = to_set(r, *hit);
      res.method = ExactMethod::full_enumeration;
      res.work = work;
      return res;
    }
  }
  throw ConstructionError("no set with the three-sum property found");
}

bool attains(const ExactResult& res) {
  if (res.optimal_set.dim() != res.r || res.optimal_set.size() != res.value) return false;
  if (res.quantity == "gamma") return is_complete(res.optimal_set, res.d).holds;
  if (res.quantity == "beta") return is_nonblocking(res.optimal_set, res.d).holds;
  if (res.quantity == "sum3") return sum3_property(res.optimal_set);
  return false;
}

ExactCache ExactCache::load(const std::string& path) {
  ExactCache cache;
  std::ifstream in(path);
  if (!in) return cache;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("cache " + path + ": " + e.what());
  }
  if (!j.is_object() || j.value("version", 0) != 1 || !j.contains("entries"))
    throw FormatError("cache " + path + ": expected {\"version\": 1, \"entries\": [...]}");
  for (const auto& e : j["entries"]) {
    try {
      ExactResult res;
      res.r = e.at("r");
      res.d = e.at("d");
      res.quantity = e.at("quantity");
      res.value = e.at("value");
      const std::string method = e.at("method");
      res.method = method == "branch_and_bound" ? ExactMethod::branch_and_bound
                   : method == "closed_form"    ? ExactMethod::closed_form
                                                : ExactMethod::full_enumeration;
      res.note = e.value("note", "");
      std::vector<Point> pts = e.at("set").get<std::vector<Point>>();
      if (res.r < 1 || res.r > kSearchMaxR) throw FormatError("r out of range");
      for (Point p : pts)
        if (p >= (Point{1} << res.r)) throw FormatError("point out of range");
      res.optimal_set = PointSetF2::from_points(res.r, pts);
      if (!attains(res)) {
        ++cache.rejected_;
        continue;
      }
      cache.put(res);
    } catch (const std::exception&) {
      ++cache.rejected_;
    }
  }
  return cache;
}

void ExactCache::save(const std::string& path) const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, res] : entries_) {
    entries.push_back({{"r", res.r},
                       {"d", res.d},
                       {"quantity", res.quantity},
                       {"value", res.value},
                       {"method", to_string(res.method)},
                       {"note", res.note},
                       {"set", res.optimal_set.points()}});
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write cache file " + path);
  out << nlohmann::json{{"version", 1}, {"entries", entries}}.dump(1) << "\n";
}

std::optional<ExactResult> ExactCache::get(int r, int d, const std::string& quantity) const {
  auto it = entries_.find({r, d, quantity});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ExactCache::put(const ExactResult& res) { entries_[{res.r, res.d, res.quantity}] = res; }

}  // namespace flatcover
