#include "flatcover/flatcover.h"

#include "flatcover/bounds.hpp"
#include "flatcover/codes.hpp"
#include "flatcover/config.hpp"
#include "flatcover/constructions.hpp"
#include "flatcover/error.hpp"
#include "flatcover/exact.hpp"
#include "flatcover/flatset_io.hpp"
#include "flatcover/report.hpp"
#include "flatcover/verify.hpp"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

using namespace flatcover;

struct fc_pointset {
  PointSetF2 set;
};

struct fc_record {
  ConstructionRecord rec;
};

namespace {

thread_local std::string g_last_error;

template <class F>
fc_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const InfeasibleError& e) {
    g_last_error = std::string(e.what()) + " (budget " + std::to_string(e.budget()) + ")";
    return FC_INFEASIBLE;
  } catch (const ParameterError& e) {
    g_last_error = e.what();
    return FC_EPARAM;
  } catch (const FormatError& e) {
    g_last_error = e.what();
    return FC_EFORMAT;
  } catch (const IoError& e) {
    g_last_error = e.what();
    return FC_EIO;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return FC_EINTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FC_EINTERNAL;
  }
}

fc_status bad_arg(const char* what) {
  g_last_error = what;
  return FC_EPARAM;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fc_status emit(const nlohmann::json& j, char** out) {
  *out = dup_string(j.dump());
  return FC_OK;
}

std::vector<std::pair<int, int>> parse_parts(const std::string& s) {
  std::vector<std::pair<int, int>> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParameterError("part '" + item + "' is not of the form r_i:d_i");
    try {
      std::size_t a = 0, b = 0;
      const int ri = std::stoi(item.substr(0, colon), &a);
      const int di = std::stoi(item.substr(colon + 1), &b);
      if (a != colon || b != item.size() - colon - 1) throw std::invalid_argument("trailing");
      parts.emplace_back(ri, di);
    } catch (const std::logic_error&) {
      throw ParameterError("part '" + item + "' is not of the form r_i:d_i");
    }
  }
  if (parts.empty()) throw ParameterError("--parts needs at least one r_i:d_i");
  return parts;
}

ExactResult exact_cached(int r, int d, const std::string& q, std::uint64_t budget, const char* cache_path) {
  std::optional<ExactCache> cache;
  if (cache_path) {
    cache = ExactCache::load(cache_path);
    if (auto hit = cache->get(r, d, q)) return *hit;
  }
  ExactResult res = q == "gamma" ? exact_gamma(r, d, budget)
                    : q == "beta" ? exact_beta(r, d, budget)
                    : q == "sum3" ? exact_sum3(r, budget)
                                  : throw ParameterError("quantity must be gamma, beta or sum3");
  if (cache) {
    cache->put(res);
    cache->save(cache_path);
  }
  return res;
}

}  // namespace

extern "C" {

const char* fc_version(void) { return library_version(); }
const char* fc_last_error(void) { return g_last_error.c_str(); }
void fc_string_free(char* s) { std::free(s); }

fc_status fc_set_threads(int n) {
  return guarded([&] {
    set_thread_count(n);
    return FC_OK;
  });
}

fc_status fc_set_r_max(int r) {
  return guarded([&] {
    set_r_max(r);
    return FC_OK;
  });
}

int fc_get_r_max(void) { return r_max(); }

fc_status fc_pointset_new(int r, fc_pointset** out) {
  if (!out) return bad_arg("null output pointer");
  return guarded([&] {
    *out = new fc_pointset{PointSetF2(r)};
    return FC_OK;
  });
}

fc_status fc_pointset_from_points(int r, const uint64_t* points, size_t n, fc_pointset** out) {
  if (!out || (!points && n)) return bad_arg("null pointer");
  return guarded([&] {
    *out = new fc_pointset{PointSetF2::from_points(r, std::span<const Point>(points, n))};
    return FC_OK;
  });
}

fc_status fc_pointset_load(const char* path, fc_pointset** out) {
  if (!path || !out) return bad_arg("null pointer");
  return guarded([&] {
    *out = new fc_pointset{load_flatset(path)};
    return FC_OK;
  });
}

fc_status fc_pointset_save(const fc_pointset* s, const char* path, int hexmask) {
  if (!s || !path) return bad_arg("null pointer");
  return guarded([&] {
    save_flatset(path, s->set, hexmask ? FlatsetMode::hexmask : FlatsetMode::points);
    return FC_OK;
  });
}

int fc_pointset_dim(const fc_pointset* s) { return s ? s->set.dim() : -1; }
uint64_t fc_pointset_size(const fc_pointset* s) { return s ? s->set.size() : 0; }

int fc_pointset_contains(const fc_pointset* s, uint64_t p) {
  if (!s || p >= s->set.universe()) return 0;
  return s->set.contains(p) ? 1 : 0;
}

fc_status fc_pointset_insert(fc_pointset* s, uint64_t p) {
  if (!s) return bad_arg("null pointer");
  return guarded([&] {
    s->set.insert(p);
    return FC_OK;
  });
}

fc_status fc_pointset_erase(fc_pointset* s, uint64_t p) {
  if (!s) return bad_arg("null pointer");
  return guarded([&] {
    s->set.erase(p);
    return FC_OK;
  });
}

fc_status fc_pointset_points(const fc_pointset* s, uint64_t* buf, size_t cap, size_t* n) {
  if (!s || !n || (!buf && cap)) return bad_arg("null pointer");
  return guarded([&] {
    const auto pts = s->set.points();
    *n = pts.size();
    for (size_t i = 0; i < pts.size() && i < cap; ++i) buf[i] = pts[i];
    return FC_OK;
  });
}

void fc_pointset_free(fc_pointset* s) { delete s; }

fc_status fc_construct(const char* method, int r, int d, const char* parts, int m, int e, fc_record** out) {
  if (!method || !out) return bad_arg("null pointer");
  return guarded([&] {
    const std::string k = method;
    ConstructionRecord rec;
    if (k == "balanced")
      rec = nonblocking_balanced(r, d);
    else if (k == "prime")
      rec = nonblocking_prime(r, d);
    else if (k == "multiblock") {
      if (!parts) throw ParameterError("multiblock needs --parts r1:d1,...");
      rec = nonblocking_multiblock(r, d, parse_parts(parts));
    } else if (k == "rk")
      rec = nonblocking_rk(r, d);
    else if (k == "simplex")
      rec = complete_simplex(r, d);
    else if (k == "bch")
      rec = complete_bch(r, d, m ? std::optional<int>(m) : std::nullopt, e ? std::optional<int>(e) : std::nullopt);
    else if (k == "sum3") {
      if (d != 2) throw ParameterError("sum3 builds 2-complete sets; pass d = 2");
      rec = sum3_complete(r);
    } else if (k == "full")
      rec = complete_full(r, d);
    else
      throw ParameterError("unknown method '" + k + "'");
    *out = new fc_record{std::move(rec)};
    return FC_OK;
  });
}

fc_status fc_record_from_json(const char* sidecar, const fc_pointset* set, fc_record** out) {
  if (!sidecar || !out) return bad_arg("null pointer");
  return guarded([&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(sidecar);
    } catch (const nlohmann::json::exception& ex) {
      throw FormatError(std::string("record sidecar: ") + ex.what());
    }
    *out = new fc_record{record_from_json(j, set ? &set->set : nullptr)};
    return FC_OK;
  });
}

fc_status fc_record_json(const fc_record* rec, char** json) {
  if (!rec || !json) return bad_arg("null pointer");
  return guarded([&] { return emit(record_json(rec->rec), json); });
}

fc_status fc_record_set(const fc_record* rec, fc_pointset** out) {
  if (!rec || !out) return bad_arg("null pointer");
  return guarded([&] {
    *out = new fc_pointset{rec->rec.materialize()};
    return FC_OK;
  });
}

fc_status fc_record_check(const fc_record* rec, const fc_pointset* against, uint64_t samples, uint64_t seed,
                          char** report_json) {
  if (!rec) return bad_arg("null pointer");
  return guarded([&] {
    VerifyOptions opts;
    if (samples) {
      opts.samples = samples;
      opts.force_sample = true;
    }
    opts.seed = seed;
    VerifyReport rep = check_witnesses(rec->rec, against ? &against->set : nullptr, opts);
    if (report_json) emit(verify_json(rep, rec->rec.r), report_json);
    return rep.holds ? FC_OK : FC_FAILS;
  });
}

void fc_record_free(fc_record* rec) { delete rec; }

fc_status fc_verify(const fc_pointset* s, int d, const char* mode, const char* method, uint64_t budget,
                    char** report_json) {
  if (!s || !mode) return bad_arg("null pointer");
  return guarded([&] {
    const std::string md = mode, meth = method ? method : "search";
    if (md != "complete" && md != "nonblocking") throw ParameterError("mode must be complete or nonblocking");
    VerifyOptions opts;
    opts.budget = budget;
    VerifyReport rep;
    if (meth == "enumerate") {
      rep.property = md == "complete" ? Property::complete : Property::nonblocking;
      rep.d = d;
      rep.holds = md == "complete" ? is_complete_enumerative(s->set, d) : is_nonblocking_enumerative(s->set, d);
      rep.checked = s->set.universe();
    } else if (md == "complete") {
      if (meth != "search") throw ParameterError("complete mode supports search or enumerate");
      rep = is_complete(s->set, d, opts);
    } else if (meth == "search") {
      rep = is_nonblocking(s->set, d, NonblockingMode::automatic, opts);
    } else if (meth == "duality") {
      rep = is_nonblocking(s->set, d, NonblockingMode::duality, opts);
    } else if (meth == "direct") {
      rep = is_nonblocking(s->set, d, NonblockingMode::direct, opts);
    } else {
      throw ParameterError("unknown verification method '" + meth + "'");
    }
    if (report_json) emit(verify_json(rep, s->set.dim()), report_json);
    return rep.holds ? FC_OK : FC_FAILS;
  });
}

fc_status fc_exact(int r, int d, const char* quantity, uint64_t budget, const char* cache_path, char** json) {
  if (!quantity || !json) return bad_arg("null pointer");
  return guarded([&] { return emit(exact_json(exact_cached(r, d, quantity, budget, cache_path)), json); });
}

fc_status fc_bounds(int r, int d, char** json) {
  if (!json) return bad_arg("null pointer");
  return guarded([&] {
    nlohmann::json j = bounds_json(bounds_row(r, d));
    BetaLowerFormulas f = beta_lower_formulas(r, d);
    if (f.main_term_holds) j["main_term_holds"] = *f.main_term_holds;
    if (d >= 1 && 2 * d <= r) j["binomial_sandwich_holds"] = binomial_sandwich_check(r, d);
    if (f.multiblock_best) {
      nlohmann::json parts = nlohmann::json::array();
      for (auto [ri, di] : f.multiblock_best->parts) parts.push_back({ri, di});
      j["multiblock_parts"] = parts;
    }
    if (f.rk_triple) j["rk"] = {{"k", f.rk_triple->first}, {"d1", f.rk_triple->second.first}, {"r1", f.rk_triple->second.second}};
    j["omitted"] = f.omitted;
    return emit(j, json);
  });
}

fc_status fc_table(int r_lo, int r_hi, int exact_max_r, uint64_t budget, const char* cache_path, char** json) {
  if (!json) return bad_arg("null pointer");
  return guarded([&] {
    if (r_lo < 1 || r_hi < r_lo || r_hi > 200) throw ParameterError("table needs 1 <= r_lo <= r_hi <= 200");
    nlohmann::json rows = nlohmann::json::array();
    for (int r = r_lo; r <= r_hi; ++r)
      for (int d = 0; d <= r; ++d) {
        const BoundsRow b = bounds_row(r, d);
        nlohmann::json row = {{"r", r},
                              {"d", d},
                              {"gamma_lower", b.best_gamma_lower().str()},
                              {"gamma_upper", b.best_gamma_upper().str()},
                              {"beta_lower", b.best_beta_lower().str()},
                              {"beta_upper", b.best_beta_upper().str()}};
        if (r <= exact_max_r) {
          for (const char* q : {"gamma", "beta"}) {
            try {
              ExactResult res = exact_cached(r, d, q, budget, cache_path);
              row[std::string(q) + "_exact"] = res.value;
              nlohmann::json set = nlohmann::json::array();
              for (Point p : res.optimal_set.points()) set.push_back(point_to_string(p, r));
              row[std::string(q) + "_set"] = set;
              row[std::string(q) + "_method"] = to_string(res.method);
            } catch (const InfeasibleError&) {
              row[std::string(q) + "_exact"] = nullptr;
            }
          }
        }
        rows.push_back(row);
      }
    return emit(rows, json);
  });
}

fc_status fc_compare_lower(int r_limit, char** json) {
  if (!json) return bad_arg("null pointer");
  return guarded([&] {
    ComparisonTable t = compare_balanced_prime(r_limit);
    auto list = [](const std::vector<ComparisonEntry>& v) {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& e : v) a.push_back({{"r", e.r}, {"d", e.d}, {"balanced", e.balanced.str()}, {"prime", e.prime.str()}});
      return a;
    };
    return emit({{"r_limit", r_limit}, {"pairs_checked", t.pairs_checked}, {"prime_wins", list(t.prime_wins)},
                 {"ties", list(t.ties)}},
                json);
  });
}

fc_status fc_code_weights(const char* family, int a, int b, char** json) {
  if (!family || !json) return bad_arg("null pointer");
  return guarded([&] {
    const std::string f = family;
    if (f == "simplex") {
      LinearCode c = simplex_code(a);
      return emit(weights_json(c, weight_stats(c)), json);
    }
    if (f == "dual-bch") {
      LinearCode c = dual_bch(a, b);
      WeightStats w = weight_stats(c);
      nlohmann::json j = weights_json(c, w);
      j["carlitz_uchiyama"] = carlitz_uchiyama_check(w, a, b);
      j["dimension_condition"] = dual_bch_dimension_condition(a, b);
      return emit(j, json);
    }
    throw ParameterError("family must be simplex or dual-bch");
  });
}

}  // extern "C"
