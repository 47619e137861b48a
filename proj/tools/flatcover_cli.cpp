// flatcover command-line front end. Talks to the library only through the C API.

#include "flatcover/flatcover.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::json;

constexpr const char* kSchema = "flatcover.report/v1";
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitInternal = 70;

struct PointsetDeleter {
  void operator()(fc_pointset* p) const { fc_pointset_free(p); }
};
struct RecordDeleter {
  void operator()(fc_record* p) const { fc_record_free(p); }
};
using PointsetPtr = std::unique_ptr<fc_pointset, PointsetDeleter>;
using RecordPtr = std::unique_ptr<fc_record, RecordDeleter>;

// Takes ownership of a C string from the library.
json take_json(char* s) {
  if (!s) return nullptr;
  json j = json::parse(s);
  fc_string_free(s);
  return j;
}

int exit_code(fc_status st) {
  switch (st) {
    case FC_OK: return 0;
    case FC_FAILS: return 1;
    case FC_INFEASIBLE: return 2;
    case FC_EPARAM: return kExitUsage;
    case FC_EFORMAT: return kExitData;
    case FC_EIO: return kExitNoInput;
    default: return kExitInternal;
  }
}

int fail(fc_status st) {
  std::cerr << "flatcover: " << fc_last_error() << "\n";
  return exit_code(st);
}

struct Run {
  std::string command;
  json args = json::object();
  std::uint64_t seed = 0xF1A7;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void print(const json& result) const {
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    json report = {{"schema", kSchema}, {"command", command}, {"args", args}, {"version", fc_version()},
                   {"seed", seed},      {"wall_ms", ms},      {"result", result}};
    std::cout << report.dump(2) << "\n";
  }
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flatcover: complete and non-blocking sets in F_2^r"};
  app.require_subcommand(1);
  int threads = 0;
  int rmax = 0;
  app.add_option("--threads", threads, "worker threads (0 = all cores)");
  app.add_option("--r-max", rmax, "largest dimension whose sets may be materialized");

  // construct
  auto* construct = app.add_subcommand("construct", "build a set and its JSON sidecar");
  std::string method, parts, out;
  int c_r = 0, c_d = 0, c_m = 0, c_e = 0;
  bool hexmask = false;
  construct->add_option("--method", method, "balanced|prime|multiblock|rk|simplex|bch|sum3|full")->required();
  construct->add_option("--r", c_r)->required();
  construct->add_option("--d", c_d)->required();
  construct->add_option("--parts", parts, "r1:d1,r2:d2,... for multiblock");
  construct->add_option("--m", c_m, "dual-BCH field degree override");
  construct->add_option("--e", c_e, "dual-BCH design parameter override");
  construct->add_option("--out", out, "flatset file; the sidecar goes to <out>.json")->required();
  construct->add_flag("--hexmask", hexmask, "write the characteristic mask instead of point lines");

  // verify
  auto* verify = app.add_subcommand("verify", "decide completeness / non-blocking");
  std::string v_set, v_mode = "complete", v_witness, v_method = "search";
  int v_d = 0;
  bool v_exhaustive = false;
  std::uint64_t v_sample = 0, v_budget = 0, v_seed = 0xF1A7;
  verify->add_option("--set", v_set, "flatset file; optional with --witness");
  verify->add_option("--d", v_d)->required();
  verify->add_option("--mode", v_mode)->check(CLI::IsMember({"complete", "nonblocking"}));
  verify->add_flag("--exhaustive", v_exhaustive, "decide every point by search (default without --witness)");
  verify->add_option("--sample", v_sample, "witness check on N seeded random points");
  verify->add_option("--witness", v_witness, "construction sidecar whose witness flats are checked");
  verify->add_option("--method", v_method, "search|duality|direct|enumerate")
      ->check(CLI::IsMember({"search", "duality", "direct", "enumerate"}));
  verify->add_option("--seed", v_seed);
  verify->add_option("--budget", v_budget);

  // exact
  auto* exact = app.add_subcommand("exact", "exact gamma_r(d) / beta_r(d) for small r");
  int x_r = 0, x_d = 0;
  std::string quantity = "gamma", x_cache;
  std::uint64_t x_budget = 0;
  exact->add_option("--r", x_r)->required();
  exact->add_option("--d", x_d)->required();
  exact->add_option("--quantity", quantity)->check(CLI::IsMember({"gamma", "beta", "sum3"}));
  exact->add_option("--budget", x_budget);
  exact->add_option("--cache", x_cache, "exact-cache.json path");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "every closed-form bound at (r, d)");
  int b_r = 0, b_d = 0;
  bool b_json = false;
  bounds->add_option("--r", b_r)->required();
  bounds->add_option("--d", b_d)->required();
  bounds->add_flag("--json", b_json);

  // table
  auto* table = app.add_subcommand("table", "bounds and exact values over a range of r");
  std::string t_range = "2:5", t_format = "md", t_cache;
  int t_exact_max = 4, t_compare = 0;
  std::uint64_t t_budget = 0;
  table->add_option("--r", t_range, "lo:hi");
  table->add_option("--format", t_format)->check(CLI::IsMember({"md", "json", "csv"}));
  table->add_option("--exact-max", t_exact_max, "largest r given exact values");
  table->add_option("--budget", t_budget);
  table->add_option("--cache", t_cache);
  table->add_option("--compare-lower", t_compare, "list pairs up to this r where the product formula wins");

  // code
  auto* code = app.add_subcommand("code", "weight distribution of a code");
  std::string family;
  int k_d = 0, k_m = 0, k_e = 0;
  code->add_option("--family", family)->required()->check(CLI::IsMember({"simplex", "dual-bch"}));
  code->add_option("--d", k_d, "simplex dimension");
  code->add_option("--m", k_m);
  code->add_option("--e", k_e);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (threads && fc_set_threads(threads) != FC_OK) return fail(FC_EPARAM);
  if (rmax && fc_set_r_max(rmax) != FC_OK) return fail(FC_EPARAM);

  Run run;
  try {
    if (*construct) {
      run.command = "construct";
      run.args = {{"method", method}, {"r", c_r}, {"d", c_d}, {"out", out}, {"hexmask", hexmask}};
      if (!parts.empty()) run.args["parts"] = parts;
      if (c_m) run.args["m"] = c_m;
      if (c_e) run.args["e"] = c_e;
      fc_record* raw = nullptr;
      fc_status st = fc_construct(method.c_str(), c_r, c_d, parts.empty() ? nullptr : parts.c_str(), c_m, c_e, &raw);
      if (st != FC_OK) return fail(st);
      RecordPtr rec(raw);
      // above r_max only the sidecar is written; verify it with --witness alone
      const bool materialize = c_r <= fc_get_r_max();
      if (materialize) {
        fc_pointset* sraw = nullptr;
        if ((st = fc_record_set(rec.get(), &sraw)) != FC_OK) return fail(st);
        PointsetPtr set(sraw);
        if ((st = fc_pointset_save(set.get(), out.c_str(), hexmask)) != FC_OK) return fail(st);
      }
      char* js = nullptr;
      if ((st = fc_record_json(rec.get(), &js)) != FC_OK) return fail(st);
      json sidecar = take_json(js);
      std::ofstream side(out + ".json");
      if (!side) {
        std::cerr << "flatcover: cannot write " << out << ".json\n";
        return kExitNoInput;
      }
      side << sidecar.dump(2) << "\n";
      run.print({{"flatset", materialize ? json(out) : json(nullptr)}, {"sidecar", out + ".json"}, {"record", sidecar}});
      return 0;
    }

    if (*verify) {
      run.command = "verify";
      run.seed = v_seed;
      run.args = {{"d", v_d}, {"mode", v_mode}};
      if (v_set.empty() && v_witness.empty()) {
        std::cerr << "flatcover: verify needs --set, --witness or both\n";
        return kExitUsage;
      }
      fc_status st = FC_OK;
      PointsetPtr set;
      if (!v_set.empty()) {
        run.args["set"] = v_set;
        fc_pointset* sraw = nullptr;
        if ((st = fc_pointset_load(v_set.c_str(), &sraw)) != FC_OK) return fail(st);
        set.reset(sraw);
      }
      char* js = nullptr;
      if (!v_witness.empty()) {
        run.args["witness"] = v_witness;
        if (v_sample) run.args["sample"] = v_sample;
        const std::string text = slurp(v_witness);
        fc_record* raw = nullptr;
        if ((st = fc_record_from_json(text.c_str(), set.get(), &raw)) != FC_OK) return fail(st);
        RecordPtr rec(raw);
        json side = json::parse(text);
        if (side.value("d", -1) != v_d || side.value("property", v_mode) != v_mode) {
          std::cerr << "flatcover: --d/--mode disagree with the witness record\n";
          return kExitUsage;
        }
        st = fc_record_check(rec.get(), set.get(), v_sample, v_seed, &js);
      } else {
        if (v_sample) {
          std::cerr << "flatcover: --sample applies to witness checks; pass --witness\n";
          return kExitUsage;
        }
        run.args["method"] = v_method;
        if (v_exhaustive) run.args["exhaustive"] = true;
        st = fc_verify(set.get(), v_d, v_mode.c_str(), v_method.c_str(), v_budget, &js);
      }
      if (st != FC_OK && st != FC_FAILS) return fail(st);
      run.print(take_json(js));
      return exit_code(st);
    }

    if (*exact) {
      run.command = "exact";
      run.args = {{"r", x_r}, {"d", x_d}, {"quantity", quantity}};
      if (x_budget) run.args["budget"] = x_budget;
      char* js = nullptr;
      fc_status st = fc_exact(x_r, x_d, quantity.c_str(), x_budget, x_cache.empty() ? nullptr : x_cache.c_str(), &js);
      if (st != FC_OK) return fail(st);
      run.print(take_json(js));
      return 0;
    }

    if (*bounds) {
      run.command = "bounds";
      run.args = {{"r", b_r}, {"d", b_d}};
      char* js = nullptr;
      fc_status st = fc_bounds(b_r, b_d, &js);
      if (st != FC_OK) return fail(st);
      json j = take_json(js);
      if (b_json) {
        run.print(j);
        return 0;
      }
      std::cout << "r = " << b_r << ", d = " << b_d << "\n";
      for (const char* q : {"gamma", "beta"}) {
        for (const char* side : {"lower", "upper"}) {
          for (const auto& b : j[q][side]) {
            std::cout << "  " << q << " " << side << "  " << b["name"].get<std::string>() << ": "
                      << (std::string(side) == "lower" ? (b["strict"].get<bool>() ? ">" : ">=")
                                                       : (b["strict"].get<bool>() ? "<" : "<="))
                      << " " << b["statement"].get<std::string>() << "  => " << cell(b["implied"]) << "\n";
          }
        }
        std::cout << "  " << q << " in [" << cell(j[q]["best"][0]) << ", " << cell(j[q]["best"][1]) << "]\n";
      }
      return 0;
    }

    if (*table) {
      run.command = "table";
      char* js = nullptr;
      if (t_compare) {
        run.args = {{"compare_lower", t_compare}};
        fc_status st = fc_compare_lower(t_compare, &js);
        if (st != FC_OK) return fail(st);
        json j = take_json(js);
        if (t_format == "json") {
          run.print(j);
        } else {
          const char* sep = t_format == "csv" ? "," : " | ";
          if (t_format == "md") std::cout << "| r | d | double sum | product |\n|---|---|---|---|\n";
          else std::cout << "r,d,balanced,prime\n";
          for (const auto& e : j["prime_wins"]) {
            if (t_format == "md") std::cout << "| ";
            std::cout << e["r"] << sep << e["d"] << sep << cell(e["balanced"]) << sep << cell(e["prime"]);
            std::cout << (t_format == "md" ? " |\n" : "\n");
          }
        }
        return 0;
      }
      const auto colon = t_range.find(':');
      int lo = 0, hi = 0;
      try {
        lo = std::stoi(t_range.substr(0, colon));
        hi = colon == std::string::npos ? lo : std::stoi(t_range.substr(colon + 1));
      } catch (const std::exception&) {
        std::cerr << "flatcover: --r expects lo:hi\n";
        return kExitUsage;
      }
      run.args = {{"r", t_range}, {"exact_max", t_exact_max}, {"format", t_format}};
      fc_status st = fc_table(lo, hi, t_exact_max, t_budget, t_cache.empty() ? nullptr : t_cache.c_str(), &js);
      if (st != FC_OK) return fail(st);
      json rows = take_json(js);
      if (t_format == "json") {
        run.print(rows);
        return 0;
      }
      const bool md = t_format == "md";
      if (md)
        std::cout << "| r | d | gamma | gamma bracket | beta | beta bracket | gamma set |\n"
                     "|---|---|---|---|---|---|---|\n";
      else
        std::cout << "r,d,gamma,gamma_lower,gamma_upper,beta,beta_lower,beta_upper\n";
      for (const auto& row : rows) {
        const std::string g = row.contains("gamma_exact") ? cell(row["gamma_exact"]) : "";
        const std::string b = row.contains("beta_exact") ? cell(row["beta_exact"]) : "";
        if (md) {
          std::string set;
          if (row.contains("gamma_set"))
            for (const auto& p : row["gamma_set"]) set += (set.empty() ? "" : " ") + p.get<std::string>();
          std::cout << "| " << row["r"] << " | " << row["d"] << " | " << g << " | [" << cell(row["gamma_lower"])
                    << ", " << cell(row["gamma_upper"]) << "] | " << b << " | [" << cell(row["beta_lower"]) << ", "
                    << cell(row["beta_upper"]) << "] | " << set << " |\n";
        } else {
          std::cout << row["r"] << "," << row["d"] << "," << g << "," << cell(row["gamma_lower"]) << ","
                    << cell(row["gamma_upper"]) << "," << b << "," << cell(row["beta_lower"]) << ","
                    << cell(row["beta_upper"]) << "\n";
        }
      }
      return 0;
    }

    if (*code) {
      run.command = "code";
      run.args = {{"family", family}};
      int a = 0, b = 0;
      if (family == "simplex") {
        a = k_d;
        run.args["d"] = k_d;
      } else {
        a = k_m;
        b = k_e;
        run.args["m"] = k_m;
        run.args["e"] = k_e;
      }
      char* js = nullptr;
      fc_status st = fc_code_weights(family.c_str(), a, b, &js);
      if (st != FC_OK) return fail(st);
      run.print(take_json(js));
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "flatcover: " << e.what() << "\n";
    return kExitNoInput;
  } catch (const std::exception& e) {
    std::cerr << "flatcover: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
