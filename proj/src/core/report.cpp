#include "flatcover/report.hpp"

#include "flatcover/error.hpp"

#include <cmath>

namespace flatcover {

namespace {

nlohmann::json big_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) return v.convert_to<std::uint64_t>();
  return v.str();
}

nlohmann::json finite_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

nlohmann::json bound_list(const std::vector<Bound>& list) {
  nlohmann::json out = nlohmann::json::array();
  for (const Bound& b : list) {
    nlohmann::json j = {{"name", b.name},
                        {"strict", b.strict},
                        {"statement", b.statement},
                        {"log2", finite_or_null(b.log2_value)},
                        {"implied", big_json(b.implied)}};
    if (b.exact) j["exact"] = big_json(*b.exact);
    out.push_back(j);
  }
  return out;
}

}  // namespace

const char* library_version() { return "0.1.0"; }

nlohmann::json flat_json(const FlatF2& f) {
  const int r = f.ambient();
  nlohmann::json dir = nlohmann::json::array();
  for (Point b : f.direction().basis()) dir.push_back(point_to_string(b, r));
  return {{"anchor", point_to_string(f.anchor(), r)}, {"dim", f.dim()}, {"direction", dir}};
}

nlohmann::json verify_json(const VerifyReport& rep, int r) {
  nlohmann::json j = {{"property", to_string(rep.property)},
                      {"d", rep.d},
                      {"holds", rep.holds},
                      {"checked", rep.sampled ? "sampled" : "full"},
                      {"points_checked", rep.checked},
                      {"work", rep.work}};
  if (rep.sampled) j["seed"] = rep.seed;
  if (rep.counterexample) j["counterexample"] = point_to_string(*rep.counterexample, r);
  if (rep.counterexample_flat) j["counterexample_flat"] = flat_json(*rep.counterexample_flat);
  if (!rep.witnesses.empty()) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& [v, f] : rep.witnesses) w.push_back({{"point", point_to_string(v, r)}, {"flat", flat_json(f)}});
    j["witnesses"] = w;
  }
  return j;
}

nlohmann::json bounds_json(const BoundsRow& row) {
  return {{"r", row.r},
          {"d", row.d},
          {"gamma",
           {{"lower", bound_list(row.gamma_lower)},
            {"upper", bound_list(row.gamma_upper)},
            {"best", {big_json(row.best_gamma_lower()), big_json(row.best_gamma_upper())}}}},
          {"beta",
           {{"lower", bound_list(row.beta_lower)},
            {"upper", bound_list(row.beta_upper)},
            {"best", {big_json(row.best_beta_lower()), big_json(row.best_beta_upper())}}}}};
}

nlohmann::json exact_json(const ExactResult& res) {
  nlohmann::json set = nlohmann::json::array();
  for (Point p : res.optimal_set.points()) set.push_back(point_to_string(p, res.r));
  nlohmann::json j = {{"r", res.r},
                      {"d", res.d},
                      {"quantity", res.quantity},
                      {"value", res.value},
                      {"method", to_string(res.method)},
                      {"work", res.work},
                      {"optimal_set", set}};
  if (!res.note.empty()) j["note"] = res.note;
  return j;
}

nlohmann::json record_json(const ConstructionRecord& rec) {
  const BoundsRow row = bounds_row(rec.r, rec.d);
  const bool complete = rec.property == Property::complete;
  nlohmann::json tb = nlohmann::json::array();
  for (const auto& t : theorem_bounds(rec))
    tb.push_back({{"name", t.name}, {"relation", t.relation}, {"log2", finite_or_null(t.log2_value)},
                  {"satisfied", t.satisfied}});
  return {{"r", rec.r},
          {"d", rec.d},
          {"kind", to_string(rec.kind)},
          {"property", to_string(rec.property)},
          {"size", big_json(rec.size)},
          {"meta", rec.meta},
          {"bound_upper", big_json(complete ? row.best_gamma_upper() : row.best_beta_upper())},
          {"bound_lower", big_json(complete ? row.best_gamma_lower() : row.best_beta_lower())},
          {"theorem_bounds", tb}};
}

ConstructionRecord record_from_json(const nlohmann::json& j, const PointSetF2* set) {
  try {
    const int r = j.at("r"), d = j.at("d");
    const ConstructionKind kind = kind_from_string(j.at("kind").get<std::string>());
    const nlohmann::json meta = j.value("meta", nlohmann::json::object());
    switch (kind) {
      case ConstructionKind::balanced: return nonblocking_balanced(r, d);
      case ConstructionKind::prime: return nonblocking_prime(r, d);
      case ConstructionKind::multiblock: {
        std::vector<std::pair<int, int>> parts;
        for (const auto& p : meta.at("parts")) parts.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
        return nonblocking_multiblock(r, d, parts);
      }
      case ConstructionKind::simplex: return complete_simplex(r, d);
      case ConstructionKind::bch:
        if (meta.value("overridden", false)) return complete_bch(r, d, meta.at("m").get<int>(), meta.at("e").get<int>());
        return complete_bch(r, d);
      case ConstructionKind::sum3: return sum3_complete(r);
      case ConstructionKind::full: return complete_full(r, d);
      case ConstructionKind::searched: {
        if (!set) throw ParameterError("a searched record needs its set");
        const Property p = j.value("property", "complete") == std::string("complete") ? Property::complete
                                                                                        : Property::nonblocking;
        return record_from_set(*set, d, p);
      }
      case ConstructionKind::product:
      case ConstructionKind::generic_code:
        throw ParameterError(std::string("records of kind ") + to_string(kind) + " cannot be rebuilt from a sidecar");
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("record sidecar: ") + e.what());
  }
  throw FormatError("record sidecar: unknown kind");
}

nlohmann::json weights_json(const LinearCode& code, const WeightStats& w) {
  nlohmann::json dist = nlohmann::json::object();
  for (const auto& [weight, count] : w.distribution) dist[std::to_string(weight)] = count;
  return {{"n", code.length()}, {"k", code.dim()}, {"min_nonzero", w.min_nonzero}, {"max", w.max}, {"weights", dist}};
}

}  // namespace flatcover
