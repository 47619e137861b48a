#pragma once

// JSON views of results.

#include "flatcover/bounds.hpp"
#include "flatcover/codes.hpp"
#include "flatcover/constructions.hpp"
#include "flatcover/exact.hpp"
#include "flatcover/verify.hpp"

#include <json.hpp>

#include <string>

namespace flatcover {

const char* library_version();

nlohmann::json flat_json(const FlatF2& f);
nlohmann::json verify_json(const VerifyReport& rep, int r);
nlohmann::json bounds_json(const BoundsRow& row);
nlohmann::json exact_json(const ExactResult& res);
// The construction sidecar: {r, d, kind, property, size, meta, bound_upper, bound_lower, theorem_bounds}.
nlohmann::json record_json(const ConstructionRecord& rec);
// Rebuilds a construction from its sidecar. A "searched" sidecar needs the
// set itself, whose witnesses are then found by search.
ConstructionRecord record_from_json(const nlohmann::json& sidecar, const PointSetF2* set = nullptr);
nlohmann::json weights_json(const LinearCode& code, const WeightStats& w);

}  // namespace flatcover
