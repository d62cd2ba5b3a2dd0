#pragma once

#include <json.hpp>

#include "rainbow/extremal.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {

inline constexpr const char* kSearchSchema = "rainbow.search/1";
inline constexpr const char* kWitnessSchema = "rainbow.witness/1";

// Elapsed time is deliberately not part of the record so reports are
// byte-identical across runs.
nlohmann::ordered_json to_json(const search_report& r);
search_report search_report_from_json(const nlohmann::json& j);

/// Re-derives every witness's edge count and rainbow number with the solvers.
bool recheck_search_report(const search_report& r);

nlohmann::ordered_json to_json(const graph& g, const rainbow_witness& w);
nlohmann::ordered_json to_json(const claim1_report& r);

} // namespace rainbow
