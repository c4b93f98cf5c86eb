#pragma once

// JSON forms of the library's values. Rationals are always "p/q" strings
// (integers as "p"); every top-level document carries a "schema" field.

#include <json.hpp>

#include "dyc/oracle.hpp"
#include "dyc/region.hpp"
#include "dyc/scheme.hpp"
#include "dyc/simulator.hpp"

namespace dyc::json {

using nlohmann::json;

inline constexpr const char* kRegionSchema = "dyc.region/1";
inline constexpr const char* kCheckSchema = "dyc.check/1";
inline constexpr const char* kPlanSchema = "dyc.plan/1";
inline constexpr const char* kScanSchema = "dyc.scan/1";

json to_json(const ChannelConfig& config);
json to_json(const RateTuple& rates);
json to_json(const IntRates& rates);
json to_json(const Inequality& ineq);
json to_json(const Region& region);
json to_json(const Vertex& vertex);
json to_json(const RedundancyReport& report);
json to_json(const StreamAssignment& sa);
json to_json(const LevelPlan& plan);
json to_json(const SimulationReport& report);
json to_json(const oracle::ScanReport& report);

ChannelConfig config_from_json(const json& j);
RateTuple rates_from_json(const json& j);
/// Inverse of to_json(LevelPlan). Structure only; run validate_plan on the result.
LevelPlan plan_from_json(const json& j);

}  // namespace dyc::json
