#pragma once

#include <nlohmann/json.hpp>

#include "urbanflow/flow_mining.hpp"
#include "urbanflow/metrics.hpp"
#include "urbanflow/providers.hpp"
#include "urbanflow/router.hpp"

namespace urbanflow {

// Wire/cache schema for provider responses and pipeline artifacts. The
// offline provider and the HTTP adapters produce identical documents.

nlohmann::ordered_json to_json(const GeoPoint& p);
GeoPoint geo_point_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const RouteStep& step);
RouteStep route_step_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const DrivingRoute& route);
DrivingRoute driving_route_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const TransitItinerary& itinerary);
TransitItinerary transit_itinerary_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const RideEstimate& estimate);
RideEstimate ride_estimate_from_json(const nlohmann::json& j);

// Route option in the report schema: label, metrics, steps.
nlohmann::ordered_json option_to_json(const RouteOption& option,
                                      const OptionMetrics& metrics);
// Reads label, metrics and steps back (provenance fields are not part of
// the wire schema).
std::pair<RouteOption, OptionMetrics> option_from_json(
    const nlohmann::json& j);

nlohmann::ordered_json flows_to_json(const std::vector<Flow>& flows,
                                     const std::vector<std::string>& flow_ids);
// Returns flows plus their ids.
std::pair<std::vector<Flow>, std::vector<std::string>> flows_from_json(
    const nlohmann::json& j);

nlohmann::ordered_json zones_to_json(const std::vector<FunctionalZone>& zones);
std::vector<FunctionalZone> zones_from_json(const nlohmann::json& j);

}  // namespace urbanflow
