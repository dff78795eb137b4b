#include "urbanflow/json_io.hpp"

namespace urbanflow {

nlohmann::ordered_json to_json(const GeoPoint& p) {
  nlohmann::ordered_json j;
  j["lat"] = p.lat;
  j["lon"] = p.lon;
  return j;
}

GeoPoint geo_point_from_json(const nlohmann::json& j) {
  return GeoPoint{j.at("lat").get<double>(), j.at("lon").get<double>()};
}

nlohmann::ordered_json to_json(const RouteStep& step) {
  nlohmann::ordered_json j;
  j["mode"] = to_string(step.mode);
  j["o"] = to_json(step.origin);
  j["d"] = to_json(step.destination);
  j["duration_s"] = step.duration_s;
  j["distance_m"] = step.distance_m;
  j["wait_s"] = step.wait_s;
  j["price_brl"] = step.price_brl;
  j["polyline"] = step.polyline.text();
  return j;
}

RouteStep route_step_from_json(const nlohmann::json& j) {
  RouteStep step;
  step.mode = travel_mode_from_string(j.at("mode").get<std::string>());
  step.origin = geo_point_from_json(j.at("o"));
  step.destination = geo_point_from_json(j.at("d"));
  step.duration_s = j.at("duration_s").get<double>();
  step.distance_m = j.at("distance_m").get<double>();
  step.wait_s = j.value("wait_s", 0.0);
  step.price_brl = j.value("price_brl", 0.0);
  step.polyline = EncodedPolyline{j.at("polyline").get<std::string>()};
  return step;
}

nlohmann::ordered_json to_json(const DrivingRoute& route) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& s : route.steps) {
    nlohmann::ordered_json j;
    j["o"] = to_json(s.origin);
    j["d"] = to_json(s.destination);
    j["distance_m"] = s.distance_m;
    j["free_flow_duration_s"] = s.free_flow_duration_s;
    j["live_duration_s"] = s.live_duration_s;
    j["polyline"] = s.polyline.text();
    steps.push_back(std::move(j));
  }
  nlohmann::ordered_json j;
  j["steps"] = std::move(steps);
  return j;
}

DrivingRoute driving_route_from_json(const nlohmann::json& j) {
  DrivingRoute route;
  for (const auto& sj : j.at("steps")) {
    DrivingStep s;
    s.origin = geo_point_from_json(sj.at("o"));
    s.destination = geo_point_from_json(sj.at("d"));
    s.distance_m = sj.at("distance_m").get<double>();
    s.free_flow_duration_s = sj.at("free_flow_duration_s").get<double>();
    s.live_duration_s = sj.at("live_duration_s").get<double>();
    s.polyline = EncodedPolyline{sj.at("polyline").get<std::string>()};
    route.steps.push_back(std::move(s));
  }
  return route;
}

nlohmann::ordered_json to_json(const TransitItinerary& itinerary) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& s : itinerary.steps) {
    steps.push_back(to_json(s));
  }
  nlohmann::ordered_json j;
  j["steps"] = std::move(steps);
  j["boardings"] = itinerary.boardings;
  j["initial_wait_s"] = itinerary.initial_wait_s;
  return j;
}

TransitItinerary transit_itinerary_from_json(const nlohmann::json& j) {
  TransitItinerary it;
  for (const auto& sj : j.at("steps")) {
    it.steps.push_back(route_step_from_json(sj));
  }
  it.boardings = j.at("boardings").get<std::size_t>();
  it.initial_wait_s = j.at("initial_wait_s").get<double>();
  return it;
}

nlohmann::ordered_json to_json(const RideEstimate& estimate) {
  nlohmann::ordered_json j;
  j["price_brl"] = estimate.price_brl;
  j["pickup_wait_s"] = estimate.pickup_wait_s;
  j["duration_s"] = estimate.duration_s;
  j["distance_m"] = estimate.distance_m;
  j["polyline"] = estimate.polyline.text();
  return j;
}

RideEstimate ride_estimate_from_json(const nlohmann::json& j) {
  RideEstimate est;
  est.price_brl = j.at("price_brl").get<double>();
  est.pickup_wait_s = j.at("pickup_wait_s").get<double>();
  est.duration_s = j.at("duration_s").get<double>();
  est.distance_m = j.at("distance_m").get<double>();
  est.polyline = EncodedPolyline{j.at("polyline").get<std::string>()};
  return est;
}

nlohmann::ordered_json option_to_json(const RouteOption& option,
                                      const OptionMetrics& metrics) {
  nlohmann::ordered_json j;
  j["label"] = to_string(option.label);
  nlohmann::ordered_json m;
  m["price"] = metrics.price_brl;
  m["duration_s"] = metrics.duration_s;
  m["wait_s"] = metrics.wait_s;
  m["distance_m"] = metrics.distance_m;
  m["walk_distance_m"] = metrics.walk_distance_m;
  j["metrics"] = std::move(m);
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& step : option.steps) {
    nlohmann::ordered_json sj;
    sj["mode"] = to_string(step.mode);
    sj["o"] = to_json(step.origin);
    sj["d"] = to_json(step.destination);
    sj["duration_s"] = step.duration_s;
    sj["distance_m"] = step.distance_m;
    sj["polyline"] = step.polyline.text();
    steps.push_back(std::move(sj));
  }
  j["steps"] = std::move(steps);
  return j;
}

std::pair<RouteOption, OptionMetrics> option_from_json(
    const nlohmann::json& j) {
  RouteOption option;
  option.label = option_label_from_string(j.at("label").get<std::string>());
  OptionMetrics metrics;
  const auto& m = j.at("metrics");
  metrics.price_brl = m.at("price").get<double>();
  metrics.duration_s = m.at("duration_s").get<double>();
  metrics.wait_s = m.at("wait_s").get<double>();
  metrics.distance_m = m.at("distance_m").get<double>();
  metrics.walk_distance_m = m.at("walk_distance_m").get<double>();
  for (const auto& sj : j.at("steps")) {
    RouteStep step;
    step.mode = travel_mode_from_string(sj.at("mode").get<std::string>());
    step.origin = geo_point_from_json(sj.at("o"));
    step.destination = geo_point_from_json(sj.at("d"));
    step.duration_s = sj.at("duration_s").get<double>();
    step.distance_m = sj.at("distance_m").get<double>();
    step.polyline = EncodedPolyline{sj.at("polyline").get<std::string>()};
    option.steps.push_back(std::move(step));
  }
  return {std::move(option), metrics};
}

nlohmann::ordered_json flows_to_json(const std::vector<Flow>& flows,
                                     const std::vector<std::string>& flow_ids) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < flows.size(); ++i) {
    const auto& f = flows[i];
    nlohmann::ordered_json j;
    j["flow_id"] = flow_ids[i];
    j["origin_zone"] = f.origin_zone;
    j["dest_zone"] = f.dest_zone;
    j["trip_count"] = f.trip_count;
    j["classification"] = to_string(f.classification);
    j["representative_origin"] = to_json(f.representative_origin);
    j["representative_dest"] = to_json(f.representative_dest);
    arr.push_back(std::move(j));
  }
  return arr;
}

std::pair<std::vector<Flow>, std::vector<std::string>> flows_from_json(
    const nlohmann::json& j) {
  std::vector<Flow> flows;
  std::vector<std::string> ids;
  for (const auto& fj : j) {
    Flow f;
    f.origin_zone = fj.at("origin_zone").get<int>();
    f.dest_zone = fj.at("dest_zone").get<int>();
    f.trip_count = fj.at("trip_count").get<std::size_t>();
    f.classification = fj.at("classification").get<std::string>() == "Trend"
                           ? FlowClass::Trend
                           : FlowClass::Secondary;
    f.representative_origin = geo_point_from_json(fj.at("representative_origin"));
    f.representative_dest = geo_point_from_json(fj.at("representative_dest"));
    flows.push_back(f);
    ids.push_back(fj.value("flow_id", "flow_" + std::to_string(ids.size() + 1)));
  }
  return {std::move(flows), std::move(ids)};
}

nlohmann::ordered_json zones_to_json(const std::vector<FunctionalZone>& zones) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& z : zones) {
    nlohmann::ordered_json j;
    j["zone_id"] = z.zone_id;
    j["centroid"] = to_json(z.centroid);
    j["member_count"] = z.member_count;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<FunctionalZone> zones_from_json(const nlohmann::json& j) {
  std::vector<FunctionalZone> zones;
  for (const auto& zj : j) {
    FunctionalZone z;
    z.zone_id = zj.at("zone_id").get<int>();
    z.centroid = geo_point_from_json(zj.at("centroid"));
    z.member_count = zj.at("member_count").get<std::size_t>();
    zones.push_back(z);
  }
  return zones;
}

}  // namespace urbanflow
