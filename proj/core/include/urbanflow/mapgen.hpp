#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "urbanflow/flow_mining.hpp"
#include "urbanflow/router.hpp"

namespace urbanflow {

struct MapConfig {
  GeoPoint center{-23.551615, -46.633611};
  int zoom = 12;
  int edge_width = 3;
  std::map<TravelMode, std::string> mode_colors = {
      {TravelMode::Transit, "red"},
      {TravelMode::Walk, "green"},
      {TravelMode::RideHail, "blue"},
      {TravelMode::Drive, "gray"},
  };
};

struct PolylineDecodeError : std::runtime_error {
  explicit PolylineDecodeError(std::size_t step_index)
      : std::runtime_error("step " + std::to_string(step_index) +
                           " has an undecodable polyline"),
        step_index(step_index) {}
  std::size_t step_index;
};

std::string color_for_mode(TravelMode mode, const MapConfig& cfg);

// Self-contained interactive HTML map with one colored path per step.
// Output text is deterministic for identical inputs.
std::string render_map(const RouteOption& route, const MapConfig& cfg);

// Overview map: one straight line per flow between zone centroids, trend
// flows highlighted, line width scaled by volume.
std::string render_flow_overview(const std::vector<Flow>& flows,
                                 const MapConfig& cfg);

}  // namespace urbanflow
