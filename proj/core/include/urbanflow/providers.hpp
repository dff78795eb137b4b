#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "urbanflow/geo.hpp"
#include "urbanflow/polyline.hpp"

namespace urbanflow {

enum class TravelMode { Walk, Transit, RideHail, Drive };

std::string to_string(TravelMode m);
TravelMode travel_mode_from_string(const std::string& s);

// One leg segment of a route option.
struct RouteStep {
  TravelMode mode = TravelMode::Walk;
  GeoPoint origin;
  GeoPoint destination;
  double duration_s = 0.0;  // in motion, wait excluded
  double distance_m = 0.0;
  double wait_s = 0.0;    // pre-departure wait (pickup ETA, headway wait)
  double price_brl = 0.0; // Walk steps carry 0
  EncodedPolyline polyline;
};

// One instruction segment of the reference driving route, with live
// congestion data.
struct DrivingStep {
  GeoPoint origin;
  GeoPoint destination;
  double distance_m = 0.0;
  double free_flow_duration_s = 0.0;
  double live_duration_s = 0.0;  // >= free_flow_duration_s
  EncodedPolyline polyline;
};

struct DrivingRoute {
  std::vector<DrivingStep> steps;  // contiguous, gaps <= 1 m
};

struct TransitItinerary {
  std::vector<RouteStep> steps;  // Walk and Transit modes only
  std::size_t boardings = 0;     // number of Transit steps
  double initial_wait_s = 0.0;
};

struct RideEstimate {
  double price_brl = 0.0;
  double pickup_wait_s = 0.0;
  double duration_s = 0.0;
  double distance_m = 0.0;
  EncodedPolyline polyline;
};

struct ProviderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoRouteError : ProviderError {
  using ProviderError::ProviderError;
};

struct ProviderUnavailableError : ProviderError {
  using ProviderError::ProviderError;
};

// Uniform contract over route sources. Implementations must be safely
// callable from multiple threads.
class RouteProvider {
 public:
  virtual ~RouteProvider() = default;

  // Reference driving route with congestion data. Throws NoRouteError when
  // origin == destination or no route exists.
  virtual DrivingRoute get_driving_way(const GeoPoint& origin,
                                       const GeoPoint& destination) const = 0;

  virtual TransitItinerary get_transit_route(
      const GeoPoint& origin, const GeoPoint& destination) const = 0;

  virtual RideEstimate get_ride_estimate(const GeoPoint& origin,
                                         const GeoPoint& destination) const = 0;

  // Straight-line walk leg; total (origin == destination yields a zero
  // step).
  virtual RouteStep get_walk_route(const GeoPoint& origin,
                                   const GeoPoint& destination) const = 0;
};

enum class ProviderKind { Offline, Http };

struct ProviderConfig {
  ProviderKind kind = ProviderKind::Offline;
  std::string driving_base_url;  // congestion-aware driving routes
  std::string transit_base_url;  // transit directions
  std::string ride_base_url;     // ride-hail estimates
  std::string driving_key_env = "URBANFLOW_TOMTOM_KEY";
  std::string transit_key_env = "URBANFLOW_GOOGLE_KEY";
  std::string ride_key_env = "URBANFLOW_UBER_TOKEN";
  double rate_limit_per_s = 5.0;
  std::string cache_dir;  // empty disables the response cache
  std::uint64_t seed = 0;
};

}  // namespace urbanflow
