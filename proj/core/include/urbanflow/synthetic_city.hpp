#pragma once

#include <cstdint>

#include "urbanflow/providers.hpp"

namespace urbanflow {

// Parameters of the deterministic grid city served by the offline provider.
// Every returned route is a pure function of (inputs, seed).
struct SyntheticCityConfig {
  std::uint64_t seed = 0;
  int rows = 40;
  int cols = 40;
  double edge_m = 250.0;
  // Grid is centered here; defaults to the Sao Paulo map center.
  GeoPoint center{-23.551615, -46.633611};
  double free_flow_kmh = 40.0;
  double transit_kmh = 30.0;
  double walk_kmh = 5.0;
  double headway_s = 600.0;  // fixed; boarding wait is headway / 2
  // Transit lines run along every line_spacing-th row and column, offset so
  // they avoid the grid border.
  int line_spacing = 5;
  int line_offset = 2;
  double ride_base_brl = 5.00;
  double ride_per_km_brl = 1.40;
  double ride_per_min_brl = 0.26;
  // Fraction of edges whose live time is at least 1.5x free flow.
  double congested_fraction = 0.25;
};

// Offline tariff: base fare plus distance and time components.
double ride_price(const SyntheticCityConfig& cfg, double distance_m,
                  double duration_s);

class SyntheticCityProvider : public RouteProvider {
 public:
  explicit SyntheticCityProvider(SyntheticCityConfig cfg = {});

  DrivingRoute get_driving_way(const GeoPoint& origin,
                               const GeoPoint& destination) const override;
  TransitItinerary get_transit_route(const GeoPoint& origin,
                                     const GeoPoint& destination) const override;
  RideEstimate get_ride_estimate(const GeoPoint& origin,
                                 const GeoPoint& destination) const override;
  RouteStep get_walk_route(const GeoPoint& origin,
                           const GeoPoint& destination) const override;

  const SyntheticCityConfig& config() const { return cfg_; }

  // Grid geometry, exposed for fixture generation and tests.
  GeoPoint node_coord(int col, int row) const;
  bool in_bounds(const GeoPoint& p) const;
  // Live/free-flow multiplier of the undirected edge between two adjacent
  // nodes, frozen per seed.
  double edge_multiplier(int node_a, int node_b) const;
  bool is_transit_line_col(int col) const;
  bool is_transit_line_row(int row) const;

 private:
  int node_id(int col, int row) const { return row * cfg_.cols + col; }
  int snap_node(const GeoPoint& p) const;
  // Shortest path by live travel time; returns node ids origin..dest.
  std::vector<int> drive_path(int from, int to) const;

  SyntheticCityConfig cfg_;
  double lat_step_deg_;
  double lon_step_deg_;
  double lat0_;  // latitude of row 0
  double lon0_;  // longitude of col 0
};

}  // namespace urbanflow
