#include "urbanflow/synthetic_city.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "urbanflow/rng.hpp"

namespace urbanflow {

namespace {

constexpr double kMetersPerDegLat = kEarthRadiusM * 0.017453292519943295;

constexpr std::uint64_t kCongestionTag = 1;
constexpr std::uint64_t kPickupTag = 2;

double kmh_to_mps(double kmh) { return kmh / 3.6; }

std::int64_t round5(double deg) {
  return static_cast<std::int64_t>(std::llround(deg * 1e5));
}

}  // namespace

double ride_price(const SyntheticCityConfig& cfg, double distance_m,
                  double duration_s) {
  return cfg.ride_base_brl + cfg.ride_per_km_brl * (distance_m / 1000.0) +
         cfg.ride_per_min_brl * (duration_s / 60.0);
}

SyntheticCityProvider::SyntheticCityProvider(SyntheticCityConfig cfg)
    : cfg_(cfg) {
  lat_step_deg_ = cfg_.edge_m / kMetersPerDegLat;
  lon_step_deg_ =
      cfg_.edge_m /
      (kMetersPerDegLat * std::cos(cfg_.center.lat * 0.017453292519943295));
  lat0_ = cfg_.center.lat - lat_step_deg_ * (cfg_.rows - 1) / 2.0;
  lon0_ = cfg_.center.lon - lon_step_deg_ * (cfg_.cols - 1) / 2.0;
}

GeoPoint SyntheticCityProvider::node_coord(int col, int row) const {
  return GeoPoint{lat0_ + row * lat_step_deg_, lon0_ + col * lon_step_deg_};
}

bool SyntheticCityProvider::in_bounds(const GeoPoint& p) const {
  const double margin_lat = lat_step_deg_ / 2.0;
  const double margin_lon = lon_step_deg_ / 2.0;
  return p.lat >= lat0_ - margin_lat &&
         p.lat <= lat0_ + (cfg_.rows - 1) * lat_step_deg_ + margin_lat &&
         p.lon >= lon0_ - margin_lon &&
         p.lon <= lon0_ + (cfg_.cols - 1) * lon_step_deg_ + margin_lon;
}

int SyntheticCityProvider::snap_node(const GeoPoint& p) const {
  const int col = std::clamp(
      static_cast<int>(std::lround((p.lon - lon0_) / lon_step_deg_)), 0,
      cfg_.cols - 1);
  const int row = std::clamp(
      static_cast<int>(std::lround((p.lat - lat0_) / lat_step_deg_)), 0,
      cfg_.rows - 1);
  return node_id(col, row);
}

double SyntheticCityProvider::edge_multiplier(int node_a, int node_b) const {
  const auto lo = static_cast<std::uint64_t>(std::min(node_a, node_b));
  const auto hi = static_cast<std::uint64_t>(std::max(node_a, node_b));
  const std::uint64_t h = hash_mix(cfg_.seed, lo, hi, kCongestionTag);
  const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
  const double free_share = 1.0 - cfg_.congested_fraction;
  if (u < free_share) {
    return 1.0 + 0.4 * (u / free_share);  // [1.0, 1.4)
  }
  return 1.5 + (u - free_share) / cfg_.congested_fraction;  // [1.5, 2.5)
}

bool SyntheticCityProvider::is_transit_line_col(int col) const {
  return col % cfg_.line_spacing == cfg_.line_offset;
}

bool SyntheticCityProvider::is_transit_line_row(int row) const {
  return row % cfg_.line_spacing == cfg_.line_offset;
}

std::vector<int> SyntheticCityProvider::drive_path(int from, int to) const {
  const int n = cfg_.rows * cfg_.cols;
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<int> pred(n, -1);
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[from] = 0.0;
  heap.push({0.0, from});

  const double free_s = cfg_.edge_m / kmh_to_mps(cfg_.free_flow_kmh);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) {
      continue;
    }
    if (u == to) {
      break;
    }
    const int col = u % cfg_.cols;
    const int row = u / cfg_.cols;
    const int dc[4] = {1, -1, 0, 0};
    const int dr[4] = {0, 0, 1, -1};
    for (int k = 0; k < 4; ++k) {
      const int nc = col + dc[k];
      const int nr = row + dr[k];
      if (nc < 0 || nc >= cfg_.cols || nr < 0 || nr >= cfg_.rows) {
        continue;
      }
      const int v = node_id(nc, nr);
      const double w = free_s * edge_multiplier(u, v);
      if (dist[u] + w < dist[v]) {
        dist[v] = dist[u] + w;
        pred[v] = u;
        heap.push({dist[v], v});
      }
    }
  }

  std::vector<int> path;
  for (int v = to; v != -1; v = pred[v]) {
    path.push_back(v);
    if (v == from) {
      break;
    }
  }
  std::reverse(path.begin(), path.end());
  return path;
}

DrivingRoute SyntheticCityProvider::get_driving_way(
    const GeoPoint& origin, const GeoPoint& destination) const {
  if (origin == destination) {
    throw NoRouteError("driving route requires origin != destination");
  }
  if (!in_bounds(origin) || !in_bounds(destination)) {
    throw NoRouteError("point outside the service area");
  }
  const int from = snap_node(origin);
  const int to = snap_node(destination);
  DrivingRoute route;
  if (from == to) {
    return route;  // both snap to one node: empty reference route
  }
  const std::vector<int> path = drive_path(from, to);

  const double free_s = cfg_.edge_m / kmh_to_mps(cfg_.free_flow_kmh);
  // Merge consecutive same-direction edges into one instruction step.
  std::size_t i = 0;
  while (i + 1 < path.size()) {
    const int dir = path[i + 1] - path[i];
    std::size_t j = i + 1;
    while (j + 1 < path.size() && path[j + 1] - path[j] == dir) {
      ++j;
    }
    DrivingStep step;
    Path coords;
    for (std::size_t k = i; k <= j; ++k) {
      coords.push_back(node_coord(path[k] % cfg_.cols, path[k] / cfg_.cols));
    }
    step.origin = coords.front();
    step.destination = coords.back();
    step.distance_m = cfg_.edge_m * static_cast<double>(j - i);
    step.free_flow_duration_s = free_s * static_cast<double>(j - i);
    double live = 0.0;
    for (std::size_t k = i; k < j; ++k) {
      live += free_s * edge_multiplier(path[k], path[k + 1]);
    }
    step.live_duration_s = live;
    step.polyline = encode_polyline(coords);
    route.steps.push_back(std::move(step));
    i = j;
  }
  return route;
}

TransitItinerary SyntheticCityProvider::get_transit_route(
    const GeoPoint& origin, const GeoPoint& destination) const {
  if (origin == destination) {
    throw NoRouteError("transit route requires origin != destination");
  }
  if (!in_bounds(origin) || !in_bounds(destination)) {
    throw NoRouteError("point outside the service area");
  }

  // Line ids: vertical lines by column, then horizontal lines by row.
  std::vector<int> line_cols;
  std::vector<int> line_rows;
  for (int c = 0; c < cfg_.cols; ++c) {
    if (is_transit_line_col(c)) {
      line_cols.push_back(c);
    }
  }
  for (int r = 0; r < cfg_.rows; ++r) {
    if (is_transit_line_row(r)) {
      line_rows.push_back(r);
    }
  }
  const int n_lines = static_cast<int>(line_cols.size() + line_rows.size());
  const int n_nodes = cfg_.rows * cfg_.cols;
  // State 0 = start, 1 = end, then (line, node) pairs.
  const int n_states = 2 + n_lines * n_nodes;
  auto state_of = [&](int line, int node) { return 2 + line * n_nodes + node; };

  auto stations_of_line = [&](int line) {
    std::vector<int> nodes;
    if (line < static_cast<int>(line_cols.size())) {
      const int c = line_cols[line];
      for (int r = 0; r < cfg_.rows; ++r) {
        nodes.push_back(node_id(c, r));
      }
    } else {
      const int r = line_rows[line - static_cast<int>(line_cols.size())];
      for (int c = 0; c < cfg_.cols; ++c) {
        nodes.push_back(node_id(c, r));
      }
    }
    return nodes;
  };

  auto lines_of_node = [&](int node) {
    std::vector<int> lines;
    const int col = node % cfg_.cols;
    const int row = node / cfg_.cols;
    if (is_transit_line_col(col)) {
      lines.push_back(static_cast<int>(
          std::lower_bound(line_cols.begin(), line_cols.end(), col) -
          line_cols.begin()));
    }
    if (is_transit_line_row(row)) {
      lines.push_back(static_cast<int>(
          line_cols.size() +
          (std::lower_bound(line_rows.begin(), line_rows.end(), row) -
           line_rows.begin())));
    }
    return lines;
  };

  const double walk_mps = kmh_to_mps(cfg_.walk_kmh);
  const double ride_edge_s = cfg_.edge_m / kmh_to_mps(cfg_.transit_kmh);
  const double board_wait = cfg_.headway_s / 2.0;

  auto coord_of = [&](int node) {
    return node_coord(node % cfg_.cols, node / cfg_.cols);
  };

  std::vector<double> dist(n_states, std::numeric_limits<double>::infinity());
  std::vector<int> pred(n_states, -1);
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;

  auto relax = [&](int state, double cost, int from) {
    if (cost < dist[state]) {
      dist[state] = cost;
      pred[state] = from;
      heap.push({cost, state});
    }
  };

  dist[0] = 0.0;
  heap.push({0.0, 0});
  // Direct walk is always an alternative.
  relax(1, haversine_distance(origin, destination) / walk_mps, 0);
  // Board any line at any of its stations after walking there.
  for (int line = 0; line < n_lines; ++line) {
    for (const int node : stations_of_line(line)) {
      const double walk_s = haversine_distance(origin, coord_of(node)) / walk_mps;
      relax(state_of(line, node), walk_s + board_wait, 0);
    }
  }

  while (!heap.empty()) {
    const auto [d, s] = heap.top();
    heap.pop();
    if (d > dist[s]) {
      continue;
    }
    if (s == 1) {
      break;
    }
    if (s < 2) {
      continue;
    }
    const int line = (s - 2) / n_nodes;
    const int node = (s - 2) % n_nodes;
    const int col = node % cfg_.cols;
    const int row = node / cfg_.cols;

    // Ride to the adjacent station along this line.
    if (line < static_cast<int>(line_cols.size())) {
      for (const int nr : {row - 1, row + 1}) {
        if (nr >= 0 && nr < cfg_.rows) {
          relax(state_of(line, node_id(col, nr)), d + ride_edge_s, s);
        }
      }
    } else {
      for (const int nc : {col - 1, col + 1}) {
        if (nc >= 0 && nc < cfg_.cols) {
          relax(state_of(line, node_id(nc, row)), d + ride_edge_s, s);
        }
      }
    }
    // Change line at a shared station (a fresh boarding wait).
    for (const int other : lines_of_node(node)) {
      if (other != line) {
        relax(state_of(other, node), d + board_wait, s);
      }
    }
    // Alight and walk to the destination.
    relax(1, d + haversine_distance(coord_of(node), destination) / walk_mps, s);
  }

  // Reconstruct the state chain start -> ... -> end.
  std::vector<int> chain;
  for (int s = 1; s != -1; s = pred[s]) {
    chain.push_back(s);
    if (s == 0) {
      break;
    }
  }
  std::reverse(chain.begin(), chain.end());

  TransitItinerary itinerary;
  auto add_walk = [&](const GeoPoint& a, const GeoPoint& b) {
    const double d = haversine_distance(a, b);
    if (d < 1e-6) {
      return;  // degenerate access/egress
    }
    RouteStep step;
    step.mode = TravelMode::Walk;
    step.origin = a;
    step.destination = b;
    step.distance_m = d;
    step.duration_s = d / walk_mps;
    step.polyline = encode_polyline({a, b});
    itinerary.steps.push_back(std::move(step));
  };

  // Group consecutive states on one line into a single Transit step.
  std::size_t i = 1;  // chain[0] == start state
  GeoPoint cursor = origin;
  while (i < chain.size() && chain[i] != 1) {
    const int line = (chain[i] - 2) / n_nodes;
    std::size_t j = i;
    while (j + 1 < chain.size() && chain[j + 1] != 1 &&
           (chain[j + 1] - 2) / n_nodes == line) {
      ++j;
    }
    const int entry_node = (chain[i] - 2) % n_nodes;
    const int exit_node = (chain[j] - 2) % n_nodes;
    add_walk(cursor, coord_of(entry_node));
    if (entry_node != exit_node) {
      RouteStep step;
      step.mode = TravelMode::Transit;
      step.origin = coord_of(entry_node);
      step.destination = coord_of(exit_node);
      step.wait_s = board_wait;
      Path coords;
      for (std::size_t k = i; k <= j; ++k) {
        coords.push_back(coord_of((chain[k] - 2) % n_nodes));
      }
      step.distance_m = cfg_.edge_m * static_cast<double>(j - i);
      step.duration_s = ride_edge_s * static_cast<double>(j - i);
      step.polyline = encode_polyline(coords);
      itinerary.steps.push_back(std::move(step));
      ++itinerary.boardings;
      cursor = coord_of(exit_node);
    } else {
      // Boarded and alighted at the same station: no movement, no step.
      cursor = coord_of(entry_node);
    }
    i = j + 1;
  }
  add_walk(cursor, destination);

  itinerary.initial_wait_s = itinerary.boardings > 0 ? board_wait : 0.0;
  return itinerary;
}

RideEstimate SyntheticCityProvider::get_ride_estimate(
    const GeoPoint& origin, const GeoPoint& destination) const {
  if (!in_bounds(origin) || !in_bounds(destination)) {
    throw NoRouteError("point outside the service area");
  }
  RideEstimate est;
  if (origin == destination) {
    est.price_brl = cfg_.ride_base_brl;
    est.polyline = encode_polyline({origin});
  } else {
    const DrivingRoute route = get_driving_way(origin, destination);
    Path coords;
    for (const auto& step : route.steps) {
      est.distance_m += step.distance_m;
      est.duration_s += step.live_duration_s;
      const Path piece = decode_polyline(step.polyline);
      for (const auto& p : piece) {
        if (coords.empty() || !(coords.back() == p)) {
          coords.push_back(p);
        }
      }
    }
    if (coords.empty()) {
      coords.push_back(node_coord(snap_node(origin) % cfg_.cols,
                                  snap_node(origin) / cfg_.cols));
    }
    est.polyline = encode_polyline(coords);
    est.price_brl = ride_price(cfg_, est.distance_m, est.duration_s);
  }
  const std::uint64_t h =
      hash_mix(cfg_.seed, static_cast<std::uint64_t>(round5(origin.lat)),
               static_cast<std::uint64_t>(round5(origin.lon)), kPickupTag);
  const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
  est.pickup_wait_s = 120.0 + 360.0 * u;
  return est;
}

RouteStep SyntheticCityProvider::get_walk_route(
    const GeoPoint& origin, const GeoPoint& destination) const {
  RouteStep step;
  step.mode = TravelMode::Walk;
  step.origin = origin;
  step.destination = destination;
  step.distance_m = haversine_distance(origin, destination);
  step.duration_s = step.distance_m / kmh_to_mps(cfg_.walk_kmh);
  step.polyline = encode_polyline({origin, destination});
  return step;
}

}  // namespace urbanflow
