#include "urbanflow/flow_mining.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <unordered_map>

namespace urbanflow {

namespace {

// Meters per degree of latitude on the spherical model (R * pi / 180).
constexpr double kMetersPerDegLat = kEarthRadiusM * 0.017453292519943295;

struct GridIndex {
  double cell_lat_deg;
  double cell_lon_deg;
  std::unordered_map<std::int64_t, std::vector<std::uint32_t>> cells;

  GridIndex(const std::vector<GeoPoint>& points, double eps_m) {
    double max_abs_lat = 0.0;
    for (const auto& p : points) {
      max_abs_lat = std::max(max_abs_lat, std::abs(p.lat));
    }
    // Cell spans at least eps in each axis, so all true neighbors of a
    // point live in its 3x3 cell neighborhood. The 1.01 slack absorbs the
    // curvature of the lon-degree/meter conversion near the data's extreme
    // latitude.
    const double cos_bound =
        std::max(0.01, std::cos(std::min(89.0, max_abs_lat + 0.1) *
                                0.017453292519943295));
    cell_lat_deg = eps_m / kMetersPerDegLat * 1.01;
    cell_lon_deg = eps_m / (kMetersPerDegLat * cos_bound) * 1.01;
    for (std::uint32_t i = 0; i < points.size(); ++i) {
      cells[key_of(points[i])].push_back(i);
    }
  }

  std::int64_t key_of(const GeoPoint& p) const {
    const auto row =
        static_cast<std::int64_t>(std::floor(p.lat / cell_lat_deg));
    const auto col =
        static_cast<std::int64_t>(std::floor(p.lon / cell_lon_deg));
    return row * 0x100000 + col;  // rows/cols stay far below 2^20 at city scale
  }

  // Indices within eps of points[q], ascending, q included.
  std::vector<std::uint32_t> neighbors(const std::vector<GeoPoint>& points,
                                       std::uint32_t q, double eps_m) const {
    std::vector<std::uint32_t> out;
    const GeoPoint& center = points[q];
    const auto row =
        static_cast<std::int64_t>(std::floor(center.lat / cell_lat_deg));
    const auto col =
        static_cast<std::int64_t>(std::floor(center.lon / cell_lon_deg));
    for (std::int64_t dr = -1; dr <= 1; ++dr) {
      for (std::int64_t dc = -1; dc <= 1; ++dc) {
        const auto it = cells.find((row + dr) * 0x100000 + (col + dc));
        if (it == cells.end()) {
          continue;
        }
        for (const std::uint32_t i : it->second) {
          if (haversine_distance(center, points[i]) <= eps_m) {
            out.push_back(i);
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

std::vector<int> dbscan(const std::vector<GeoPoint>& points,
                        const ClusterParams& params) {
  constexpr int kUnvisited = -2;
  std::vector<int> labels(points.size(), kUnvisited);
  const GridIndex grid(points, params.eps_m);

  int next_cluster = 0;
  for (std::uint32_t i = 0; i < points.size(); ++i) {
    if (labels[i] != kUnvisited) {
      continue;
    }
    auto seeds = grid.neighbors(points, i, params.eps_m);
    if (seeds.size() < params.min_pts) {
      labels[i] = kNoise;
      continue;
    }
    const int cluster = next_cluster++;
    labels[i] = cluster;
    std::deque<std::uint32_t> queue(seeds.begin(), seeds.end());
    while (!queue.empty()) {
      const std::uint32_t j = queue.front();
      queue.pop_front();
      if (labels[j] == kNoise) {
        labels[j] = cluster;  // border point
      }
      if (labels[j] != kUnvisited) {
        continue;
      }
      labels[j] = cluster;
      auto reach = grid.neighbors(points, j, params.eps_m);
      if (reach.size() >= params.min_pts) {
        queue.insert(queue.end(), reach.begin(), reach.end());
      }
    }
  }
  return labels;
}

}  // namespace

std::string to_string(FlowClass c) {
  return c == FlowClass::Trend ? "Trend" : "Secondary";
}

ClusterResult cluster_endpoints(const std::vector<TripLink>& links,
                                const ClusterParams& params) {
  if (links.empty()) {
    throw EmptyInputError("cluster_endpoints requires at least one link");
  }
  std::vector<GeoPoint> points;
  points.reserve(links.size() * 2);
  for (const auto& l : links) {
    points.push_back(l.origin_point);
    points.push_back(l.dest_point);
  }

  ClusterResult result;
  result.endpoint_labels = dbscan(points, params);

  int max_label = -1;
  for (const int label : result.endpoint_labels) {
    max_label = std::max(max_label, label);
  }
  result.zones.resize(static_cast<std::size_t>(max_label + 1));
  std::vector<double> sum_lat(result.zones.size(), 0.0);
  std::vector<double> sum_lon(result.zones.size(), 0.0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int label = result.endpoint_labels[i];
    if (label < 0) {
      continue;
    }
    sum_lat[label] += points[i].lat;
    sum_lon[label] += points[i].lon;
    ++result.zones[label].member_count;
  }
  for (std::size_t z = 0; z < result.zones.size(); ++z) {
    result.zones[z].zone_id = static_cast<int>(z);
    const auto n = static_cast<double>(result.zones[z].member_count);
    result.zones[z].centroid = GeoPoint{sum_lat[z] / n, sum_lon[z] / n};
  }

  result.origin_zone_of_link.resize(links.size());
  result.dest_zone_of_link.resize(links.size());
  for (std::size_t i = 0; i < links.size(); ++i) {
    result.origin_zone_of_link[i] = result.endpoint_labels[2 * i];
    result.dest_zone_of_link[i] = result.endpoint_labels[2 * i + 1];
  }
  return result;
}

std::vector<Flow> aggregate_flows(const std::vector<TripLink>& links,
                                  const ClusterResult& clusters) {
  std::map<std::pair<int, int>, std::size_t> counts;
  for (std::size_t i = 0; i < links.size(); ++i) {
    const int o = clusters.origin_zone_of_link[i];
    const int d = clusters.dest_zone_of_link[i];
    if (o == kNoise || d == kNoise || o == d) {
      continue;
    }
    ++counts[{o, d}];
  }
  std::vector<Flow> flows;
  flows.reserve(counts.size());
  for (const auto& [pair, count] : counts) {
    Flow f;
    f.origin_zone = pair.first;
    f.dest_zone = pair.second;
    f.trip_count = count;
    f.representative_origin = clusters.zones[pair.first].centroid;
    f.representative_dest = clusters.zones[pair.second].centroid;
    flows.push_back(f);
  }
  return flows;
}

void classify_flows(std::vector<Flow>& flows) {
  if (flows.empty()) {
    return;
  }
  double mean = 0.0;
  for (const auto& f : flows) {
    mean += static_cast<double>(f.trip_count);
  }
  mean /= static_cast<double>(flows.size());
  double var = 0.0;
  for (const auto& f : flows) {
    const double d = static_cast<double>(f.trip_count) - mean;
    var += d * d;
  }
  var /= static_cast<double>(flows.size());
  const double threshold = mean + std::sqrt(var);
  for (auto& f : flows) {
    f.classification = static_cast<double>(f.trip_count) >= threshold
                           ? FlowClass::Trend
                           : FlowClass::Secondary;
  }
}

std::vector<Flow> top_flows(const std::vector<Flow>& flows, std::size_t k) {
  if (k < 1) {
    throw EmptyInputError("top_flows requires k >= 1");
  }
  std::vector<Flow> sorted = flows;
  std::sort(sorted.begin(), sorted.end(), [](const Flow& a, const Flow& b) {
    if (a.trip_count != b.trip_count) {
      return a.trip_count > b.trip_count;
    }
    if (a.origin_zone != b.origin_zone) {
      return a.origin_zone < b.origin_zone;
    }
    return a.dest_zone < b.dest_zone;
  });
  if (sorted.size() > k) {
    sorted.resize(k);
  }
  return sorted;
}

}  // namespace urbanflow
