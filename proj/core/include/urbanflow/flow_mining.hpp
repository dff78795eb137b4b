#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "urbanflow/geo.hpp"
#include "urbanflow/linkage.hpp"

namespace urbanflow {

struct ClusterParams {
  double eps_m = 500.0;
  std::size_t min_pts = 10;
};

inline constexpr int kNoise = -1;

// A density cluster of trip endpoints treated as an origin/destination
// region.
struct FunctionalZone {
  int zone_id = 0;
  GeoPoint centroid;  // arithmetic mean of member coordinates
  std::size_t member_count = 0;
};

enum class FlowClass { Trend, Secondary };

std::string to_string(FlowClass c);

// A directed, aggregated movement pattern between two functional zones.
struct Flow {
  int origin_zone = 0;
  int dest_zone = 0;
  std::size_t trip_count = 0;
  FlowClass classification = FlowClass::Secondary;
  GeoPoint representative_origin;  // origin zone centroid
  GeoPoint representative_dest;    // dest zone centroid
};

struct EmptyInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ClusterResult {
  std::vector<FunctionalZone> zones;
  // Zone id (or kNoise) per link endpoint, parallel to the input links.
  std::vector<int> origin_zone_of_link;
  std::vector<int> dest_zone_of_link;
  // Flat labels in endpoint order: origin of link 0, dest of link 0,
  // origin of link 1, ...
  std::vector<int> endpoint_labels;
};

// DBSCAN over all link endpoints jointly, haversine metric. A core point
// has >= min_pts points (itself included) within eps. Labels are assigned
// by scanning points in input order, so the result is deterministic.
// Neighbor queries go through a spatial grid bucketed at eps; the labeling
// matches a naive O(n^2) scan exactly.
ClusterResult cluster_endpoints(const std::vector<TripLink>& links,
                                const ClusterParams& params);

// One flow per ordered zone pair with origin != dest. Links touching noise
// are discarded; intra-zone links are excluded. Output sorted by
// (origin_zone, dest_zone).
std::vector<Flow> aggregate_flows(const std::vector<TripLink>& links,
                                  const ClusterResult& clusters);

// Trend iff trip_count >= mean + 1 stddev (population) of all counts.
void classify_flows(std::vector<Flow>& flows);

// The k highest-volume flows; ties broken by (origin_zone, dest_zone)
// ascending.
std::vector<Flow> top_flows(const std::vector<Flow>& flows, std::size_t k);

}  // namespace urbanflow
