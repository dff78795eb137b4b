#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "urbanflow/geo.hpp"
#include "urbanflow/ingestion.hpp"

namespace urbanflow {

// A directed movement between two consecutive observations of one user.
struct TripLink {
  std::string uid;
  GeoPoint origin_point;
  std::int64_t origin_time = 0;  // ms UTC
  GeoPoint dest_point;
  std::int64_t dest_time = 0;  // ms UTC
  double distance_m = 0.0;     // haversine(origin, dest)
  std::int64_t duration_ms = 0;
  double speed_kmh = 0.0;  // +inf when duration is 0 and distance > 0
};

// Surviving totals per pipeline stage. initial_records counts dataset rows;
// the rest count links.
struct StageCounts {
  std::size_t initial_records = 0;
  std::size_t linked = 0;
  std::size_t after_same_day = 0;
  std::size_t after_min_distance = 0;
  std::size_t after_min_duration = 0;
  std::size_t after_speed_band = 0;
};

struct FilterConfig {
  double min_distance_m = 100.0;
  std::int64_t min_duration_ms = 1000;
  double min_speed_kmh = 2.0;
  double max_speed_kmh = 100.0;
  // Minutes added to UTC before deciding which calendar date a timestamp
  // falls on. 0 keeps the storage clock; -180 is Sao Paulo local time.
  std::int32_t day_timezone_offset_min = 0;
};

// Groups records per uid, sorts each group by timestamp (ties keep input
// order), and emits one link per consecutive pair. Output is ordered by
// uid, then origin_time.
std::vector<TripLink> link_by_user(const Dataset& d);

// Keeps links whose endpoints fall on the same calendar date under the
// configured offset.
std::vector<TripLink> filter_same_day(const std::vector<TripLink>& links,
                                      const FilterConfig& cfg);

// Keeps links with distance >= min_distance_m.
std::vector<TripLink> filter_min_distance(const std::vector<TripLink>& links,
                                          const FilterConfig& cfg);

// Keeps links with duration >= min_duration_ms.
std::vector<TripLink> filter_min_duration(const std::vector<TripLink>& links,
                                          const FilterConfig& cfg);

// Keeps links with min_speed <= speed <= max_speed.
std::vector<TripLink> filter_speed_band(const std::vector<TripLink>& links,
                                        const FilterConfig& cfg);

struct PipelineResult {
  std::vector<TripLink> links;
  StageCounts counts;
};

// Fixed stage order: link, same-day, distance, duration, speed band.
PipelineResult run_filter_pipeline(const Dataset& d, const FilterConfig& cfg);

// Calendar day index (days since epoch) of a UTC millisecond timestamp
// shifted by offset_min. Floor division, so pre-epoch instants work.
std::int64_t day_index(std::int64_t timestamp_ms, std::int32_t offset_min);

void write_links_csv(const std::filesystem::path& path,
                     const std::vector<TripLink>& links);
std::vector<TripLink> read_links_csv(const std::filesystem::path& path);

std::string stage_counts_json(const StageCounts& counts);

}  // namespace urbanflow
