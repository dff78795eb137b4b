#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "urbanflow/flow_mining.hpp"
#include "urbanflow/linkage.hpp"
#include "urbanflow/mapgen.hpp"
#include "urbanflow/metrics.hpp"
#include "urbanflow/router.hpp"

namespace urbanflow::pipeline {

struct PipelineConfig {
  std::string input;
  std::string out_dir = "out";
  bool strict = false;

  FilterConfig filter;
  ClusterParams cluster;
  RouterConfig router;
  double fare_brl = kDefaultTransitFareBrl;
  std::size_t top_k = 7;

  std::string provider = "offline";  // offline | http
  std::uint64_t seed = 7;
  std::size_t jobs = 1;
  bool continue_on_error = false;

  std::string driving_base_url;
  std::string transit_base_url;
  std::string ride_base_url;
  std::string cache_dir;
  double rate_limit_per_s = 5.0;

  MapConfig map;

  // synth subcommand only
  std::size_t synth_records = 10'000;
};

// Stage artifact names inside out_dir.
namespace artifact {
inline constexpr const char* kObservations = "observations.csv";
inline constexpr const char* kLinks = "links.csv";
inline constexpr const char* kStageCounts = "stage_counts.json";
inline constexpr const char* kZones = "zones.json";
inline constexpr const char* kLinkZones = "link_zones.csv";
inline constexpr const char* kFlows = "flows.json";
inline constexpr const char* kRoutesDir = "routes";
inline constexpr const char* kChartsDir = "charts";
inline constexpr const char* kMapsDir = "maps";
}  // namespace artifact

// Each stage reads its inputs from cfg.out_dir (or cfg.input for ingest),
// writes its outputs there and prints a short summary. Throws
// std::runtime_error with a human-readable message on missing inputs.
void cmd_ingest(const PipelineConfig& cfg);
void cmd_link(const PipelineConfig& cfg);
void cmd_cluster(const PipelineConfig& cfg);
void cmd_flows(const PipelineConfig& cfg);
void cmd_route(const PipelineConfig& cfg);
void cmd_report(const PipelineConfig& cfg);
void cmd_map(const PipelineConfig& cfg);
void cmd_all(const PipelineConfig& cfg);
void cmd_synth(const PipelineConfig& cfg);

}  // namespace urbanflow::pipeline
