#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "urbanflow/router.hpp"

namespace urbanflow {

inline constexpr double kDefaultTransitFareBrl = 4.30;

// The five comparison metrics of one route option.
struct OptionMetrics {
  double price_brl = 0.0;
  double duration_s = 0.0;  // in motion; waits reported separately
  double wait_s = 0.0;
  double distance_m = 0.0;
  double walk_distance_m = 0.0;
};

// The four labels a flow is compared across, in report order.
inline constexpr std::array<OptionLabel, 4> kReportLabels = {
    OptionLabel::Transit, OptionLabel::RideHail, OptionLabel::Hybrid1,
    OptionLabel::Hybrid2};

struct FlowComparison {
  std::string flow_id;
  // Absent labels stay nullopt.
  std::map<OptionLabel, std::optional<OptionMetrics>> per_label;
};

struct AggregateReport {
  // Arithmetic means over the flows where each label is present.
  std::map<OptionLabel, OptionMetrics> means;
  std::map<OptionLabel, std::size_t> present_counts;
  std::size_t flow_count = 0;
};

struct ReportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// price = fare per transit boarding + ride-hail step prices; duration and
// wait are disjoint sums; walk_distance covers Walk steps only.
OptionMetrics compute_metrics(const RouteOption& option,
                              double fare_brl = kDefaultTransitFareBrl);

FlowComparison compare_flow(const std::string& flow_id,
                            const std::vector<RouteOption>& labeled_options,
                            double fare_brl = kDefaultTransitFareBrl);

// Throws ReportError on empty input.
AggregateReport aggregate(const std::vector<FlowComparison>& comparisons);

// Writes report.csv (one row per flow x present label) and report.json
// into out_dir. Deterministic bytes for identical inputs.
void emit_report(const AggregateReport& report,
                 const std::vector<FlowComparison>& comparisons,
                 const std::filesystem::path& out_dir);

// Writes one grouped-bar SVG per metric into out_dir, bars ordered
// Transit, RideHail, Hybrid1, Hybrid2 (absent labels skipped).
void emit_charts(const AggregateReport& report,
                 const std::filesystem::path& out_dir);

// Presentation rounding for currency: two decimals, half up.
double round_currency(double brl);

}  // namespace urbanflow
