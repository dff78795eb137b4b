#include "urbanflow/metrics.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

namespace urbanflow {

namespace {

std::string shortest(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", round_currency(v));
  return buf;
}

const char* chart_color(OptionLabel label) {
  switch (label) {
    case OptionLabel::Transit: return "#d32f2f";
    case OptionLabel::RideHail: return "#1976d2";
    case OptionLabel::Hybrid1: return "#f57c00";
    case OptionLabel::Hybrid2: return "#7b1fa2";
    case OptionLabel::Other: return "#757575";
  }
  return "#757575";
}

nlohmann::ordered_json metrics_json(const OptionMetrics& m) {
  nlohmann::ordered_json j;
  j["price_brl"] = m.price_brl;
  j["duration_s"] = m.duration_s;
  j["wait_s"] = m.wait_s;
  j["distance_m"] = m.distance_m;
  j["walk_distance_m"] = m.walk_distance_m;
  return j;
}

}  // namespace

double round_currency(double brl) {
  return static_cast<double>(std::llround(brl * 100.0)) / 100.0;
}

OptionMetrics compute_metrics(const RouteOption& option, double fare_brl) {
  OptionMetrics m;
  std::size_t boardings = 0;
  for (const auto& step : option.steps) {
    m.duration_s += step.duration_s;
    m.wait_s += step.wait_s;
    m.distance_m += step.distance_m;
    switch (step.mode) {
      case TravelMode::Walk:
        m.walk_distance_m += step.distance_m;
        break;
      case TravelMode::Transit:
        ++boardings;
        break;
      case TravelMode::RideHail:
        m.price_brl += step.price_brl;
        break;
      case TravelMode::Drive:
        break;
    }
  }
  m.price_brl += fare_brl * static_cast<double>(boardings);
  return m;
}

FlowComparison compare_flow(const std::string& flow_id,
                            const std::vector<RouteOption>& labeled_options,
                            double fare_brl) {
  FlowComparison cmp;
  cmp.flow_id = flow_id;
  for (const auto label : kReportLabels) {
    cmp.per_label[label] = std::nullopt;
  }
  for (const auto& option : labeled_options) {
    if (option.label == OptionLabel::Other) {
      continue;
    }
    cmp.per_label[option.label] = compute_metrics(option, fare_brl);
  }
  return cmp;
}

AggregateReport aggregate(const std::vector<FlowComparison>& comparisons) {
  if (comparisons.empty()) {
    throw ReportError("aggregate requires at least one flow comparison");
  }
  AggregateReport report;
  report.flow_count = comparisons.size();
  for (const auto label : kReportLabels) {
    OptionMetrics sum;
    std::size_t n = 0;
    for (const auto& cmp : comparisons) {
      const auto it = cmp.per_label.find(label);
      if (it == cmp.per_label.end() || !it->second.has_value()) {
        continue;
      }
      const OptionMetrics& m = *it->second;
      sum.price_brl += m.price_brl;
      sum.duration_s += m.duration_s;
      sum.wait_s += m.wait_s;
      sum.distance_m += m.distance_m;
      sum.walk_distance_m += m.walk_distance_m;
      ++n;
    }
    if (n == 0) {
      continue;
    }
    const auto dn = static_cast<double>(n);
    report.means[label] =
        OptionMetrics{sum.price_brl / dn, sum.duration_s / dn, sum.wait_s / dn,
                      sum.distance_m / dn, sum.walk_distance_m / dn};
    report.present_counts[label] = n;
  }
  return report;
}

void emit_report(const AggregateReport& report,
                 const std::vector<FlowComparison>& comparisons,
                 const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);

  {
    std::ofstream csv(out_dir / "report.csv", std::ios::binary);
    if (!csv) {
      throw ReportError("cannot open report.csv for writing");
    }
    csv << "flow_id,label,price_brl,duration_s,wait_s,distance_m,"
           "walk_distance_m\n";
    for (const auto& cmp : comparisons) {
      for (const auto label : kReportLabels) {
        const auto it = cmp.per_label.find(label);
        if (it == cmp.per_label.end() || !it->second.has_value()) {
          continue;
        }
        const OptionMetrics& m = *it->second;
        csv << cmp.flow_id << ',' << to_string(label) << ','
            << fixed2(m.price_brl) << ',' << shortest(m.duration_s) << ','
            << shortest(m.wait_s) << ',' << shortest(m.distance_m) << ','
            << shortest(m.walk_distance_m) << '\n';
      }
    }
  }

  {
    nlohmann::ordered_json root;
    nlohmann::ordered_json flows = nlohmann::ordered_json::array();
    for (const auto& cmp : comparisons) {
      nlohmann::ordered_json entry;
      entry["flow_id"] = cmp.flow_id;
      nlohmann::ordered_json labels;
      for (const auto label : kReportLabels) {
        const auto it = cmp.per_label.find(label);
        if (it != cmp.per_label.end() && it->second.has_value()) {
          labels[to_string(label)] = metrics_json(*it->second);
        } else {
          labels[to_string(label)] = nullptr;
        }
      }
      entry["labels"] = std::move(labels);
      flows.push_back(std::move(entry));
    }
    root["flows"] = std::move(flows);

    nlohmann::ordered_json agg;
    for (const auto label : kReportLabels) {
      const auto it = report.means.find(label);
      if (it != report.means.end()) {
        auto j = metrics_json(it->second);
        j["flows_present"] = report.present_counts.at(label);
        agg[to_string(label)] = std::move(j);
      } else {
        agg[to_string(label)] = nullptr;
      }
    }
    root["aggregate"] = std::move(agg);
    root["flow_count"] = report.flow_count;

    std::ofstream json(out_dir / "report.json", std::ios::binary);
    if (!json) {
      throw ReportError("cannot open report.json for writing");
    }
    json << root.dump(2) << '\n';
  }
}

void emit_charts(const AggregateReport& report,
                 const std::filesystem::path& out_dir) {
  if (report.means.empty()) {
    throw ReportError("emit_charts requires a non-empty report");
  }
  std::filesystem::create_directories(out_dir);

  struct MetricDef {
    const char* file;
    const char* title;
    double OptionMetrics::* field;
  };
  const MetricDef defs[] = {
      {"mean_price_brl.svg", "Mean price (BRL)", &OptionMetrics::price_brl},
      {"mean_duration_s.svg", "Mean travel time (s)",
       &OptionMetrics::duration_s},
      {"mean_wait_s.svg", "Mean wait time (s)", &OptionMetrics::wait_s},
      {"mean_distance_m.svg", "Mean distance (m)", &OptionMetrics::distance_m},
      {"mean_walk_distance_m.svg", "Mean walking distance (m)",
       &OptionMetrics::walk_distance_m},
  };

  constexpr double kWidth = 640.0;
  constexpr double kHeight = 400.0;
  constexpr double kMarginLeft = 60.0;
  constexpr double kMarginBottom = 48.0;
  constexpr double kMarginTop = 40.0;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const double plot_w = kWidth - kMarginLeft - 20.0;

  for (const auto& def : defs) {
    std::vector<std::pair<OptionLabel, double>> bars;
    double max_v = 0.0;
    for (const auto label : kReportLabels) {
      const auto it = report.means.find(label);
      if (it == report.means.end()) {
        continue;
      }
      const double v = it->second.*def.field;
      bars.emplace_back(label, v);
      max_v = std::max(max_v, v);
    }
    const double scale = max_v > 0.0 ? plot_h / max_v : 0.0;
    const double slot = plot_w / static_cast<double>(bars.size());
    const double bar_w = slot * 0.6;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
           "height=\"400\" viewBox=\"0 0 640 400\">\n";
    svg += "<rect width=\"640\" height=\"400\" fill=\"#ffffff\"/>\n";
    svg += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">";
    svg += def.title;
    svg += "</text>\n";
    // Axes.
    svg += "<line x1=\"" + shortest(kMarginLeft) + "\" y1=\"" +
           shortest(kMarginTop) + "\" x2=\"" + shortest(kMarginLeft) +
           "\" y2=\"" + shortest(kHeight - kMarginBottom) +
           "\" stroke=\"#000000\"/>\n";
    svg += "<line x1=\"" + shortest(kMarginLeft) + "\" y1=\"" +
           shortest(kHeight - kMarginBottom) + "\" x2=\"" +
           shortest(kWidth - 20.0) + "\" y2=\"" +
           shortest(kHeight - kMarginBottom) + "\" stroke=\"#000000\"/>\n";

    for (std::size_t i = 0; i < bars.size(); ++i) {
      const auto [label, value] = bars[i];
      const double h = value * scale;
      const double x =
          kMarginLeft + slot * static_cast<double>(i) + (slot - bar_w) / 2.0;
      const double y = kHeight - kMarginBottom - h;
      svg += "<rect class=\"bar\" x=\"" + shortest(x) + "\" y=\"" +
             shortest(y) + "\" width=\"" + shortest(bar_w) + "\" height=\"" +
             shortest(h) + "\" fill=\"" + chart_color(label) + "\"/>\n";
      svg += "<text x=\"" + shortest(x + bar_w / 2.0) + "\" y=\"" +
             shortest(kHeight - kMarginBottom + 18.0) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
             "font-size=\"13\">" +
             to_string(label) + "</text>\n";
      svg += "<text x=\"" + shortest(x + bar_w / 2.0) + "\" y=\"" +
             shortest(y - 6.0) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
             "font-size=\"11\">" +
             fixed2(value) + "</text>\n";
    }
    svg += "</svg>\n";

    std::ofstream out(out_dir / def.file, std::ios::binary);
    if (!out) {
      throw ReportError(std::string("cannot open chart file: ") + def.file);
    }
    out << svg;
  }
}

}  // namespace urbanflow
