#include "urbanflow/mapgen.hpp"

#include <algorithm>
#include <cstdio>

#include "urbanflow/polyline.hpp"

namespace urbanflow {

namespace {

std::string coord5(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  return buf;
}

std::string coord6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string latlng_array(const Path& path) {
  std::string out = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += '[';
    out += coord5(path[i].lat);
    out += ',';
    out += coord5(path[i].lon);
    out += ']';
  }
  out += ']';
  return out;
}

std::string html_head(const MapConfig& cfg, const std::string& title) {
  std::string out;
  out += "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\"/>\n";
  out += "<title>" + title + "</title>\n";
  out += "<link rel=\"stylesheet\" "
         "href=\"https://unpkg.com/leaflet@1.9.4/dist/leaflet.css\"/>\n";
  out += "<script "
         "src=\"https://unpkg.com/leaflet@1.9.4/dist/leaflet.js\"></script>\n";
  out += "<style>html,body,#map{height:100%;margin:0;}</style>\n";
  out += "</head>\n<body>\n<div id=\"map\"></div>\n<script>\n";
  out += "var map = L.map('map').setView([" + coord6(cfg.center.lat) + "," +
         coord6(cfg.center.lon) + "], " + std::to_string(cfg.zoom) + ");\n";
  out += "L.tileLayer('https://tile.openstreetmap.org/{z}/{x}/{y}.png', "
         "{maxZoom: 19, attribution: '&copy; OpenStreetMap'}).addTo(map);\n";
  return out;
}

std::string html_tail() { return "</script>\n</body>\n</html>\n"; }

}  // namespace

std::string color_for_mode(TravelMode mode, const MapConfig& cfg) {
  const auto it = cfg.mode_colors.find(mode);
  if (it == cfg.mode_colors.end()) {
    throw std::invalid_argument("no color configured for mode " +
                                to_string(mode));
  }
  return it->second;
}

std::string render_map(const RouteOption& route, const MapConfig& cfg) {
  std::string out = html_head(cfg, "route " + to_string(route.label));
  for (std::size_t i = 0; i < route.steps.size(); ++i) {
    const auto& step = route.steps[i];
    Path path;
    try {
      path = decode_polyline(step.polyline);
    } catch (const PolylineError&) {
      throw PolylineDecodeError(i);
    }
    out += "L.polyline(" + latlng_array(path) + ", {color: '" +
           color_for_mode(step.mode, cfg) +
           "', weight: " + std::to_string(cfg.edge_width) + "}).addTo(map);\n";
  }
  out += html_tail();
  return out;
}

std::string render_flow_overview(const std::vector<Flow>& flows,
                                 const MapConfig& cfg) {
  std::string out = html_head(cfg, "flow overview");
  std::size_t max_count = 1;
  for (const auto& f : flows) {
    max_count = std::max(max_count, f.trip_count);
  }
  for (const auto& f : flows) {
    const int weight =
        2 + static_cast<int>(6.0 * static_cast<double>(f.trip_count) /
                             static_cast<double>(max_count));
    const char* color =
        f.classification == FlowClass::Trend ? "red" : "gray";
    out += "L.polyline([[" + coord5(f.representative_origin.lat) + "," +
           coord5(f.representative_origin.lon) + "],[" +
           coord5(f.representative_dest.lat) + "," +
           coord5(f.representative_dest.lon) + "]], {color: '" + color +
           "', weight: " + std::to_string(weight) + "}).addTo(map);\n";
    out += "L.circleMarker([" + coord5(f.representative_dest.lat) + "," +
           coord5(f.representative_dest.lon) + "], {radius: " +
           std::to_string(weight + 2) + ", color: '" + color +
           "'}).addTo(map);\n";
  }
  out += html_tail();
  return out;
}

}  // namespace urbanflow
