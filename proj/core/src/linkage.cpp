#include "urbanflow/linkage.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>

#include <nlohmann/json.hpp>

namespace urbanflow {

namespace {

TripLink make_link(const std::string& uid, const ObservationRecord& from,
                   const ObservationRecord& to) {
  TripLink link;
  link.uid = uid;
  link.origin_point = from.point;
  link.origin_time = from.timestamp_ms;
  link.dest_point = to.point;
  link.dest_time = to.timestamp_ms;
  link.distance_m = haversine_distance(from.point, to.point);
  link.duration_ms = to.timestamp_ms - from.timestamp_ms;
  if (link.duration_ms > 0) {
    link.speed_kmh = speed_kmh(link.distance_m, link.duration_ms);
  } else {
    // Duplicate timestamps survive linking; such links are dropped by the
    // duration filter, and the speed predicate must still be total.
    link.speed_kmh = link.distance_m > 0.0
                         ? std::numeric_limits<double>::infinity()
                         : 0.0;
  }
  return link;
}

template <typename Pred>
std::vector<TripLink> keep_if(const std::vector<TripLink>& links, Pred pred) {
  std::vector<TripLink> out;
  out.reserve(links.size());
  std::copy_if(links.begin(), links.end(), std::back_inserter(out), pred);
  return out;
}

void append_double(std::string& out, double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, r.ptr);
}

}  // namespace

std::int64_t day_index(std::int64_t timestamp_ms, std::int32_t offset_min) {
  const std::int64_t shifted =
      timestamp_ms + static_cast<std::int64_t>(offset_min) * 60'000;
  constexpr std::int64_t kDayMs = 86'400'000;
  std::int64_t days = shifted / kDayMs;
  if (shifted % kDayMs < 0) {
    --days;
  }
  return days;
}

std::vector<TripLink> link_by_user(const Dataset& d) {
  // std::map keeps groups in lexicographic uid order, which pins the final
  // output ordering.
  std::map<std::string, std::vector<const ObservationRecord*>> by_uid;
  for (const auto& rec : d.records) {
    by_uid[rec.uid].push_back(&rec);
  }

  std::vector<TripLink> links;
  for (auto& [uid, recs] : by_uid) {
    std::stable_sort(recs.begin(), recs.end(),
                     [](const ObservationRecord* a, const ObservationRecord* b) {
                       return a->timestamp_ms < b->timestamp_ms;
                     });
    for (std::size_t i = 0; i + 1 < recs.size(); ++i) {
      links.push_back(make_link(uid, *recs[i], *recs[i + 1]));
    }
  }
  return links;
}

std::vector<TripLink> filter_same_day(const std::vector<TripLink>& links,
                                      const FilterConfig& cfg) {
  return keep_if(links, [&](const TripLink& l) {
    return day_index(l.origin_time, cfg.day_timezone_offset_min) ==
           day_index(l.dest_time, cfg.day_timezone_offset_min);
  });
}

std::vector<TripLink> filter_min_distance(const std::vector<TripLink>& links,
                                          const FilterConfig& cfg) {
  return keep_if(links, [&](const TripLink& l) {
    return l.distance_m >= cfg.min_distance_m;
  });
}

std::vector<TripLink> filter_min_duration(const std::vector<TripLink>& links,
                                          const FilterConfig& cfg) {
  return keep_if(links, [&](const TripLink& l) {
    return l.duration_ms >= cfg.min_duration_ms;
  });
}

std::vector<TripLink> filter_speed_band(const std::vector<TripLink>& links,
                                        const FilterConfig& cfg) {
  return keep_if(links, [&](const TripLink& l) {
    return l.speed_kmh >= cfg.min_speed_kmh && l.speed_kmh <= cfg.max_speed_kmh;
  });
}

PipelineResult run_filter_pipeline(const Dataset& d, const FilterConfig& cfg) {
  PipelineResult result;
  result.counts.initial_records = d.records.size();

  result.links = link_by_user(d);
  result.counts.linked = result.links.size();

  result.links = filter_same_day(result.links, cfg);
  result.counts.after_same_day = result.links.size();

  result.links = filter_min_distance(result.links, cfg);
  result.counts.after_min_distance = result.links.size();

  result.links = filter_min_duration(result.links, cfg);
  result.counts.after_min_duration = result.links.size();

  result.links = filter_speed_band(result.links, cfg);
  result.counts.after_speed_band = result.links.size();

  return result;
}

void write_links_csv(const std::filesystem::path& path,
                     const std::vector<TripLink>& links) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path.string());
  }
  out << "uid,o_lat,o_lon,o_ts,d_lat,d_lon,d_ts,distance_m,duration_ms,"
         "speed_kmh\n";
  std::string row;
  for (const auto& l : links) {
    row.clear();
    row += l.uid;
    row += ',';
    append_double(row, l.origin_point.lat);
    row += ',';
    append_double(row, l.origin_point.lon);
    row += ',';
    row += std::to_string(l.origin_time);
    row += ',';
    append_double(row, l.dest_point.lat);
    row += ',';
    append_double(row, l.dest_point.lon);
    row += ',';
    row += std::to_string(l.dest_time);
    row += ',';
    append_double(row, l.distance_m);
    row += ',';
    row += std::to_string(l.duration_ms);
    row += ',';
    append_double(row, l.speed_kmh);
    row += '\n';
    out << row;
  }
}

std::vector<TripLink> read_links_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open links file: " + path.string());
  }
  std::vector<TripLink> links;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> f;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      if (comma == std::string::npos) {
        f.push_back(line.substr(start));
        break;
      }
      f.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (f.size() != 10) {
      throw std::runtime_error("malformed links row: " + line);
    }
    TripLink l;
    l.uid = f[0];
    auto to_d = [](const std::string& s) {
      double v = 0;
      std::from_chars(s.data(), s.data() + s.size(), v);
      return v;
    };
    auto to_i = [](const std::string& s) {
      std::int64_t v = 0;
      std::from_chars(s.data(), s.data() + s.size(), v);
      return v;
    };
    l.origin_point = GeoPoint{to_d(f[1]), to_d(f[2])};
    l.origin_time = to_i(f[3]);
    l.dest_point = GeoPoint{to_d(f[4]), to_d(f[5])};
    l.dest_time = to_i(f[6]);
    l.distance_m = to_d(f[7]);
    l.duration_ms = to_i(f[8]);
    l.speed_kmh = f[9] == "inf" ? std::numeric_limits<double>::infinity()
                                : to_d(f[9]);
    links.push_back(std::move(l));
  }
  return links;
}

std::string stage_counts_json(const StageCounts& counts) {
  nlohmann::ordered_json j;
  j["initial_records"] = counts.initial_records;
  j["linked"] = counts.linked;
  j["after_same_day"] = counts.after_same_day;
  j["after_min_distance"] = counts.after_min_distance;
  j["after_min_duration"] = counts.after_min_duration;
  j["after_speed_band"] = counts.after_speed_band;
  return j.dump(2) + "\n";
}

}  // namespace urbanflow
