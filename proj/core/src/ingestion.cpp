#include "urbanflow/ingestion.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <optional>

namespace urbanflow {

namespace {

constexpr std::array<const char*, 4> kColumnNames = {"uid", "lat", "lon",
                                                     "timestamp_ms"};

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    return std::nullopt;
  }
  return v;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    return std::nullopt;
  }
  return v;
}

struct ColumnOrder {
  std::size_t uid = 0;
  std::size_t lat = 1;
  std::size_t lon = 2;
  std::size_t timestamp_ms = 3;
};

// Returns the column order when the line is a header, nullopt when it looks
// like a data row.
std::optional<ColumnOrder> detect_header(std::string_view first_line) {
  const auto fields = split_fields(first_line);
  if (fields.size() == 4) {
    ColumnOrder order;
    int matched = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      const std::string name = lowercase(trim(fields[i]));
      if (name == kColumnNames[0]) {
        order.uid = i;
        ++matched;
      } else if (name == kColumnNames[1]) {
        order.lat = i;
        ++matched;
      } else if (name == kColumnNames[2]) {
        order.lon = i;
        ++matched;
      } else if (name == kColumnNames[3]) {
        order.timestamp_ms = i;
        ++matched;
      }
    }
    if (matched == 4) {
      return order;
    }
  }
  if (!fields.empty() && parse_double(trim(fields[0])).has_value()) {
    return std::nullopt;  // headerless, canonical order
  }
  throw MalformedHeaderError(
      "first line is neither a uid,lat,lon,timestamp_ms header nor a "
      "numeric-uid data row");
}

// Parses one data row; on failure reports the reason instead of a record.
std::optional<ObservationRecord> parse_row(std::string_view line,
                                           const ColumnOrder& order,
                                           RejectReason& reason) {
  const auto fields = split_fields(line);
  if (fields.size() != 4) {
    reason = RejectReason::WrongFieldCount;
    return std::nullopt;
  }
  ObservationRecord rec;
  rec.uid = std::string(trim(fields[order.uid]));
  if (rec.uid.empty()) {
    reason = RejectReason::EmptyUid;
    return std::nullopt;
  }
  const auto lat = parse_double(trim(fields[order.lat]));
  if (!lat) {
    reason = RejectReason::BadLatitude;
    return std::nullopt;
  }
  if (*lat < -90.0 || *lat > 90.0) {
    reason = RejectReason::OutOfRangeLatitude;
    return std::nullopt;
  }
  const auto lon = parse_double(trim(fields[order.lon]));
  if (!lon) {
    reason = RejectReason::BadLongitude;
    return std::nullopt;
  }
  if (*lon < -180.0 || *lon > 180.0) {
    reason = RejectReason::OutOfRangeLongitude;
    return std::nullopt;
  }
  const auto ts = parse_int(trim(fields[order.timestamp_ms]));
  if (!ts) {
    reason = RejectReason::BadTimestamp;
    return std::nullopt;
  }
  if (*ts <= 0) {
    reason = RejectReason::NonPositiveTimestamp;
    return std::nullopt;
  }
  rec.point = GeoPoint{*lat, *lon};
  rec.timestamp_ms = *ts;
  return rec;
}

}  // namespace

std::string to_string(RejectReason r) {
  switch (r) {
    case RejectReason::WrongFieldCount: return "WrongFieldCount";
    case RejectReason::BadLatitude: return "BadLatitude";
    case RejectReason::BadLongitude: return "BadLongitude";
    case RejectReason::OutOfRangeLatitude: return "OutOfRangeLatitude";
    case RejectReason::OutOfRangeLongitude: return "OutOfRangeLongitude";
    case RejectReason::BadTimestamp: return "BadTimestamp";
    case RejectReason::NonPositiveTimestamp: return "NonPositiveTimestamp";
    case RejectReason::EmptyUid: return "EmptyUid";
  }
  return "Unknown";
}

Dataset read_observations(const std::filesystem::path& path, bool strict) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FileNotFoundError(path.string());
  }

  Dataset ds;
  ds.source_path = path.string();

  std::string line;
  std::size_t line_no = 0;
  ColumnOrder order;
  bool saw_first_line = false;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') {
      view.remove_suffix(1);
    }
    if (view.empty()) {
      continue;
    }
    if (!saw_first_line) {
      saw_first_line = true;
      if (const auto detected = detect_header(view)) {
        order = *detected;
        continue;  // header consumed
      }
      // Headerless: fall through and parse this line as data.
    }
    RejectReason reason{};
    if (auto rec = parse_row(view, order, reason)) {
      ds.records.push_back(std::move(*rec));
    } else {
      if (strict) {
        throw RowError(line_no, reason);
      }
      ++ds.rejected_count;
      ds.rejected.push_back(RejectedRow{line_no, reason});
    }
  }
  return ds;
}

void write_observations(const std::filesystem::path& path,
                        const std::vector<ObservationRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IngestError("cannot open output file: " + path.string());
  }
  out << "uid,lat,lon,timestamp_ms\n";
  char buf[64];
  for (const auto& rec : records) {
    out << rec.uid << ',';
    auto r = std::to_chars(buf, buf + sizeof buf, rec.point.lat);
    out.write(buf, r.ptr - buf);
    out << ',';
    r = std::to_chars(buf, buf + sizeof buf, rec.point.lon);
    out.write(buf, r.ptr - buf);
    out << ',' << rec.timestamp_ms << '\n';
  }
}

}  // namespace urbanflow
