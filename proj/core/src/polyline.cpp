#include "urbanflow/polyline.hpp"

#include <cmath>
#include <cstdint>

namespace urbanflow {

namespace {

constexpr double kPrecision = 1e5;

void encode_value(std::int64_t value, std::string& out) {
  // Zigzag: left shift, invert when negative.
  value <<= 1;
  if (value < 0) {
    value = ~value;
  }
  while (value >= 0x20) {
    out += static_cast<char>((0x20 | (value & 0x1f)) + 63);
    value >>= 5;
  }
  out += static_cast<char>(value + 63);
}

// Reads one zigzag-encoded value starting at pos; advances pos past it.
std::int64_t decode_value(std::string_view text, std::size_t& pos) {
  std::int64_t result = 0;
  int shift = 0;
  while (true) {
    if (pos >= text.size()) {
      throw TruncatedEncodingError{};
    }
    const char c = text[pos];
    if (c < 63 || c > 126) {
      throw InvalidCharacterError{c};
    }
    ++pos;
    const std::int64_t chunk = c - 63;
    result |= (chunk & 0x1f) << shift;
    shift += 5;
    if (!(chunk & 0x20)) {
      break;
    }
  }
  return (result & 1) ? ~(result >> 1) : (result >> 1);
}

}  // namespace

EncodedPolyline::EncodedPolyline(std::string text) : text_(std::move(text)) {
  decode_polyline(std::string_view{text_});  // reject malformed input
}

Path decode_polyline(const EncodedPolyline& e) {
  return decode_polyline(std::string_view{e.text()});
}

Path decode_polyline(std::string_view text) {
  Path path;
  std::size_t pos = 0;
  std::int64_t lat = 0;
  std::int64_t lon = 0;
  while (pos < text.size()) {
    lat += decode_value(text, pos);
    if (pos >= text.size()) {
      // A latitude without its longitude.
      throw TruncatedEncodingError{};
    }
    lon += decode_value(text, pos);
    path.push_back(GeoPoint{static_cast<double>(lat) / kPrecision,
                            static_cast<double>(lon) / kPrecision});
  }
  return path;
}

EncodedPolyline encode_polyline(const Path& p) {
  if (p.empty()) {
    throw EmptyPathError{};
  }
  std::string out;
  std::int64_t prev_lat = 0;
  std::int64_t prev_lon = 0;
  for (const GeoPoint& pt : p) {
    const auto lat = static_cast<std::int64_t>(std::llround(pt.lat * kPrecision));
    const auto lon = static_cast<std::int64_t>(std::llround(pt.lon * kPrecision));
    encode_value(lat - prev_lat, out);
    encode_value(lon - prev_lon, out);
    prev_lat = lat;
    prev_lon = lon;
  }
  return EncodedPolyline{std::move(out)};
}

}  // namespace urbanflow
