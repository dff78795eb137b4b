#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace urbanflow {

// Mean Earth radius of the spherical model, meters.
inline constexpr double kEarthRadiusM = 6'371'000.0;

struct GeoPoint {
  double lat = 0.0;  // degrees, WGS84, [-90, 90]
  double lon = 0.0;  // degrees, WGS84, [-180, 180]

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

inline bool is_valid(const GeoPoint& p) {
  return std::isfinite(p.lat) && std::isfinite(p.lon) && p.lat >= -90.0 &&
         p.lat <= 90.0 && p.lon >= -180.0 && p.lon <= 180.0;
}

struct ZeroDurationError : std::invalid_argument {
  ZeroDurationError() : std::invalid_argument("speed requires duration > 0") {}
};

// Great-circle distance on the spherical Earth model, meters.
double haversine_distance(const GeoPoint& a, const GeoPoint& b);

// (distance/1000) / (duration/3'600'000). Throws ZeroDurationError on
// duration_ms <= 0.
double speed_kmh(double distance_m, std::int64_t duration_ms);

}  // namespace urbanflow
