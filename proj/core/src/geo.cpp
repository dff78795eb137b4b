#include "urbanflow/geo.hpp"

#include <algorithm>
#include <cstdint>

namespace urbanflow {

namespace {
constexpr double kDegToRad = 0.017453292519943295;  // pi / 180
}

double haversine_distance(const GeoPoint& a, const GeoPoint& b) {
  const double phi1 = a.lat * kDegToRad;
  const double phi2 = b.lat * kDegToRad;
  const double dphi = (b.lat - a.lat) * kDegToRad;
  const double dlambda = (b.lon - a.lon) * kDegToRad;

  const double sin_dphi = std::sin(dphi / 2.0);
  const double sin_dlambda = std::sin(dlambda / 2.0);
  const double h = sin_dphi * sin_dphi +
                   std::cos(phi1) * std::cos(phi2) * sin_dlambda * sin_dlambda;
  return 2.0 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(h)));
}

double speed_kmh(double distance_m, std::int64_t duration_ms) {
  if (duration_ms <= 0) {
    throw ZeroDurationError{};
  }
  return (distance_m / 1000.0) /
         (static_cast<double>(duration_ms) / 3'600'000.0);
}

}  // namespace urbanflow
