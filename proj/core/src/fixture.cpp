#include "urbanflow/fixture.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "urbanflow/rng.hpp"

namespace urbanflow {

namespace {

constexpr double kMetersPerDegLat = kEarthRadiusM * 0.017453292519943295;

// 2019-03-01T00:00:00Z.
constexpr std::int64_t kEpochMs = 1'551'398'400'000;

struct Sampler {
  SplitMix64 rng;

  double gaussian() {
    // Box-Muller on splitmix uniforms keeps the stream portable.
    const double u1 = std::max(1e-12, rng.next_double());
    const double u2 = rng.next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.141592653589793 * u2);
  }
};

GeoPoint jitter(const GeoPoint& center, double sigma_m, Sampler& s) {
  const double dlat = s.gaussian() * sigma_m / kMetersPerDegLat;
  const double dlon = s.gaussian() * sigma_m /
                      (kMetersPerDegLat *
                       std::cos(center.lat * 0.017453292519943295));
  return GeoPoint{center.lat + dlat, center.lon + dlon};
}

}  // namespace

std::vector<ObservationRecord> generate_fixture(const FixtureConfig& cfg,
                                                const SyntheticCityConfig& city) {
  const SyntheticCityProvider provider(city);
  // Activity centers off the transit lines, well inside the grid.
  const std::vector<GeoPoint> centers = {
      provider.node_coord(4, 4),
      provider.node_coord(city.cols - 5, 4),
      provider.node_coord(4, city.rows - 5),
      provider.node_coord(city.cols - 5, city.rows - 5),
  };

  // Ordered center pairs carry seeded weights so flow volumes differ.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::uint64_t> weights;
  std::uint64_t weight_sum = 0;
  for (std::size_t o = 0; o < centers.size(); ++o) {
    for (std::size_t d = 0; d < centers.size(); ++d) {
      if (o == d) {
        continue;
      }
      pairs.emplace_back(o, d);
      const std::uint64_t w = 1 + hash_mix(cfg.seed, o, d, 3) % 8;
      weights.push_back(w);
      weight_sum += w;
    }
  }

  Sampler sampler{SplitMix64(cfg.seed)};
  auto& rng = sampler.rng;

  auto pick_pair = [&]() -> std::pair<GeoPoint, GeoPoint> {
    std::uint64_t roll = rng.next_below(weight_sum);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (roll < weights[i]) {
        return {centers[pairs[i].first], centers[pairs[i].second]};
      }
      roll -= weights[i];
    }
    return {centers[0], centers[1]};
  };

  std::vector<ObservationRecord> records;
  std::size_t user = 0;
  while (records.size() < cfg.records) {
    const std::string uid = "u" + std::to_string(user++);
    const std::int64_t day = static_cast<std::int64_t>(rng.next_below(28));
    const std::int64_t day_start = kEpochMs + day * 86'400'000;

    const double kind = rng.next_double();

    if (kind < cfg.noise_share) {
      // Lone observation anywhere near a center.
      const GeoPoint at =
          jitter(centers[rng.next_below(centers.size())], cfg.center_sigma_m * 4,
                 sampler);
      const std::int64_t t =
          day_start + static_cast<std::int64_t>(rng.next_below(86'400'000));
      records.push_back({uid, at, t});
      continue;
    }

    auto emit_trip = [&](std::int64_t start_ms, double speed_kmh_target,
                         std::int64_t forced_duration_ms, bool cross_day) {
      const auto [oc, dc] = pick_pair();
      const GeoPoint origin = jitter(oc, cfg.center_sigma_m, sampler);
      const GeoPoint dest = jitter(dc, cfg.center_sigma_m, sampler);
      std::int64_t duration_ms = forced_duration_ms;
      if (duration_ms == 0) {
        const double d = haversine_distance(origin, dest);
        duration_ms = static_cast<std::int64_t>(
            d / 1000.0 / speed_kmh_target * 3'600'000.0);
      }
      std::int64_t t0 = start_ms;
      if (cross_day) {
        // Straddle midnight regardless of the trip length.
        t0 = day_start + 86'400'000 - duration_ms / 2;
      }
      records.push_back({uid, origin, t0});
      records.push_back({uid, dest, t0 + duration_ms});
    };

    const std::int64_t morning =
        day_start + 28'800'000 +
        static_cast<std::int64_t>(rng.next_below(21'600'000));  // 08:00-14:00

    if (kind < cfg.noise_share + 0.5) {
      // Clean trip at an urban speed.
      emit_trip(morning, 10.0 + rng.next_double() * 50.0, 0, false);
    } else if (kind < cfg.noise_share + 0.7) {
      // One of the removable variants.
      switch (rng.next_below(5)) {
        case 0:
          emit_trip(morning, 30.0, 0, true);  // distinct dates
          break;
        case 1: {
          // Short hop around one center.
          const GeoPoint c = centers[rng.next_below(centers.size())];
          const GeoPoint a = jitter(c, 15.0, sampler);
          const GeoPoint b = jitter(c, 15.0, sampler);
          records.push_back({uid, a, morning});
          records.push_back({uid, b, morning + 600'000});
          break;
        }
        case 2:
          emit_trip(morning, 0.0, 500, false);  // sub-second
          break;
        case 3:
          emit_trip(morning, 1.2, 0, false);  // crawling
          break;
        default:
          emit_trip(morning, 160.0, 0, false);  // implausibly fast
          break;
      }
    } else {
      // Two trips in one day; the in-between dwell link gets filtered by
      // its crawling speed.
      emit_trip(morning, 15.0 + rng.next_double() * 30.0, 0, false);
      const std::int64_t evening =
          morning + 14'400'000 +
          static_cast<std::int64_t>(rng.next_below(7'200'000));
      emit_trip(evening, 15.0 + rng.next_double() * 30.0, 0, false);
    }
  }
  records.resize(cfg.records);

  // Interleave users the way a collected feed would arrive.
  std::stable_sort(records.begin(), records.end(),
                   [](const ObservationRecord& a, const ObservationRecord& b) {
                     return a.timestamp_ms < b.timestamp_ms;
                   });
  return records;
}

}  // namespace urbanflow
