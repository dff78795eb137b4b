#pragma once

#include <cstdint>
#include <vector>

#include "urbanflow/ingestion.hpp"
#include "urbanflow/synthetic_city.hpp"

namespace urbanflow {

// Knobs for the seeded observation-dataset generator. Activity centers sit
// on the synthetic city grid so the generated trips are routable offline.
struct FixtureConfig {
  std::uint64_t seed = 7;
  std::size_t records = 10'000;
  // Share of rows that are lone observations (no trip pair).
  double noise_share = 0.2;
  // Spread of observation points around each activity center, meters.
  double center_sigma_m = 120.0;
};

// Deterministic observation records: users tweet at one activity center
// and again at another within the same day, plus scattered single
// observations. Records come out shuffled by timestamp to exercise the
// per-user sorting downstream.
std::vector<ObservationRecord> generate_fixture(
    const FixtureConfig& cfg, const SyntheticCityConfig& city = {});

}  // namespace urbanflow
