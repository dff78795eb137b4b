#include "urbanflow/synthetic_city.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "urbanflow/json_io.hpp"

namespace urbanflow {
namespace {

SyntheticCityProvider provider_with_seed(std::uint64_t seed) {
  SyntheticCityConfig cfg;
  cfg.seed = seed;
  return SyntheticCityProvider(cfg);
}

TEST(SyntheticDrivingTest, AdjacentNodesGiveOneNominalEdgeStep) {
  const auto provider = provider_with_seed(1);
  const auto route = provider.get_driving_way(provider.node_coord(10, 10),
                                              provider.node_coord(11, 10));
  ASSERT_EQ(route.steps.size(), 1u);
  EXPECT_DOUBLE_EQ(route.steps[0].distance_m, 250.0);
  EXPECT_DOUBLE_EQ(route.steps[0].free_flow_duration_s, 22.5);
  EXPECT_GE(route.steps[0].live_duration_s,
            route.steps[0].free_flow_duration_s);
}

TEST(SyntheticDrivingTest, EqualEndpointsThrowNoRoute) {
  const auto provider = provider_with_seed(1);
  const GeoPoint p = provider.node_coord(5, 5);
  EXPECT_THROW(provider.get_driving_way(p, p), NoRouteError);
}

TEST(SyntheticDrivingTest, OutOfBoundsThrowsNoRoute) {
  const auto provider = provider_with_seed(1);
  EXPECT_THROW(
      provider.get_driving_way(GeoPoint{0.0, 0.0}, provider.node_coord(1, 1)),
      NoRouteError);
}

TEST(SyntheticDrivingTest, FixedSeedIsByteIdentical) {
  const auto a = provider_with_seed(7);
  const auto b = provider_with_seed(7);
  const GeoPoint o = a.node_coord(3, 4);
  const GeoPoint d = a.node_coord(30, 28);
  EXPECT_EQ(to_json(a.get_driving_way(o, d)).dump(),
            to_json(b.get_driving_way(o, d)).dump());
  EXPECT_EQ(to_json(a.get_transit_route(o, d)).dump(),
            to_json(b.get_transit_route(o, d)).dump());
  EXPECT_EQ(to_json(a.get_ride_estimate(o, d)).dump(),
            to_json(b.get_ride_estimate(o, d)).dump());
}

TEST(SyntheticDrivingTest, DifferentSeedsChangeCongestion) {
  const auto a = provider_with_seed(7);
  const auto b = provider_with_seed(8);
  const GeoPoint o = a.node_coord(3, 4);
  const GeoPoint d = a.node_coord(30, 28);
  EXPECT_NE(to_json(a.get_driving_way(o, d)).dump(),
            to_json(b.get_driving_way(o, d)).dump());
}

TEST(SyntheticDrivingTest, StepsAreContiguous) {
  const auto provider = provider_with_seed(3);
  const auto route = provider.get_driving_way(provider.node_coord(0, 0),
                                              provider.node_coord(39, 39));
  ASSERT_GT(route.steps.size(), 1u);
  double total = 0.0;
  for (std::size_t i = 0; i < route.steps.size(); ++i) {
    total += route.steps[i].distance_m;
    if (i > 0) {
      EXPECT_LE(haversine_distance(route.steps[i - 1].destination,
                                   route.steps[i].origin),
                1.0);
    }
  }
  // Manhattan span of the full grid diagonal.
  EXPECT_DOUBLE_EQ(total, 250.0 * 78);
}

TEST(SyntheticDrivingTest, SnappingToleratesNearbyQueryPoints) {
  const auto provider = provider_with_seed(3);
  const GeoPoint node = provider.node_coord(8, 8);
  const GeoPoint nearby = testing_support::offset_m(node, 40.0, -30.0);
  const auto route = provider.get_driving_way(nearby, provider.node_coord(12, 8));
  ASSERT_FALSE(route.steps.empty());
  EXPECT_LE(haversine_distance(route.steps[0].origin, node), 1.0);
}

TEST(SyntheticTransitTest, SameLineIsSingleBoarding) {
  const auto provider = provider_with_seed(1);
  // Column 2 carries a vertical line.
  const GeoPoint o = provider.node_coord(2, 5);
  const GeoPoint d = provider.node_coord(2, 25);
  const auto itinerary = provider.get_transit_route(o, d);
  EXPECT_EQ(itinerary.boardings, 1u);
  ASSERT_EQ(itinerary.steps.size(), 1u);
  EXPECT_EQ(itinerary.steps[0].mode, TravelMode::Transit);
  EXPECT_DOUBLE_EQ(itinerary.steps[0].distance_m, 20 * 250.0);
  EXPECT_DOUBLE_EQ(itinerary.initial_wait_s, 300.0);
}

TEST(SyntheticTransitTest, CrossingLinesNeedsTwoBoardings) {
  const auto provider = provider_with_seed(1);
  // From a vertical-line station to a horizontal-line station far away.
  const GeoPoint o = provider.node_coord(2, 10);
  const GeoPoint d = provider.node_coord(30, 22);
  const auto itinerary = provider.get_transit_route(o, d);
  EXPECT_EQ(itinerary.boardings, 2u);
  double wait = 0.0;
  for (const auto& s : itinerary.steps) {
    wait += s.wait_s;
  }
  EXPECT_DOUBLE_EQ(wait, 600.0);  // one headway-half per boarding
}

TEST(SyntheticTransitTest, WalkAccessConnectsOffLinePoints) {
  const auto provider = provider_with_seed(1);
  const GeoPoint o = provider.node_coord(4, 4);   // two edges from lines
  const GeoPoint d = provider.node_coord(34, 34);
  const auto itinerary = provider.get_transit_route(o, d);
  ASSERT_GE(itinerary.steps.size(), 2u);
  EXPECT_EQ(itinerary.steps.front().mode, TravelMode::Walk);
  EXPECT_GT(itinerary.steps.front().distance_m, 0.0);
  // Steps chain exactly from origin to destination.
  EXPECT_EQ(itinerary.steps.front().origin, o);
  EXPECT_EQ(itinerary.steps.back().destination, d);
  for (std::size_t i = 1; i < itinerary.steps.size(); ++i) {
    EXPECT_LE(haversine_distance(itinerary.steps[i - 1].destination,
                                 itinerary.steps[i].origin),
              1.0);
  }
  std::size_t transit_steps = 0;
  for (const auto& s : itinerary.steps) {
    EXPECT_NE(s.mode, TravelMode::Drive);
    EXPECT_NE(s.mode, TravelMode::RideHail);
    transit_steps += s.mode == TravelMode::Transit ? 1 : 0;
  }
  EXPECT_EQ(transit_steps, itinerary.boardings);
}

TEST(SyntheticRideTest, PriceFollowsTariff) {
  // 10 km in 20 minutes: base 5.00 + 14.00 + 5.20.
  EXPECT_NEAR(ride_price(SyntheticCityConfig{}, 10'000.0, 1200.0), 24.20,
              1e-12);
  const auto provider = provider_with_seed(5);
  const auto est = provider.get_ride_estimate(provider.node_coord(2, 2),
                                              provider.node_coord(30, 25));
  EXPECT_DOUBLE_EQ(
      est.price_brl,
      ride_price(provider.config(), est.distance_m, est.duration_s));
}

TEST(SyntheticRideTest, DegenerateTripCostsBaseFare) {
  const auto provider = provider_with_seed(5);
  const GeoPoint p = provider.node_coord(9, 9);
  const auto est = provider.get_ride_estimate(p, p);
  EXPECT_DOUBLE_EQ(est.price_brl, 5.00);
  EXPECT_DOUBLE_EQ(est.distance_m, 0.0);
}

TEST(SyntheticRideTest, PickupWaitStaysInBand) {
  const auto provider = provider_with_seed(5);
  SplitMix64 rng(51);
  for (int i = 0; i < 50; ++i) {
    const GeoPoint o = provider.node_coord(
        static_cast<int>(rng.next_below(40)), static_cast<int>(rng.next_below(40)));
    const GeoPoint d = provider.node_coord(
        static_cast<int>(rng.next_below(40)), static_cast<int>(rng.next_below(40)));
    if (o == d) {
      continue;
    }
    const auto est = provider.get_ride_estimate(o, d);
    EXPECT_GE(est.pickup_wait_s, 120.0);
    EXPECT_LE(est.pickup_wait_s, 480.0);
  }
}

TEST(SyntheticWalkTest, OneKilometerTakesTwelveMinutes) {
  const auto provider = provider_with_seed(1);
  const GeoPoint o = provider.node_coord(10, 10);
  const GeoPoint d = testing_support::offset_m(o, 1000.0, 0.0);
  const auto step = provider.get_walk_route(o, d);
  EXPECT_EQ(step.mode, TravelMode::Walk);
  EXPECT_NEAR(step.duration_s, 720.0, 0.5);
  EXPECT_DOUBLE_EQ(step.price_brl, 0.0);
  EXPECT_DOUBLE_EQ(step.wait_s, 0.0);
}

TEST(SyntheticWalkTest, DegenerateWalkIsZero) {
  const auto provider = provider_with_seed(1);
  const GeoPoint p = provider.node_coord(10, 10);
  const auto step = provider.get_walk_route(p, p);
  EXPECT_DOUBLE_EQ(step.distance_m, 0.0);
  EXPECT_DOUBLE_EQ(step.duration_s, 0.0);
}

TEST(SyntheticCityTest, CongestionMultipliersCoverBothRegimes) {
  const auto provider = provider_with_seed(7);
  int congested = 0;
  int total = 0;
  for (int row = 0; row < 40; ++row) {
    for (int col = 0; col + 1 < 40; ++col) {
      const double m = provider.edge_multiplier(row * 40 + col,
                                                row * 40 + col + 1);
      EXPECT_GE(m, 1.0);
      EXPECT_LT(m, 2.5);
      EXPECT_FALSE(m >= 1.4 && m < 1.5);  // clean gap at the threshold
      congested += m >= 1.5 ? 1 : 0;
      ++total;
    }
  }
  const double share = static_cast<double>(congested) / total;
  EXPECT_NEAR(share, 0.25, 0.05);
}

}  // namespace
}  // namespace urbanflow
