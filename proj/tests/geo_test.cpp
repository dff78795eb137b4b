#include "urbanflow/geo.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "urbanflow/rng.hpp"

namespace urbanflow {
namespace {

using testing_support::spherical_law_of_cosines_m;

TEST(HaversineTest, IdenticalPointsAreZero) {
  const GeoPoint p{-23.5516, -46.6336};
  EXPECT_EQ(haversine_distance(p, p), 0.0);
}

TEST(HaversineTest, OneDegreeOfLongitudeAtEquator) {
  // One degree along the equator spans R * pi/180 meters.
  const double d = haversine_distance({0.0, 0.0}, {0.0, 1.0});
  EXPECT_NEAR(d, 111194.93, 0.5);
}

TEST(HaversineTest, MatchesSphericalLawOfCosinesInSaoPaulo) {
  const GeoPoint a{-23.5516, -46.6336};
  const GeoPoint b{-23.5516, -46.6236};
  const double expected = spherical_law_of_cosines_m(a, b);
  const double actual = haversine_distance(a, b);
  EXPECT_NEAR(actual, expected, expected * 0.001);
}

TEST(HaversineTest, SymmetricAndNonNegativeOnRandomPairs) {
  SplitMix64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const GeoPoint a{rng.next_double(-80, 80), rng.next_double(-179, 179)};
    const GeoPoint b{rng.next_double(-80, 80), rng.next_double(-179, 179)};
    const double ab = haversine_distance(a, b);
    const double ba = haversine_distance(b, a);
    EXPECT_GE(ab, 0.0);
    EXPECT_DOUBLE_EQ(ab, ba);
  }
}

TEST(HaversineTest, TriangleInequalityOnSampledTriples) {
  SplitMix64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const GeoPoint a{rng.next_double(-80, 80), rng.next_double(-179, 179)};
    const GeoPoint b{rng.next_double(-80, 80), rng.next_double(-179, 179)};
    const GeoPoint c{rng.next_double(-80, 80), rng.next_double(-179, 179)};
    EXPECT_LE(haversine_distance(a, c),
              haversine_distance(a, b) + haversine_distance(b, c) + 1e-6);
  }
}

TEST(SpeedTest, OneKmPerHour) {
  EXPECT_DOUBLE_EQ(speed_kmh(1000.0, 3'600'000), 1.0);
}

TEST(SpeedTest, FilterBoundaryHundredKmh) {
  EXPECT_DOUBLE_EQ(speed_kmh(100.0, 3'600), 100.0);
}

TEST(SpeedTest, HandComputedMidRange) {
  // 2.5 km in 15 minutes.
  EXPECT_DOUBLE_EQ(speed_kmh(2500.0, 900'000), 10.0);
}

TEST(SpeedTest, ZeroDurationThrows) {
  EXPECT_THROW(speed_kmh(100.0, 0), ZeroDurationError);
  EXPECT_THROW(speed_kmh(100.0, -5), ZeroDurationError);
}

TEST(SpeedTest, LinearInDistanceInverseInDuration) {
  SplitMix64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const double d = rng.next_double(1.0, 50'000.0);
    const auto t = static_cast<std::int64_t>(rng.next_double(1.0, 1e7));
    const double base = speed_kmh(d, t);
    EXPECT_NEAR(speed_kmh(3.0 * d, t), 3.0 * base, 1e-9 * base);
    EXPECT_NEAR(speed_kmh(d, 4 * t), base / 4.0, 1e-9 * base);
  }
}

TEST(GeoPointTest, ValidityBounds) {
  EXPECT_TRUE(is_valid(GeoPoint{90.0, 180.0}));
  EXPECT_TRUE(is_valid(GeoPoint{-90.0, -180.0}));
  EXPECT_FALSE(is_valid(GeoPoint{90.01, 0.0}));
  EXPECT_FALSE(is_valid(GeoPoint{0.0, -180.2}));
}

}  // namespace
}  // namespace urbanflow
