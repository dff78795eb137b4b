#include "urbanflow/polyline.hpp"

#include <gtest/gtest.h>

#include "urbanflow/rng.hpp"

namespace urbanflow {
namespace {

// Published reference vector for the 5-decimal delta encoding.
constexpr const char* kCanonicalText = "_p~iF~ps|U_ulLnnqC_mqNvxq`@";
const Path kCanonicalPath = {
    {38.5, -120.2}, {40.7, -120.95}, {43.252, -126.453}};

TEST(PolylineDecodeTest, CanonicalVector) {
  const Path decoded = decode_polyline(EncodedPolyline{kCanonicalText});
  ASSERT_EQ(decoded.size(), kCanonicalPath.size());
  for (std::size_t i = 0; i < decoded.size(); ++i) {
    EXPECT_DOUBLE_EQ(decoded[i].lat, kCanonicalPath[i].lat);
    EXPECT_DOUBLE_EQ(decoded[i].lon, kCanonicalPath[i].lon);
  }
}

TEST(PolylineEncodeTest, CanonicalVector) {
  EXPECT_EQ(encode_polyline(kCanonicalPath).text(), kCanonicalText);
}

TEST(PolylineCodecTest, ZeroDeltaPair) {
  EXPECT_EQ(encode_polyline({{0.0, 0.0}}).text(), "??");
  const Path decoded = decode_polyline(EncodedPolyline{"??"});
  ASSERT_EQ(decoded.size(), 1u);
  EXPECT_EQ(decoded[0], (GeoPoint{0.0, 0.0}));
}

TEST(PolylineDecodeTest, TruncatedContinuationThrows) {
  // '_' carries the continuation bit and nothing follows.
  EXPECT_THROW(decode_polyline("_"), TruncatedEncodingError);
  // A full latitude but no longitude.
  EXPECT_THROW(decode_polyline("_p~iF"), TruncatedEncodingError);
}

TEST(PolylineDecodeTest, InvalidCharacterThrows) {
  EXPECT_THROW(decode_polyline("_p~iF\x20"), InvalidCharacterError);
  EXPECT_THROW(decode_polyline(std::string_view("\x7f??", 3)),
               InvalidCharacterError);
}

TEST(PolylineEncodeTest, EmptyPathThrows) {
  EXPECT_THROW(encode_polyline(Path{}), EmptyPathError);
}

TEST(EncodedPolylineTest, ConstructionRejectsMalformedText) {
  EXPECT_THROW(EncodedPolyline{"_"}, TruncatedEncodingError);
  EXPECT_THROW(EncodedPolyline{" bad"}, InvalidCharacterError);
  EXPECT_NO_THROW(EncodedPolyline{kCanonicalText});
}

TEST(EncodedPolylineTest, CharactersStayPrintable) {
  SplitMix64 rng(21);
  for (int round = 0; round < 50; ++round) {
    Path path;
    const std::size_t n = 1 + rng.next_below(30);
    for (std::size_t i = 0; i < n; ++i) {
      path.push_back(
          GeoPoint{rng.next_double(-90, 90), rng.next_double(-180, 180)});
    }
    for (const char c : encode_polyline(path).text()) {
      EXPECT_GE(c, 63);
      EXPECT_LE(c, 126);
    }
  }
}

TEST(PolylineCodecTest, RoundTripWithinCodecPrecision) {
  SplitMix64 rng(22);
  for (int round = 0; round < 200; ++round) {
    Path path;
    const std::size_t n = 1 + rng.next_below(50);
    for (std::size_t i = 0; i < n; ++i) {
      path.push_back(
          GeoPoint{rng.next_double(-90, 90), rng.next_double(-180, 180)});
    }
    const Path back = decode_polyline(encode_polyline(path));
    ASSERT_EQ(back.size(), path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
      EXPECT_NEAR(back[i].lat, path[i].lat, 1e-5);
      EXPECT_NEAR(back[i].lon, path[i].lon, 1e-5);
    }
  }
}

TEST(PolylineCodecTest, ThousandPointPathRoundTrips) {
  SplitMix64 rng(23);
  Path path;
  GeoPoint cursor{-23.55, -46.63};
  for (int i = 0; i < 1000; ++i) {
    cursor.lat += rng.next_double(-0.01, 0.01);
    cursor.lon += rng.next_double(-0.01, 0.01);
    path.push_back(cursor);
  }
  const Path back = decode_polyline(encode_polyline(path));
  ASSERT_EQ(back.size(), path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    EXPECT_NEAR(back[i].lat, path[i].lat, 1e-5);
    EXPECT_NEAR(back[i].lon, path[i].lon, 1e-5);
  }
}

}  // namespace
}  // namespace urbanflow
