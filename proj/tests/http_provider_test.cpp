#include "urbanflow/http_provider.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <thread>

#include <httplib.h>

#include "urbanflow/json_io.hpp"
#include "urbanflow/synthetic_city.hpp"

namespace urbanflow {
namespace {

// Serves the provider response schema from a synthetic city, so the HTTP
// adapters can be exercised without leaving the machine.
class LocalProviderServer {
 public:
  explicit LocalProviderServer(std::uint64_t seed) : provider_(make(seed)) {
    server_.Get("/driving", [this](const httplib::Request& req,
                                   httplib::Response& res) {
      handle(req, res, [this](const GeoPoint& o, const GeoPoint& d) {
        return to_json(provider_.get_driving_way(o, d));
      });
    });
    server_.Get("/transit", [this](const httplib::Request& req,
                                   httplib::Response& res) {
      handle(req, res, [this](const GeoPoint& o, const GeoPoint& d) {
        return to_json(provider_.get_transit_route(o, d));
      });
    });
    server_.Get("/ride", [this](const httplib::Request& req,
                                httplib::Response& res) {
      handle(req, res, [this](const GeoPoint& o, const GeoPoint& d) {
        return to_json(provider_.get_ride_estimate(o, d));
      });
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~LocalProviderServer() {
    server_.stop();
    thread_.join();
  }

  std::string base_url() const {
    return "http://127.0.0.1:" + std::to_string(port_);
  }

  int hits() const { return hits_.load(); }
  const SyntheticCityProvider& offline() const { return provider_; }

 private:
  static SyntheticCityProvider make(std::uint64_t seed) {
    SyntheticCityConfig cfg;
    cfg.seed = seed;
    return SyntheticCityProvider(cfg);
  }

  template <typename Fn>
  void handle(const httplib::Request& req, httplib::Response& res, Fn&& fn) {
    ++hits_;
    const GeoPoint o{std::stod(req.get_param_value("o_lat")),
                     std::stod(req.get_param_value("o_lon"))};
    const GeoPoint d{std::stod(req.get_param_value("d_lat")),
                     std::stod(req.get_param_value("d_lon"))};
    try {
      res.set_content(fn(o, d).dump(), "application/json");
    } catch (const NoRouteError& e) {
      res.status = 404;
      res.set_content(std::string("{\"error\":\"") + e.what() + "\"}",
                      "application/json");
    }
  }

  SyntheticCityProvider provider_;
  httplib::Server server_;
  std::thread thread_;
  std::atomic<int> hits_{0};
  int port_ = 0;
};

ProviderConfig http_config(const std::string& base_url,
                           const std::string& cache_dir = "") {
  ProviderConfig cfg;
  cfg.kind = ProviderKind::Http;
  cfg.driving_base_url = base_url;
  cfg.transit_base_url = base_url;
  cfg.ride_base_url = base_url;
  cfg.rate_limit_per_s = 500.0;
  cfg.cache_dir = cache_dir;
  return cfg;
}

TEST(HttpProviderTest, MatchesOfflineProviderVerbatim) {
  LocalProviderServer server(7);
  const HttpProvider http(http_config(server.base_url()));
  const auto& offline = server.offline();

  const GeoPoint o = offline.node_coord(4, 4);
  const GeoPoint d = offline.node_coord(20, 17);

  EXPECT_EQ(to_json(http.get_driving_way(o, d)).dump(),
            to_json(offline.get_driving_way(o, d)).dump());
  EXPECT_EQ(to_json(http.get_transit_route(o, d)).dump(),
            to_json(offline.get_transit_route(o, d)).dump());
  EXPECT_EQ(to_json(http.get_ride_estimate(o, d)).dump(),
            to_json(offline.get_ride_estimate(o, d)).dump());
  // The walk leg is computed locally by both.
  EXPECT_EQ(to_json(http.get_walk_route(o, d)).dump(),
            to_json(offline.get_walk_route(o, d)).dump());
}

TEST(HttpProviderTest, RemoteNoRouteBecomesNoRouteError) {
  LocalProviderServer server(7);
  const HttpProvider http(http_config(server.base_url()));
  const GeoPoint inside = server.offline().node_coord(4, 4);
  const GeoPoint outside{0.0, 0.0};
  EXPECT_THROW(http.get_driving_way(inside, outside), NoRouteError);
}

TEST(HttpProviderTest, UnreachableHostIsProviderUnavailable) {
  const HttpProvider http(http_config("http://127.0.0.1:1"));
  EXPECT_THROW(
      http.get_driving_way(GeoPoint{-23.55, -46.63}, GeoPoint{-23.56, -46.64}),
      ProviderUnavailableError);
}

TEST(HttpProviderTest, MissingBaseUrlIsProviderUnavailable) {
  ProviderConfig cfg;
  cfg.kind = ProviderKind::Http;
  const HttpProvider http(cfg);
  EXPECT_THROW(
      http.get_driving_way(GeoPoint{-23.55, -46.63}, GeoPoint{-23.56, -46.64}),
      ProviderUnavailableError);
}

TEST(HttpProviderTest, CacheShortCircuitsRepeatCalls) {
  LocalProviderServer server(7);
  const auto cache_dir = std::filesystem::path(::testing::TempDir()) /
                         "http_cache_short_circuit";
  std::filesystem::remove_all(cache_dir);
  const HttpProvider http(http_config(server.base_url(), cache_dir.string()));

  const GeoPoint o = server.offline().node_coord(4, 4);
  const GeoPoint d = server.offline().node_coord(9, 9);

  const auto first = to_json(http.get_ride_estimate(o, d)).dump();
  const int hits_after_first = server.hits();
  const auto second = to_json(http.get_ride_estimate(o, d)).dump();
  EXPECT_EQ(server.hits(), hits_after_first) << "second call hit the network";
  EXPECT_EQ(first, second);
  // Exactly one response document on disk.
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(cache_dir)) {
    ++files;
    EXPECT_EQ(entry.path().extension(), ".json");
  }
  EXPECT_EQ(files, 1u);
}

TEST(HttpProviderTest, CacheIsSharedAcrossProviderInstances) {
  const auto cache_dir = std::filesystem::path(::testing::TempDir()) /
                         "http_cache_shared";
  std::filesystem::remove_all(cache_dir);
  std::string first;
  {
    LocalProviderServer server(7);
    const HttpProvider http(
        http_config(server.base_url(), cache_dir.string()));
    first = to_json(http.get_transit_route(server.offline().node_coord(2, 5),
                                           server.offline().node_coord(2, 25)))
                .dump();
  }
  // Server is gone; the cached response must still answer.
  SyntheticCityConfig city;
  city.seed = 7;
  const SyntheticCityProvider offline(city);
  const HttpProvider http(
      http_config("http://127.0.0.1:1", cache_dir.string()));
  const auto second = to_json(http.get_transit_route(
                                  offline.node_coord(2, 5),
                                  offline.node_coord(2, 25)))
                          .dump();
  EXPECT_EQ(first, second);
}

TEST(ResponseCacheTest, StoresAndVerifiesKey) {
  const auto dir =
      std::filesystem::path(::testing::TempDir()) / "response_cache_unit";
  std::filesystem::remove_all(dir);
  const ResponseCache cache(dir.string());
  const std::string key =
      provider_cache_key("ride", GeoPoint{-23.55, -46.63},
                         GeoPoint{-23.56, -46.64}, "http");
  EXPECT_FALSE(cache.get(key).has_value());
  cache.put(key, nlohmann::json{{"price_brl", 12.5}});
  const auto hit = cache.get(key);
  ASSERT_TRUE(hit.has_value());
  EXPECT_DOUBLE_EQ(hit->at("price_brl").get<double>(), 12.5);
  // Unknown keys stay misses even with files present.
  EXPECT_FALSE(cache.get(key + "x").has_value());
  // The digest names the file.
  EXPECT_TRUE(std::filesystem::exists(
      dir / (ResponseCache::digest(key) + ".json")));
}

TEST(ResponseCacheTest, KeyRoundsCoordinatesToCodecPrecision) {
  const std::string a =
      provider_cache_key("ride", GeoPoint{-23.5500000001, -46.63},
                         GeoPoint{-23.56, -46.64}, "http");
  const std::string b = provider_cache_key(
      "ride", GeoPoint{-23.55, -46.63}, GeoPoint{-23.56, -46.64}, "http");
  EXPECT_EQ(a, b);
  const std::string c = provider_cache_key(
      "ride", GeoPoint{-23.5501, -46.63}, GeoPoint{-23.56, -46.64}, "http");
  EXPECT_NE(a, c);
}

TEST(TokenBucketTest, ThrottlesBeyondBurst) {
  TokenBucket bucket(50.0);  // 50 tokens/s, burst 50
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 60; ++i) {
    bucket.acquire();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  // 10 tokens beyond the burst at 50/s needs at least ~0.2 s.
  EXPECT_GE(elapsed, 0.15);
}

TEST(TokenBucketTest, BurstPassesImmediately) {
  TokenBucket bucket(1000.0);
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 100; ++i) {
    bucket.acquire();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  EXPECT_LT(elapsed, 0.5);
}

}  // namespace
}  // namespace urbanflow
