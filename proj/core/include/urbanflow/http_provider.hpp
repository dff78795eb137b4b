#pragma once

#include <chrono>
#include <mutex>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "urbanflow/providers.hpp"

namespace urbanflow {

// Blocking token bucket. Capacity one burst-second of tokens.
class TokenBucket {
 public:
  explicit TokenBucket(double tokens_per_second);

  // Blocks until a token is available, then consumes it.
  void acquire();

 private:
  double rate_;
  double capacity_;
  double tokens_;
  std::chrono::steady_clock::time_point last_refill_;
  std::mutex mutex_;
};

// One JSON document per response on disk, filename = hex digest of the
// cache key. Safe for concurrent use; identical keys are last-writer-wins.
class ResponseCache {
 public:
  explicit ResponseCache(std::string dir);

  std::optional<nlohmann::json> get(const std::string& key) const;
  void put(const std::string& key, const nlohmann::json& response) const;

  static std::string digest(const std::string& key);

 private:
  std::string dir_;
};

// Canonical cache/request key for a provider call.
std::string provider_cache_key(const std::string& operation,
                               const GeoPoint& origin,
                               const GeoPoint& destination,
                               const std::string& provider_kind);

// Adapters for remote route services speaking the provider response
// schema. One base URL per role; API keys come from the environment
// variables named in the config; all calls are serialized through the
// rate limiter and optionally cached.
class HttpProvider : public RouteProvider {
 public:
  explicit HttpProvider(ProviderConfig cfg);
  ~HttpProvider() override;

  DrivingRoute get_driving_way(const GeoPoint& origin,
                               const GeoPoint& destination) const override;
  TransitItinerary get_transit_route(const GeoPoint& origin,
                                     const GeoPoint& destination) const override;
  RideEstimate get_ride_estimate(const GeoPoint& origin,
                                 const GeoPoint& destination) const override;
  // Computed locally; a straight-line walk needs no remote service.
  RouteStep get_walk_route(const GeoPoint& origin,
                           const GeoPoint& destination) const override;

 private:
  nlohmann::json fetch(const std::string& base_url, const std::string& path,
                       const std::string& operation, const GeoPoint& origin,
                       const GeoPoint& destination,
                       const std::string& key_env) const;

  ProviderConfig cfg_;
  mutable TokenBucket bucket_;
  std::optional<ResponseCache> cache_;
};

}  // namespace urbanflow
