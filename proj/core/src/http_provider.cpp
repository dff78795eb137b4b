#include "urbanflow/http_provider.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include <httplib.h>

#include "urbanflow/json_io.hpp"
#include "urbanflow/rng.hpp"

namespace urbanflow {

namespace {

constexpr double kWalkKmh = 5.0;

std::int64_t round5(double deg) {
  return static_cast<std::int64_t>(std::llround(deg * 1e5));
}

std::string coord_token(double deg) {
  const std::int64_t scaled = round5(deg);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", static_cast<double>(scaled) / 1e5);
  return buf;
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t basis) {
  std::uint64_t h = basis;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

TokenBucket::TokenBucket(double tokens_per_second)
    : rate_(tokens_per_second),
      capacity_(std::max(1.0, tokens_per_second)),
      tokens_(capacity_),
      last_refill_(std::chrono::steady_clock::now()) {}

void TokenBucket::acquire() {
  std::unique_lock lock(mutex_);
  while (true) {
    const auto now = std::chrono::steady_clock::now();
    const double elapsed =
        std::chrono::duration<double>(now - last_refill_).count();
    last_refill_ = now;
    tokens_ = std::min(capacity_, tokens_ + elapsed * rate_);
    if (tokens_ >= 1.0) {
      tokens_ -= 1.0;
      return;
    }
    const double wait_s = (1.0 - tokens_) / rate_;
    lock.unlock();
    std::this_thread::sleep_for(std::chrono::duration<double>(wait_s));
    lock.lock();
  }
}

ResponseCache::ResponseCache(std::string dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::string ResponseCache::digest(const std::string& key) {
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx",
                static_cast<unsigned long long>(fnv1a(key, 0xcbf29ce484222325ULL)),
                static_cast<unsigned long long>(fnv1a(key, 0x84222325cbf29ce4ULL)));
  return buf;
}

std::optional<nlohmann::json> ResponseCache::get(const std::string& key) const {
  const auto path = std::filesystem::path(dir_) / (digest(key) + ".json");
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return std::nullopt;
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // partial write or corruption: treat as a miss
  }
  if (doc.value("key", "") != key) {
    return std::nullopt;  // digest collision
  }
  return doc.at("response");
}

void ResponseCache::put(const std::string& key,
                        const nlohmann::json& response) const {
  nlohmann::ordered_json doc;
  doc["key"] = key;
  doc["response"] = response;
  const auto path = std::filesystem::path(dir_) / (digest(key) + ".json");
  // Write-then-rename keeps concurrent readers off partial documents.
  const auto tmp = path.string() + "." + std::to_string(::getpid()) + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << doc.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::string provider_cache_key(const std::string& operation,
                               const GeoPoint& origin,
                               const GeoPoint& destination,
                               const std::string& provider_kind) {
  return operation + "|" + coord_token(origin.lat) + "," +
         coord_token(origin.lon) + "|" + coord_token(destination.lat) + "," +
         coord_token(destination.lon) + "|" + provider_kind;
}

HttpProvider::HttpProvider(ProviderConfig cfg)
    : cfg_(std::move(cfg)), bucket_(cfg_.rate_limit_per_s) {
  if (!cfg_.cache_dir.empty()) {
    cache_.emplace(cfg_.cache_dir);
  }
}

HttpProvider::~HttpProvider() = default;

nlohmann::json HttpProvider::fetch(const std::string& base_url,
                                   const std::string& path,
                                   const std::string& operation,
                                   const GeoPoint& origin,
                                   const GeoPoint& destination,
                                   const std::string& key_env) const {
  const std::string cache_key =
      provider_cache_key(operation, origin, destination, "http");
  if (cache_) {
    if (auto hit = cache_->get(cache_key)) {
      return *hit;
    }
  }
  if (base_url.empty()) {
    throw ProviderUnavailableError("no base URL configured for " + operation);
  }

  bucket_.acquire();

  httplib::Client client(base_url);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  httplib::Headers headers;
  if (const char* key = std::getenv(key_env.c_str()); key && *key) {
    headers.emplace("X-Api-Key", key);
  }
  const std::string query = path + "?o_lat=" + coord_token(origin.lat) +
                            "&o_lon=" + coord_token(origin.lon) +
                            "&d_lat=" + coord_token(destination.lat) +
                            "&d_lon=" + coord_token(destination.lon);
  const httplib::Result res = client.Get(query, headers);
  if (!res) {
    throw ProviderUnavailableError("request failed for " + operation + ": " +
                                   httplib::to_string(res.error()));
  }
  if (res->status == 404 || res->status == 422) {
    throw NoRouteError("remote service found no route for " + operation);
  }
  if (res->status != 200) {
    throw ProviderUnavailableError(operation + " returned HTTP " +
                                   std::to_string(res->status));
  }
  nlohmann::json body;
  try {
    body = nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::exception& e) {
    throw ProviderUnavailableError(operation +
                                   " returned unparsable JSON: " + e.what());
  }
  if (cache_) {
    cache_->put(cache_key, body);
  }
  return body;
}

DrivingRoute HttpProvider::get_driving_way(const GeoPoint& origin,
                                           const GeoPoint& destination) const {
  return driving_route_from_json(fetch(cfg_.driving_base_url, "/driving",
                                       "driving", origin, destination,
                                       cfg_.driving_key_env));
}

TransitItinerary HttpProvider::get_transit_route(
    const GeoPoint& origin, const GeoPoint& destination) const {
  return transit_itinerary_from_json(fetch(cfg_.transit_base_url, "/transit",
                                           "transit", origin, destination,
                                           cfg_.transit_key_env));
}

RideEstimate HttpProvider::get_ride_estimate(
    const GeoPoint& origin, const GeoPoint& destination) const {
  return ride_estimate_from_json(fetch(cfg_.ride_base_url, "/ride", "ride",
                                       origin, destination,
                                       cfg_.ride_key_env));
}

RouteStep HttpProvider::get_walk_route(const GeoPoint& origin,
                                       const GeoPoint& destination) const {
  RouteStep step;
  step.mode = TravelMode::Walk;
  step.origin = origin;
  step.destination = destination;
  step.distance_m = haversine_distance(origin, destination);
  step.duration_s = step.distance_m / (kWalkKmh / 3.6);
  step.polyline = encode_polyline({origin, destination});
  return step;
}

}  // namespace urbanflow
