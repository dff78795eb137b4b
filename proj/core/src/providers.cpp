#include "urbanflow/providers.hpp"

namespace urbanflow {

std::string to_string(TravelMode m) {
  switch (m) {
    case TravelMode::Walk: return "Walk";
    case TravelMode::Transit: return "Transit";
    case TravelMode::RideHail: return "RideHail";
    case TravelMode::Drive: return "Drive";
  }
  return "Walk";
}

TravelMode travel_mode_from_string(const std::string& s) {
  if (s == "Walk") return TravelMode::Walk;
  if (s == "Transit") return TravelMode::Transit;
  if (s == "RideHail") return TravelMode::RideHail;
  if (s == "Drive") return TravelMode::Drive;
  throw std::invalid_argument("unknown travel mode: " + s);
}

}  // namespace urbanflow
