#include "urbanflow/router.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>

namespace urbanflow {

namespace {

constexpr double kSamePointM = 1.0;

bool same_point(const GeoPoint& a, const GeoPoint& b) {
  return haversine_distance(a, b) <= kSamePointM;
}

enum class LegMode { Walk, Transit, RideHail };

RouteStep ride_step(const RideEstimate& est, const GeoPoint& a,
                    const GeoPoint& b) {
  RouteStep step;
  step.mode = TravelMode::RideHail;
  step.origin = a;
  step.destination = b;
  step.duration_s = est.duration_s;
  step.distance_m = est.distance_m;
  step.wait_s = est.pickup_wait_s;
  step.price_brl = est.price_brl;
  step.polyline = est.polyline;
  return step;
}

// Appends the steps of one leg under the given mode.
void append_leg(std::vector<RouteStep>& steps, LegMode mode, const GeoPoint& a,
                const GeoPoint& b, const RouteProvider& provider) {
  switch (mode) {
    case LegMode::Walk:
      steps.push_back(provider.get_walk_route(a, b));
      break;
    case LegMode::Transit: {
      const TransitItinerary it = provider.get_transit_route(a, b);
      steps.insert(steps.end(), it.steps.begin(), it.steps.end());
      break;
    }
    case LegMode::RideHail:
      steps.push_back(ride_step(provider.get_ride_estimate(a, b), a, b));
      break;
  }
}

// Rounded to codec precision so dedup keys are stable.
std::int64_t round5(double deg) {
  return static_cast<std::int64_t>(std::llround(deg * 1e5));
}

std::string dedup_key(const RouteOption& option) {
  std::string key;
  for (const auto& step : option.steps) {
    key += to_string(step.mode);
    key += ':';
    key += std::to_string(round5(step.origin.lat));
    key += ',';
    key += std::to_string(round5(step.origin.lon));
    key += "->";
    key += std::to_string(round5(step.destination.lat));
    key += ',';
    key += std::to_string(round5(step.destination.lon));
    key += ';';
  }
  return key;
}

double total_distance(const RouteOption& option) {
  double d = 0.0;
  for (const auto& s : option.steps) {
    d += s.distance_m;
  }
  return d;
}

double mode_distance(const RouteOption& option, TravelMode mode) {
  double d = 0.0;
  for (const auto& s : option.steps) {
    if (s.mode == mode) {
      d += s.distance_m;
    }
  }
  return d;
}

double step_price_sum(const RouteOption& option) {
  double p = 0.0;
  for (const auto& s : option.steps) {
    p += s.price_brl;
  }
  return p;
}

double motion_duration(const RouteOption& option) {
  double t = 0.0;
  for (const auto& s : option.steps) {
    t += s.duration_s;
  }
  return t;
}

}  // namespace

std::string to_string(OptionLabel label) {
  switch (label) {
    case OptionLabel::Transit: return "Transit";
    case OptionLabel::RideHail: return "RideHail";
    case OptionLabel::Hybrid1: return "Hybrid1";
    case OptionLabel::Hybrid2: return "Hybrid2";
    case OptionLabel::Other: return "Other";
  }
  return "Other";
}

OptionLabel option_label_from_string(const std::string& s) {
  if (s == "Transit") return OptionLabel::Transit;
  if (s == "RideHail") return OptionLabel::RideHail;
  if (s == "Hybrid1") return OptionLabel::Hybrid1;
  if (s == "Hybrid2") return OptionLabel::Hybrid2;
  if (s == "Other") return OptionLabel::Other;
  throw std::invalid_argument("unknown option label: " + s);
}

bool is_congested(const DrivingStep& step, const RouterConfig& cfg) {
  return step.live_duration_s / step.free_flow_duration_s >=
         cfg.congestion_ratio;
}

TransitionCandidates find_transition_candidates(const DrivingRoute& route,
                                                const GeoPoint& origin,
                                                const GeoPoint& destination,
                                                const RouterConfig& cfg) {
  TransitionCandidates candidates;
  candidates.starts.push_back(origin);
  candidates.ends.push_back(destination);
  for (const auto& step : route.steps) {
    if (is_congested(step, cfg)) {
      candidates.starts.push_back(step.origin);
      candidates.ends.push_back(step.destination);
    }
  }
  return candidates;
}

std::vector<RouteOption> get_options(const GeoPoint& origin,
                                     const GeoPoint& ts, const GeoPoint& te,
                                     const GeoPoint& destination,
                                     const RouteProvider& provider,
                                     const RouterConfig& cfg) {
  std::vector<RouteOption> options;

  if (same_point(ts, origin) && same_point(te, destination)) {
    // The trip endpoints themselves: emit the traditional single-provider
    // routes.
    try {
      RouteOption transit;
      transit.source = OptionSource::PureTransit;
      const TransitItinerary it = provider.get_transit_route(origin, destination);
      transit.steps = it.steps;
      transit.assignment_index = 0;
      options.push_back(std::move(transit));
    } catch (const NoRouteError&) {
    }
    try {
      RouteOption ride;
      ride.source = OptionSource::PureRideHail;
      ride.steps.push_back(ride_step(
          provider.get_ride_estimate(origin, destination), origin, destination));
      ride.assignment_index = 1;
      options.push_back(std::move(ride));
    } catch (const NoRouteError&) {
    }
    if (options.empty()) {
      throw AllOptionsFailedError{};
    }
    return options;
  }

  struct Leg {
    GeoPoint from;
    GeoPoint to;
    std::vector<LegMode> modes;
  };
  std::vector<Leg> legs;
  auto add_leg = [&](const GeoPoint& a, const GeoPoint& b, bool middle) {
    if (same_point(a, b)) {
      return;  // degenerate leg
    }
    Leg leg{a, b, {}};
    if (middle) {
      leg.modes = {LegMode::Transit, LegMode::RideHail};
    } else {
      if (haversine_distance(a, b) <= cfg.walk_max_m) {
        leg.modes.push_back(LegMode::Walk);
      }
      leg.modes.push_back(LegMode::RideHail);
    }
    legs.push_back(std::move(leg));
  };
  add_leg(origin, ts, false);
  add_leg(ts, te, true);
  add_leg(te, destination, false);

  if (legs.empty()) {
    throw AllOptionsFailedError{};
  }

  // Enumerate mode assignments in nested order, first listed mode first.
  std::vector<std::size_t> picks(legs.size(), 0);
  std::size_t assignment_index = 0;
  while (true) {
    bool any_walk = false;
    bool any_transit = false;
    for (std::size_t i = 0; i < legs.size(); ++i) {
      any_walk |= legs[i].modes[picks[i]] == LegMode::Walk;
      any_transit |= legs[i].modes[picks[i]] == LegMode::Transit;
    }
    // All-ride-hail with no walk duplicates the pure ride-hail option.
    if (any_walk || any_transit) {
      try {
        RouteOption option;
        option.source = OptionSource::Mixed;
        option.assignment_index = assignment_index;
        for (std::size_t i = 0; i < legs.size(); ++i) {
          append_leg(option.steps, legs[i].modes[picks[i]], legs[i].from,
                     legs[i].to, provider);
        }
        options.push_back(std::move(option));
      } catch (const NoRouteError&) {
        // This assignment is not routable; others may be.
      }
    }
    ++assignment_index;
    // Advance the odometer; stop once the most significant digit wraps.
    std::size_t i = legs.size();
    bool done = false;
    while (true) {
      if (i == 0) {
        done = true;
        break;
      }
      --i;
      if (++picks[i] < legs[i].modes.size()) {
        break;
      }
      picks[i] = 0;
    }
    if (done) {
      break;
    }
  }

  if (options.empty()) {
    throw AllOptionsFailedError{};
  }
  return options;
}

std::vector<RouteOption> compute_route_options(const GeoPoint& origin,
                                               const GeoPoint& destination,
                                               const RouteProvider& provider,
                                               const RouterConfig& cfg) {
  const DrivingRoute reference = provider.get_driving_way(origin, destination);
  const TransitionCandidates candidates =
      find_transition_candidates(reference, origin, destination, cfg);

  std::vector<RouteOption> all;
  for (std::size_t si = 0; si < candidates.starts.size(); ++si) {
    for (std::size_t ei = 0; ei < candidates.ends.size(); ++ei) {
      try {
        auto options = get_options(origin, candidates.starts[si],
                                   candidates.ends[ei], destination, provider,
                                   cfg);
        for (auto& option : options) {
          option.start_index = si;
          option.end_index = ei;
          all.push_back(std::move(option));
        }
      } catch (const AllOptionsFailedError&) {
        // This pair produced nothing; the union may still be non-empty.
      }
    }
  }

  // Pure options first, then provenance order.
  std::stable_sort(all.begin(), all.end(),
                   [](const RouteOption& a, const RouteOption& b) {
                     const bool pa = a.source != OptionSource::Mixed;
                     const bool pb = b.source != OptionSource::Mixed;
                     if (pa != pb) {
                       return pa;
                     }
                     if (a.start_index != b.start_index) {
                       return a.start_index < b.start_index;
                     }
                     if (a.end_index != b.end_index) {
                       return a.end_index < b.end_index;
                     }
                     return a.assignment_index < b.assignment_index;
                   });

  std::vector<RouteOption> unique;
  std::set<std::string> seen;
  for (auto& option : all) {
    if (seen.insert(dedup_key(option)).second) {
      unique.push_back(std::move(option));
    }
  }
  if (unique.empty()) {
    throw AllOptionsFailedError{};
  }
  return unique;
}

LabelingOutcome label_options(std::vector<RouteOption>& options) {
  LabelingOutcome outcome;
  std::vector<std::size_t> mixed;
  for (std::size_t i = 0; i < options.size(); ++i) {
    auto& option = options[i];
    if (option.source == OptionSource::PureTransit) {
      option.label = OptionLabel::Transit;
      continue;
    }
    if (option.source == OptionSource::PureRideHail) {
      option.label = OptionLabel::RideHail;
      continue;
    }
    option.label = OptionLabel::Other;
    std::set<TravelMode> modes;
    for (const auto& s : option.steps) {
      modes.insert(s.mode);
    }
    if (modes.size() >= 2) {
      mixed.push_back(i);
    }
  }

  if (mixed.size() < 2) {
    outcome.no_mixed_options = true;
    return outcome;
  }

  auto share = [&](std::size_t idx, TravelMode mode) {
    const double total = total_distance(options[idx]);
    return total > 0.0 ? mode_distance(options[idx], mode) / total : 0.0;
  };

  // Ranking for Hybrid1: transit share desc, price asc, duration asc.
  auto hybrid1_rank = std::vector<std::size_t>(mixed);
  std::stable_sort(hybrid1_rank.begin(), hybrid1_rank.end(),
                   [&](std::size_t a, std::size_t b) {
                     const double sa = share(a, TravelMode::Transit);
                     const double sb = share(b, TravelMode::Transit);
                     if (sa != sb) {
                       return sa > sb;
                     }
                     const double pa = step_price_sum(options[a]);
                     const double pb = step_price_sum(options[b]);
                     if (pa != pb) {
                       return pa < pb;
                     }
                     return motion_duration(options[a]) <
                            motion_duration(options[b]);
                   });
  // Ranking for Hybrid2: ride-hail share desc, duration asc, price asc.
  auto hybrid2_rank = std::vector<std::size_t>(mixed);
  std::stable_sort(hybrid2_rank.begin(), hybrid2_rank.end(),
                   [&](std::size_t a, std::size_t b) {
                     const double sa = share(a, TravelMode::RideHail);
                     const double sb = share(b, TravelMode::RideHail);
                     if (sa != sb) {
                       return sa > sb;
                     }
                     const double da = motion_duration(options[a]);
                     const double db = motion_duration(options[b]);
                     if (da != db) {
                       return da < db;
                     }
                     return step_price_sum(options[a]) <
                            step_price_sum(options[b]);
                   });

  const std::size_t h1 = hybrid1_rank.front();
  std::size_t h2 = hybrid2_rank.front();
  if (h2 == h1) {
    h2 = hybrid2_rank[1];  // runner-up keeps the labels distinct
  }
  options[h1].label = OptionLabel::Hybrid1;
  options[h2].label = OptionLabel::Hybrid2;
  return outcome;
}

}  // namespace urbanflow
