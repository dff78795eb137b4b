#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "urbanflow/providers.hpp"

namespace urbanflow {

struct RouterConfig {
  // A driving step is congested when live/free-flow reaches this ratio.
  double congestion_ratio = 1.5;
  // Longest leg that may be assigned Walk.
  double walk_max_m = 2000.0;
};

// Points where a route may switch transport mode: trip endpoints first,
// then congested-step boundaries in route order.
struct TransitionCandidates {
  std::vector<GeoPoint> starts;
  std::vector<GeoPoint> ends;
};

enum class OptionLabel { Transit, RideHail, Hybrid1, Hybrid2, Other };

std::string to_string(OptionLabel label);
OptionLabel option_label_from_string(const std::string& s);

// How an option was assembled; pure options are the single-provider
// baselines.
enum class OptionSource { PureTransit, PureRideHail, Mixed };

struct RouteOption {
  std::vector<RouteStep> steps;
  OptionLabel label = OptionLabel::Other;
  OptionSource source = OptionSource::Mixed;
  // Provenance indices pinning the deterministic output order.
  std::size_t start_index = 0;
  std::size_t end_index = 0;
  std::size_t assignment_index = 0;
};

struct AllOptionsFailedError : std::runtime_error {
  AllOptionsFailedError()
      : std::runtime_error("no transition assignment produced a route") {}
};

bool is_congested(const DrivingStep& step, const RouterConfig& cfg);

TransitionCandidates find_transition_candidates(const DrivingRoute& route,
                                                const GeoPoint& origin,
                                                const GeoPoint& destination,
                                                const RouterConfig& cfg);

// Routes for one (ts, te) transition pair. The degenerate pair
// (origin, destination) yields the two pure options; any other pair is
// split into legs origin->ts, ts->te, te->destination and every viable
// mode assignment is queried. Legs whose endpoints coincide (within 1 m)
// are dropped; assignments that reduce to the pure ride-hail option are
// skipped. A NoRouteError from a provider skips that assignment only.
// Throws AllOptionsFailedError when nothing survives.
std::vector<RouteOption> get_options(const GeoPoint& origin,
                                     const GeoPoint& ts, const GeoPoint& te,
                                     const GeoPoint& destination,
                                     const RouteProvider& provider,
                                     const RouterConfig& cfg);

// Full enumeration over all transition pairs, deduplicated by step
// mode/endpoint sequences; pure options first, then (ts, te, assignment)
// index order.
std::vector<RouteOption> compute_route_options(const GeoPoint& origin,
                                               const GeoPoint& destination,
                                               const RouteProvider& provider,
                                               const RouterConfig& cfg);

struct LabelingOutcome {
  // Set when fewer than two mixed options exist, so no hybrid labels were
  // assigned.
  bool no_mixed_options = false;
};

// Pure options keep their provider label. Among mixed options, Hybrid1 is
// the one with the largest transit distance share (ties: lower price, then
// lower duration) and Hybrid2 the largest ride-hail distance share (ties:
// lower duration, then lower price); the two labels never land on the same
// option. Everything else becomes Other.
LabelingOutcome label_options(std::vector<RouteOption>& options);

}  // namespace urbanflow
