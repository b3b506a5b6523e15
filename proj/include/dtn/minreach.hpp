#pragma once

// Minimum-time reachability for the whole family of networks A^n, n >= 1,
// computed on a single copy of the automaton extended with a global clock.

#include <optional>
#include <vector>

#include "dtn/model.hpp"
#include "dtn/time_bound.hpp"
#include "dtn/zone_graph.hpp"

namespace dtn {

/// One step of a minimal-time symbolic path.
struct WitnessStep {
  std::size_t transition = 0;         // index into the model's transitions
  TimeBound t_bound;                  // lower bound of t in the node reached
  std::optional<LocationId> enabled_by;  // set when the step waited for its guard location
};

struct MinReachMap {
  std::vector<TimeBound> bounds;  // per location; infinite when unreachable
  std::vector<std::vector<WitnessStep>> witnesses;  // per location; empty when unreachable
  TimeBound ub;                   // time horizon used by the search

  const TimeBound& operator[](LocationId q) const { return bounds.at(q.index); }
  bool reachable(LocationId q) const { return bounds.at(q.index).is_finite(); }
};

/// delta_max * (|Guards| + 1), where delta_max is the largest unguarded
/// minimal reach time. Throws UnboundedHorizon if no location is reachable.
TimeBound upper_bound(const Gta& model);

struct MinReachOptions {
  /// Discard a node whose zone is included in a zone already popped at the
  /// same location with the same set of enabled guard locations. When off,
  /// only exact duplicates are discarded.
  bool subsumption = true;
  std::vector<TraceEntry>* trace = nullptr;
};

/// Minimal reach time of every location in networks of arbitrary size.
/// The input is a plain (not t-augmented) model.
MinReachMap solve_minreach(const Gta& model, const MinReachOptions& options = {});

/// The witness path to q, rendered as its transition list with t bounds.
/// Throws Unreachable when q has an infinite entry.
const std::vector<WitnessStep>& explain_minreach(const MinReachMap& map, LocationId q);

}  // namespace dtn
