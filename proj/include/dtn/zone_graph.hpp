#pragma once

// Standard symbolic semantics of the unguarded automaton.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dtn/dbm.hpp"
#include "dtn/model.hpp"

namespace dtn {

struct ZgNode {
  LocationId location;
  Dbm zone;
};

/// One popped search node, recorded when tracing is requested.
struct TraceEntry {
  LocationId location;
  std::string zone;
  TimeBound t_bound;
};

/// (q̂, 0)↑ restricted to Inv(q̂).
Dbm initial_zone(const Gta& model);

/// up(reset(z ∧ g ∧ extra, r) ∧ Inv(q')) ∧ Inv(q'); nullopt when empty.
/// Location guards are not looked at.
std::optional<Dbm> successor_zone(const Gta& model, const Dbm& zone, const Transition& tr,
                                  const ClockConstraint& extra = {});

/// Symbolic successors along every outgoing transition (location guards
/// ignored). Each entry holds the transition index and the successor node.
std::vector<std::pair<std::size_t, ZgNode>> successors(const Gta& model, const ZgNode& node);

/// Locations reachable in the unguarded automaton, via the extrapolated zone graph.
std::set<LocationId> reach_locations_unguarded(const Gta& model);

struct UgMinReachMap {
  std::vector<TimeBound> bounds;  // per location; infinite when unreachable
  std::set<LocationId> reachable;

  /// Largest finite entry.
  TimeBound delta_max() const;
};

/// Minimal global time to reach each location in the unguarded automaton.
/// Uniform-cost search over the t-augmented zone graph ordered by the lower
/// bound of t, with per-location inclusion subsumption. Accepts plain or
/// t-augmented models.
UgMinReachMap minreach_unguarded(const Gta& model, std::vector<TraceEntry>* trace = nullptr);

}  // namespace dtn
