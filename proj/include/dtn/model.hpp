#pragma once

// Guarded timed automata: locations, clocks, guarded transitions, invariants.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dtn/time_bound.hpp"

namespace dtn {

/// Name of the reserved, never-reset global-time clock. In a time-augmented
/// model it is always clock 0.
inline constexpr std::string_view kGlobalClock = "t";

struct ClockId {
  std::size_t index = 0;
  friend auto operator<=>(const ClockId&, const ClockId&) = default;
};

struct LocationId {
  std::size_t index = 0;
  friend auto operator<=>(const LocationId&, const LocationId&) = default;
};

enum class Relation { Less, LessEq, Equal, GreaterEq, Greater };

std::string_view to_string(Relation rel);

/// `clock ~ constant` or, when `other` is set, `clock - other ~ constant`.
struct AtomicConstraint {
  ClockId clock;
  std::optional<ClockId> other;
  Relation relation = Relation::LessEq;
  std::int64_t constant = 0;

  friend bool operator==(const AtomicConstraint&, const AtomicConstraint&) = default;
};

/// Conjunction of atomic constraints; the empty conjunction is true.
struct ClockConstraint {
  std::vector<AtomicConstraint> atoms;

  bool is_true() const { return atoms.empty(); }
  ClockConstraint operator&&(const ClockConstraint& rhs) const;

  friend bool operator==(const ClockConstraint&, const ClockConstraint&) = default;
};

struct Transition {
  LocationId source;
  ClockConstraint guard;
  std::vector<ClockId> resets;
  std::optional<LocationId> locguard;  // nullopt is the trivial guard
  LocationId target;

  friend bool operator==(const Transition&, const Transition&) = default;
};

struct Gta {
  std::string name;
  std::vector<std::string> locations;
  LocationId initial;
  std::vector<std::string> clocks;
  std::vector<Transition> transitions;
  std::vector<ClockConstraint> invariants;  // one per location

  std::size_t location_count() const { return locations.size(); }
  std::size_t clock_count() const { return clocks.size(); }
  const ClockConstraint& invariant(LocationId q) const { return invariants.at(q.index); }
  const std::string& location_name(LocationId q) const { return locations.at(q.index); }

  std::optional<LocationId> find_location(std::string_view name) const;
  std::optional<ClockId> find_clock(std::string_view name) const;

  /// True when clock 0 is the global-time clock.
  bool time_augmented() const;

  friend bool operator==(const Gta&, const Gta&) = default;
};

/// Throws dtn::Error (DanglingReference, InitialInvariantViolated,
/// ReservedClockReset) naming the offending element.
void validate(const Gta& model);

/// The model with every location guard replaced by the trivial guard.
Gta unguard(const Gta& model);

/// Locations that occur as a non-trivial location guard.
std::set<LocationId> guards_of(const Gta& model);

/// Adds the global-time clock at index 0, shifting the other clocks by one.
Gta augment_with_t(const Gta& model);

/// Least d such that Inv(q) entails c <= d (strict when only c < d is
/// entailed); infinite when the invariant puts no upper bound on c.
TimeBound inv_upper_bound(const Gta& model, LocationId q, ClockId c);

/// No clock is bounded from above by Inv(q), so a process may idle in q forever.
bool is_persistent(const Gta& model, LocationId q);

/// Every guard location is persistent.
bool has_persistent_guards(const Gta& model);

/// Largest constant compared against each clock (diagonal constants count for
/// both clocks). Used for extrapolation.
std::vector<std::int64_t> max_constants(const Gta& model);

bool has_diagonal_constraints(const Gta& model);

}  // namespace dtn
