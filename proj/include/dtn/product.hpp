#pragma once

// Explicit composition of n copies of an automaton with one shared global
// clock t (product clock 0) and per-process copies of the other clocks.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "dtn/dbm.hpp"
#include "dtn/model.hpp"

namespace dtn {

using LocationVector = std::vector<LocationId>;

class ProductSystem {
 public:
  /// With `disjunctive_guards`, a guarded step of process i needs another
  /// process j != i in the guard location; otherwise location guards are ignored.
  ProductSystem(const Gta& model, std::size_t processes, bool disjunctive_guards);

  const Gta& model() const { return model_; }
  std::size_t processes() const { return processes_; }
  std::size_t dim() const { return clock_names_.size() + 1; }
  const std::vector<std::string>& clock_names() const { return clock_names_; }

  LocationVector initial_locations() const;
  /// Zero valuation, delayed, within every initial invariant.
  Dbm initial_zone() const;

  /// Discrete step of `process` along `transition`, without delay. Returns
  /// nullopt when the step is disabled.
  std::optional<Dbm> discrete_step(const LocationVector& locs, const Dbm& zone,
                                   std::size_t process, std::size_t transition) const;

  /// Delay closure within the invariants of every process.
  std::optional<Dbm> delay(const LocationVector& locs, const Dbm& zone) const;

  bool guard_satisfied(const LocationVector& locs, std::size_t process,
                       const Transition& tr) const;

  /// Conjunction of the invariants of all processes at locs.
  ClockConstraint invariants(const LocationVector& locs) const;

 private:
  ClockConstraint translate(const ClockConstraint& cc, std::size_t process) const;
  ClockId map_clock(ClockId c, std::size_t process) const;

  Gta model_;
  std::size_t processes_;
  bool disjunctive_;
  std::size_t local_clocks_;  // model clocks other than t
  std::size_t offset_;        // 1 if the model carries t at clock 0
  std::vector<std::string> clock_names_;
  std::vector<std::vector<ClockConstraint>> guards_;      // [process][transition]
  std::vector<std::vector<std::vector<ClockId>>> resets_;  // [process][transition]
  std::vector<std::vector<ClockConstraint>> inv_;          // [process][location]
};

struct ProductOptions {
  TimeBound horizon = TimeBound::infinity();  // every zone is cut to t <= horizon
  std::size_t node_limit = 5'000'000;
};

struct ProductResult {
  std::vector<TimeBound> min_time;  // per location: least t at which some process is there
  std::set<LocationVector> reachable;
  std::size_t explored = 0;
};

/// Uniform-cost symbolic search ordered by the lower bound of t, with
/// inclusion subsumption per location vector. The horizon must be finite.
/// Throws LimitExceeded past node_limit.
ProductResult explore_product(const ProductSystem& system, const ProductOptions& options);

}  // namespace dtn
