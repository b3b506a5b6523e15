#pragma once

// Brute-force baseline: explicit symbolic exploration of the finite network
// A^n with disjunctive location guards, for cross-checking the parameterized
// results at small n.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include <boost/rational.hpp>

#include "dtn/minreach.hpp"
#include "dtn/model.hpp"
#include "dtn/product.hpp"

namespace dtn {

struct OracleOptions {
  std::size_t max_processes = 4;
  std::size_t node_limit = 5'000'000;
};

struct OracleResult {
  std::size_t n = 0;
  TimeBound horizon;                    // exploration stops at t = horizon
  std::vector<TimeBound> min_time;      // per location; infinite past the horizon
  std::set<LocationVector> reachable;   // location vectors seen below the horizon
  std::size_t explored = 0;
};

/// Least time some process reaches each location in A^n, exploring up to
/// upper_bound(model). Throws LimitExceeded when n exceeds the configured
/// maximum or the node limit is hit.
OracleResult product_minreach(const Gta& model, std::size_t n, const OracleOptions& options = {});

using Rational = boost::rational<std::int64_t>;

struct TimedStep {
  Rational delay;          // time spent in the source location before the step
  std::size_t transition;  // model transition index
};

/// True when every guarded step of a single-process run of the unguarded
/// automaton fires at a global time >= MinReach(guard) (> for strict
/// bounds). Throws InvalidTrace when the run breaks the unguarded semantics.
bool realizable_run_check(const Gta& model, const MinReachMap& minreach,
                          const std::vector<TimedStep>& run);

enum class FloodStatus {
  Covered,     // some run keeps the location occupied up to the horizon
  Gap,         // every run leaves the location empty at some time before the horizon
  NotReached,  // the location is unreachable in networks of any size
};

struct FloodCheckResult {
  FloodStatus status = FloodStatus::Gap;
  TimeBound from;     // MinReach of the location
  TimeBound horizon;
  std::size_t explored = 0;

  bool covered() const { return status == FloodStatus::Covered; }
};

/// Searches A^n for a run in which q0 stays occupied from MinReach(q0) until
/// `horizon` (default MinReach(q0) + 3·UB). Unoccupied configurations are
/// only allowed up to MinReach(q0); a strict MinReach v+ is relaxed to v+1.
FloodCheckResult flooding_horizon_check(const Gta& model, LocationId q0, std::size_t n,
                                        std::optional<TimeBound> horizon = std::nullopt,
                                        const OracleOptions& options = {});

}  // namespace dtn
