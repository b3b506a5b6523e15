#pragma once

// The summary automaton: location guards replaced by lower bounds on the
// global clock t, so a single copy reproduces the local behavior of one
// process inside a network of any size.

#include <optional>
#include <set>
#include <vector>

#include "dtn/minreach.hpp"
#include "dtn/model.hpp"
#include "dtn/product.hpp"

namespace dtn {

enum class SummaryStatus {
  Verified,    // guard locations persistent, or every one certified floodable
  Unverified,  // some guard location has an invariant and no certificate (yet)
};

struct SummaryProvenance {
  std::size_t original_transition = 0;
  std::optional<LocationId> guard;  // the replaced location guard
  TimeBound bound;                  // minimal reach time of the guard, when replaced
};

struct SummaryAutomaton {
  Gta base;  // t-augmented, all location guards trivial
  std::vector<SummaryProvenance> provenance;  // parallel to base.transitions
  TimeBound horizon;                          // the search horizon of the minreach run
  SummaryStatus status = SummaryStatus::Unverified;

  /// Index of the summary transition built from an original transition.
  std::optional<std::size_t> from_original(std::size_t original) const;
};

/// Conjoins t >= MinReach(g) (t > when strict) to each transition guarded by
/// g; drops transitions whose guard location is unreachable.
SummaryAutomaton build_summary(const Gta& model, const MinReachMap& minreach);

struct TargetResult {
  LocationId location;
  bool reachable = false;
  TimeBound min_time;  // infinite when unreachable
};

struct ReachQueryOptions {
  std::size_t copies = 1;
  std::optional<TimeBound> horizon;  // defaults to the summary's horizon
  std::size_t node_limit = 5'000'000;
};

/// Symbolic reachability on the interleaving of `copies` copies of the
/// summary automaton sharing the clock t: whether some copy reaches each
/// target and the least time it does.
std::vector<TargetResult> check_reachability(const SummaryAutomaton& sa,
                                             const std::set<LocationId>& targets,
                                             const ReachQueryOptions& options = {});

/// Reachable location vectors of the copies-fold product of the summary.
std::set<LocationVector> reachable_vectors(const SummaryAutomaton& sa,
                                           const ReachQueryOptions& options);

}  // namespace dtn
