#pragma once

// Flooding certificates for guard locations with invariants: a resetting
// loop through the location that enough processes can run in staggered
// fashion to keep it occupied forever. Single-clock models only.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dtn/minreach.hpp"
#include "dtn/model.hpp"
#include "dtn/summary.hpp"

namespace dtn {

/// units + eps·ε for a positive infinitesimal ε. Strict constraints are
/// met at distance ε from their constant, so asap executions stay exact.
struct EpsTime {
  std::int64_t units = 0;
  std::int64_t eps = 0;

  friend constexpr auto operator<=>(const EpsTime&, const EpsTime&) = default;
  friend constexpr EpsTime operator+(EpsTime a, EpsTime b) { return {a.units + b.units, a.eps + b.eps}; }
  friend constexpr EpsTime operator-(EpsTime a, EpsTime b) { return {a.units - b.units, a.eps - b.eps}; }

  static EpsTime from(const TimeBound& b);  // b must be finite; strict adds one ε
  std::string to_string() const;            // "4", "4+e", "2-3e"
};

/// Clock values of the summary automaton's clocks, in base clock order.
using EpsValuation = std::vector<EpsTime>;

struct AsapStep {
  std::size_t transition = 0;  // summary transition index
  EpsTime delay;
  EpsValuation after;  // valuation right after the discrete step
};

struct AsapRun {
  LocationId end;
  std::vector<AsapStep> steps;
  EpsValuation final_valuation;
  EpsTime duration;
};

/// Executes `path` from (start, valuation) with the least delay before each
/// step. Throws Infeasible when some step can never fire, InvalidArgument
/// when the path is not connected.
AsapRun asap_run(const SummaryAutomaton& sa, LocationId start, const EpsValuation& valuation,
                 std::span<const std::size_t> path);

/// Resetting loop split at its first (i) and last (j) resetting transition:
/// psi1 = [0, i], psi2 = (i, j], psi3 = (j, end).
struct LoopDecomposition {
  std::vector<std::size_t> transitions;  // summary transition indices
  std::size_t first_reset = 0;           // i
  std::size_t last_reset = 0;            // j

  /// Throws InvalidArgument when the loop resets no clock.
  static LoopDecomposition split(const SummaryAutomaton& sa, std::vector<std::size_t> loop);
};

struct FloodingCertificate {
  LocationId target;
  std::vector<std::size_t> prefix;  // summary transitions from the initial location
  EpsValuation start;               // valuation reached by the asap prefix
  LoopDecomposition loop;           // empty for persistent locations
  EpsTime d1, d2, d3, T, v0x;
  std::size_t width = 1;
};

/// max{2, ceil((T+d2)/(T-d3))}; nullopt when T-d3 is not positive or is
/// infinitesimal while T+d2 is not.
std::optional<std::size_t> flooding_width(EpsTime T, EpsTime d2, EpsTime d3);

struct FloodingOptions {
  std::size_t max_cycles = 10'000;  // simple cycles tried per location
};

/// Certificate for q0 using the first simple resetting cycle through q0 that
/// meets T >= d1+d2+d3+v0x and T > d3. Persistent locations get width 1 and
/// no loop. Throws NotFound when no cycle qualifies, Unreachable when q0 is.
FloodingCertificate find_certificate(const Gta& model, const SummaryAutomaton& sa,
                                     const MinReachMap& minreach, LocationId q0,
                                     const FloodingOptions& options = {});

struct FloodingFailure {
  LocationId location;
  std::string reason;
};

struct FloodingReport {
  std::map<LocationId, FloodingCertificate> certificates;
  std::vector<FloodingFailure> failures;

  bool verified() const { return failures.empty(); }
};

/// Certificates for every reachable guard location. Throws
/// MultiClockUnsupported when a model with several clocks has a reachable
/// guard location with an invariant upper bound.
FloodingReport certify_all(const Gta& model, const SummaryAutomaton& sa, const MinReachMap& minreach,
                           const FloodingOptions& options = {});

/// m + sum of widths. Throws Uncertified when the report has failures and
/// InvalidArgument when m is 0.
std::size_t cutoff(const FloodingReport& report, std::size_t m);

/// Problems found when re-deriving a certificate from the summary automaton:
/// asap durations, split indices, both conditions and the width. Empty when
/// the certificate is sound.
std::vector<std::string> recheck_certificate(const Gta& model, const SummaryAutomaton& sa,
                                             const FloodingCertificate& cert);

}  // namespace dtn
