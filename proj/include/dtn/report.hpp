#pragma once

// JSON documents and aligned text tables for analysis results.

#include <string>
#include <vector>

#include <json.hpp>

#include "dtn/flooding.hpp"
#include "dtn/minreach.hpp"
#include "dtn/oracle.hpp"
#include "dtn/summary.hpp"

namespace dtn {

using Json = nlohmann::ordered_json;

/// {"value": v, "strict": s}, or null when infinite.
Json bound_json(const TimeBound& b);

/// Number when exact, "v+e" style string otherwise.
Json eps_json(const EpsTime& e);

/// {"model", "ub", "minreach": [{"location", "bound", "strict"}], "witnesses"}.
/// Unreachable locations have "bound": null. Witnesses are listed only when
/// requested.
Json minreach_json(const Gta& model, const MinReachMap& map, bool witnesses);

/// The minreach layout with "n"; "ub" is the exploration horizon.
Json oracle_json(const Gta& model, const OracleResult& result);

/// The minreach layout for summary queries, with "copies".
Json query_json(const SummaryAutomaton& sa, const std::vector<TargetResult>& results,
                std::size_t copies);

/// Pop order of a search as [{"location", "zone", "t"}].
Json trace_json(const Gta& model, const std::vector<TraceEntry>& trace);

/// Certificates keyed by location name plus failures and overall status.
Json certificates_json(const Gta& model, const FloodingReport& report);

/// Left-aligned columns separated by two spaces; the first row is the header.
std::string format_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace dtn
