#include "dtn/report.hpp"

#include <algorithm>

namespace dtn {

namespace {

Json location_entry(const std::string& name, const TimeBound& b) {
  Json j;
  j["location"] = name;
  if (b.is_finite()) {
    j["bound"] = b.value();
    j["strict"] = b.strict();
  } else {
    j["bound"] = nullptr;
  }
  return j;
}

Json bounds_array(const Gta& model, const std::vector<TimeBound>& bounds) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < model.location_count(); ++i) arr.push_back(location_entry(model.locations[i], bounds[i]));
  return arr;
}

std::string edge_text(const Gta& model, std::size_t idx) {
  const auto& tr = model.transitions.at(idx);
  return model.location_name(tr.source) + " -> " + model.location_name(tr.target);
}

}  // namespace

Json bound_json(const TimeBound& b) {
  if (b.is_infinite()) return nullptr;
  Json j;
  j["value"] = b.value();
  j["strict"] = b.strict();
  return j;
}

Json eps_json(const EpsTime& e) {
  if (e.eps == 0) return e.units;
  return e.to_string();
}

Json minreach_json(const Gta& model, const MinReachMap& map, bool witnesses) {
  Json j;
  j["model"] = model.name;
  j["ub"] = bound_json(map.ub);
  j["minreach"] = bounds_array(model, map.bounds);
  Json w = Json::object();
  if (witnesses) {
    for (std::size_t q = 0; q < model.location_count(); ++q) {
      if (!map.reachable(LocationId{q})) continue;
      Json steps = Json::array();
      for (const auto& step : map.witnesses[q]) {
        Json s;
        s["transition"] = step.transition;
        s["edge"] = edge_text(model, step.transition);
        s["t"] = bound_json(step.t_bound);
        s["enabled_by"] = step.enabled_by ? Json(model.location_name(*step.enabled_by)) : Json(nullptr);
        steps.push_back(std::move(s));
      }
      w[model.locations[q]] = std::move(steps);
    }
  }
  j["witnesses"] = std::move(w);
  return j;
}

Json oracle_json(const Gta& model, const OracleResult& result) {
  Json j;
  j["model"] = model.name;
  j["n"] = result.n;
  j["ub"] = bound_json(result.horizon);
  j["minreach"] = bounds_array(model, result.min_time);
  return j;
}

Json query_json(const SummaryAutomaton& sa, const std::vector<TargetResult>& results,
                std::size_t copies) {
  Json j;
  j["model"] = sa.base.name;
  j["copies"] = copies;
  j["ub"] = bound_json(sa.horizon);
  Json arr = Json::array();
  for (const auto& r : results) {
    Json e = location_entry(sa.base.location_name(r.location), r.min_time);
    e["reachable"] = r.reachable;
    arr.push_back(std::move(e));
  }
  j["minreach"] = std::move(arr);
  return j;
}

Json trace_json(const Gta& model, const std::vector<TraceEntry>& trace) {
  Json arr = Json::array();
  for (const auto& e : trace) {
    Json j;
    j["location"] = model.location_name(e.location);
    j["zone"] = e.zone;
    j["t"] = bound_json(e.t_bound);
    arr.push_back(std::move(j));
  }
  return arr;
}

Json certificates_json(const Gta& model, const FloodingReport& report) {
  Json j;
  j["model"] = model.name;
  j["status"] = report.verified() ? "verified" : "unverified";
  Json certs = Json::object();
  for (const auto& [q, c] : report.certificates) {
    Json e;
    e["width"] = c.width;
    e["prefix"] = c.prefix;
    if (!c.loop.transitions.empty()) {
      e["loop"] = c.loop.transitions;
      e["first_reset"] = c.loop.first_reset;
      e["last_reset"] = c.loop.last_reset;
      e["d1"] = eps_json(c.d1);
      e["d2"] = eps_json(c.d2);
      e["d3"] = eps_json(c.d3);
      e["T"] = eps_json(c.T);
      e["v0x"] = eps_json(c.v0x);
    }
    certs[model.location_name(q)] = std::move(e);
  }
  j["certificates"] = std::move(certs);
  Json fails = Json::array();
  for (const auto& f : report.failures) {
    Json e;
    e["location"] = model.location_name(f.location);
    e["reason"] = f.reason;
    fails.push_back(std::move(e));
  }
  j["failures"] = std::move(fails);
  return j;
}

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + '\n';
  }
  return out;
}

}  // namespace dtn
