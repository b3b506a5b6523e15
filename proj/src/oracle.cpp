#include "dtn/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "dtn/error.hpp"

namespace dtn {

namespace {

void check_size(std::size_t n, const OracleOptions& options) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "network size must be at least 1");
  if (n > options.max_processes)
    throw Error(ErrorCode::LimitExceeded, "network size " + std::to_string(n) + " exceeds the limit " +
                                              std::to_string(options.max_processes));
}

}  // namespace

OracleResult product_minreach(const Gta& model, std::size_t n, const OracleOptions& options) {
  validate(model);
  check_size(n, options);
  OracleResult out;
  out.n = n;
  out.horizon = upper_bound(model);
  ProductSystem system(model, n, /*disjunctive_guards=*/true);
  ProductResult r = explore_product(system, {out.horizon, options.node_limit});
  out.min_time = std::move(r.min_time);
  out.reachable = std::move(r.reachable);
  out.explored = r.explored;
  return out;
}

bool realizable_run_check(const Gta& model, const MinReachMap& minreach,
                          const std::vector<TimedStep>& run) {
  validate(model);
  if (minreach.bounds.size() != model.location_count())
    throw Error(ErrorCode::InvalidArgument, "minreach map does not belong to this model");
  std::vector<Rational> v(model.clock_count(), Rational(0));
  Rational now(0);
  LocationId q = model.initial;

  auto holds = [&](const ClockConstraint& cc) {
    return std::ranges::all_of(cc.atoms, [&](const AtomicConstraint& a) {
      Rational x = v[a.clock.index];
      if (a.other) x -= v[a.other->index];
      const Rational k(a.constant);
      switch (a.relation) {
        case Relation::Less: return x < k;
        case Relation::LessEq: return x <= k;
        case Relation::Equal: return x == k;
        case Relation::GreaterEq: return x >= k;
        case Relation::Greater: return x > k;
      }
      return false;
    });
  };
  auto invalid = [](std::size_t step, const std::string& why) {
    throw Error(ErrorCode::InvalidTrace, "step " + std::to_string(step) + ": " + why);
  };

  bool realizable = true;
  for (std::size_t s = 0; s < run.size(); ++s) {
    const TimedStep& step = run[s];
    if (step.delay < 0) invalid(s, "negative delay");
    if (step.transition >= model.transitions.size()) invalid(s, "no such transition");
    const Transition& tr = model.transitions[step.transition];
    if (tr.source != q) invalid(s, "transition does not leave the current location");
    // Invariants are convex, so checking both ends of the delay suffices.
    if (!holds(model.invariant(q))) invalid(s, "invariant violated before the delay");
    for (auto& c : v) c += step.delay;
    now += step.delay;
    if (!holds(model.invariant(q))) invalid(s, "invariant violated during the delay");
    if (!holds(tr.guard)) invalid(s, "guard not satisfied");
    for (auto r : tr.resets) v[r.index] = 0;
    if (!holds(model.invariant(tr.target))) invalid(s, "target invariant violated");
    q = tr.target;

    if (tr.locguard) {
      const TimeBound b = minreach[*tr.locguard];
      if (b.is_infinite()) realizable = false;
      else if (b.strict() ? !(now > Rational(b.value())) : now < Rational(b.value())) realizable = false;
    }
  }
  return realizable;
}

FloodCheckResult flooding_horizon_check(const Gta& model, LocationId q0, std::size_t n,
                                        std::optional<TimeBound> horizon,
                                        const OracleOptions& options) {
  validate(model);
  check_size(n, options);
  if (q0.index >= model.location_count())
    throw Error(ErrorCode::UnknownLocation, "location #" + std::to_string(q0.index) + " does not exist");
  FloodCheckResult out;
  const MinReachMap minreach = solve_minreach(model);
  out.from = minreach[q0];
  if (out.from.is_infinite()) {
    out.status = FloodStatus::NotReached;
    return out;
  }
  out.horizon = horizon.value_or(out.from + upper_bound(model).scaled(3));
  if (out.horizon.is_infinite() || out.horizon.strict())
    throw Error(ErrorCode::InvalidArgument, "flooding horizon must be finite and non-strict");
  const TimeBound idle_limit =
      out.from.strict() ? TimeBound::finite(out.from.value() + 1) : out.from;

  ProductSystem system(model, n, /*disjunctive_guards=*/true);
  auto occupied = [&](const LocationVector& locs) { return std::ranges::find(locs, q0) != locs.end(); };
  // Unoccupied configurations may not exist after the idle limit.
  auto monitor = [&](const LocationVector& locs, std::optional<Dbm> z) -> std::optional<Dbm> {
    if (!z) return z;
    z = constrain_time_upper(*z, out.horizon);
    if (z && !occupied(locs)) z = constrain_time_upper(*z, idle_limit);
    return z;
  };

  struct Node {
    LocationVector locs;
    Dbm zone;
  };
  std::deque<Node> waiting;
  std::map<LocationVector, std::vector<Dbm>> passed;
  auto push = [&](LocationVector locs, std::optional<Dbm> zone) {
    if (zone) waiting.push_back({std::move(locs), std::move(*zone)});
  };

  const LocationVector init = system.initial_locations();
  push(init, monitor(init, system.initial_zone()));
  while (!waiting.empty()) {
    Node node = std::move(waiting.front());
    waiting.pop_front();
    auto& seen = passed[node.locs];
    if (std::ranges::any_of(seen, [&](const Dbm& z) { return includes(z, node.zone); })) continue;
    std::erase_if(seen, [&](const Dbm& z) { return includes(node.zone, z); });
    seen.push_back(node.zone);
    if (++out.explored > options.node_limit)
      throw Error(ErrorCode::LimitExceeded, "flooding check exceeded the node limit");

    if (occupied(node.locs) && constrain_time_lower(node.zone, out.horizon)) {
      out.status = FloodStatus::Covered;
      return out;
    }
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t i = 0; i < model.transitions.size(); ++i) {
        auto z = monitor(node.locs, system.discrete_step(node.locs, node.zone, p, i));
        if (!z) continue;
        LocationVector next = node.locs;
        next[p] = model.transitions[i].target;
        // The instant of the step itself must respect the monitor too.
        z = monitor(next, z);
        if (!z) continue;
        push(next, monitor(next, system.delay(next, *z)));
      }
  }
  out.status = FloodStatus::Gap;
  return out;
}

}  // namespace dtn
