#include "dtn/zone_graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>

#include "dtn/error.hpp"

namespace dtn {

Dbm initial_zone(const Gta& model) {
  const std::size_t dim = model.clock_count() + 1;
  // validate() guarantees the zero valuation satisfies Inv(q̂).
  auto z = constrain(up(zone_zero(dim)), model.invariant(model.initial));
  if (!z) throw Error(ErrorCode::InitialInvariantViolated, "initial invariant is unsatisfiable");
  return *z;
}

std::optional<Dbm> successor_zone(const Gta& model, const Dbm& zone, const Transition& tr,
                                  const ClockConstraint& extra) {
  auto z = constrain(zone, tr.guard);
  if (!z) return std::nullopt;
  if (!extra.is_true()) {
    z = constrain(*z, extra);
    if (!z) return std::nullopt;
  }
  const ClockConstraint& inv = model.invariant(tr.target);
  auto after = constrain(reset(*z, tr.resets, model.time_augmented()), inv);
  if (!after) return std::nullopt;
  return constrain(up(*after), inv);
}

std::vector<std::pair<std::size_t, ZgNode>> successors(const Gta& model, const ZgNode& node) {
  std::vector<std::pair<std::size_t, ZgNode>> out;
  for (std::size_t i = 0; i < model.transitions.size(); ++i) {
    const auto& tr = model.transitions[i];
    if (tr.source != node.location) continue;
    if (auto z = successor_zone(model, node.zone, tr))
      out.emplace_back(i, ZgNode{tr.target, std::move(*z)});
  }
  return out;
}

std::set<LocationId> reach_locations_unguarded(const Gta& model) {
  const auto bounds = max_constants(model);
  std::vector<std::vector<Dbm>> passed(model.location_count());
  std::deque<ZgNode> waiting;
  waiting.push_back({model.initial, extrapolate(initial_zone(model), bounds)});
  std::set<LocationId> reached;

  while (!waiting.empty()) {
    ZgNode node = std::move(waiting.front());
    waiting.pop_front();
    auto& seen = passed[node.location.index];
    if (std::ranges::any_of(seen, [&](const Dbm& z) { return includes(z, node.zone); })) continue;
    std::erase_if(seen, [&](const Dbm& z) { return includes(node.zone, z); });
    seen.push_back(node.zone);
    reached.insert(node.location);
    for (auto& [idx, succ] : successors(model, node)) {
      succ.zone = extrapolate(succ.zone, bounds);
      waiting.push_back(std::move(succ));
    }
  }
  return reached;
}

TimeBound UgMinReachMap::delta_max() const {
  TimeBound best = TimeBound::infinity();
  for (const auto& b : bounds) {
    if (b.is_infinite()) continue;
    if (best.is_infinite() || b > best) best = b;
  }
  return best;
}

namespace {

struct Waiting {
  TimeBound t_bound;
  std::size_t seq;
  ZgNode node;
};

struct LaterFirst {
  bool operator()(const Waiting& a, const Waiting& b) const {
    if (a.t_bound != b.t_bound) return a.t_bound > b.t_bound;
    return a.seq > b.seq;
  }
};

// True if some atom can bound t (clock 0) from above.
bool bounds_time_above(const ClockConstraint& phi) {
  const ClockId t{0};
  return std::ranges::any_of(phi.atoms, [&](const AtomicConstraint& a) {
    const bool upper = a.relation == Relation::Less || a.relation == Relation::LessEq || a.relation == Relation::Equal;
    const bool lower = a.relation == Relation::Greater || a.relation == Relation::GreaterEq || a.relation == Relation::Equal;
    return (a.clock == t && upper) || (a.other == t && lower);
  });
}

bool time_only_bounded_below(const Gta& model) {
  for (const auto& inv : model.invariants)
    if (bounds_time_above(inv)) return false;
  return std::ranges::none_of(model.transitions, [](const Transition& tr) { return bounds_time_above(tr.guard); });
}

}  // namespace

UgMinReachMap minreach_unguarded(const Gta& plain, std::vector<TraceEntry>* trace) {
  UgMinReachMap result;
  result.bounds.assign(plain.location_count(), TimeBound::infinity());
  const std::set<LocationId> target = reach_locations_unguarded(unguard(plain));

  const Gta model = plain.time_augmented() ? plain : augment_with_t(plain);
  const ClockId t{0};
  std::vector<std::vector<Dbm>> popped(model.location_count());
  std::priority_queue<Waiting, std::vector<Waiting>, LaterFirst> waiting;
  std::size_t seq = 0;
  // Only the t lower bound matters when nothing bounds t from above; dropping
  // its upper bounds keeps a reset loop from yielding infinitely many zones at
  // equal t.
  const bool relax = time_only_bounded_below(model);
  auto normalize = [&](Dbm z) { return relax ? relax_time_upper(z) : z; };
  {
    Dbm z0 = normalize(initial_zone(model));
    waiting.push({lower_bound(z0, t), seq++, {model.initial, std::move(z0)}});
  }

  while (!waiting.empty() && result.reachable.size() < target.size()) {
    Waiting item = waiting.top();
    waiting.pop();
    auto& seen = popped[item.node.location.index];
    if (std::ranges::any_of(seen, [&](const Dbm& z) { return includes(z, item.node.zone); }))
      continue;
    seen.push_back(item.node.zone);
    if (trace)
      trace->push_back({item.node.location, render(item.node.zone, model.clocks), item.t_bound});
    if (result.bounds[item.node.location.index].is_infinite()) {
      result.bounds[item.node.location.index] = item.t_bound;
      result.reachable.insert(item.node.location);
    }
    for (auto& [idx, succ] : successors(model, item.node)) {
      succ.zone = normalize(std::move(succ.zone));
      const TimeBound tb = lower_bound(succ.zone, t);
      waiting.push({tb, seq++, std::move(succ)});
    }
  }
  return result;
}

}  // namespace dtn
