#include "dtn/product.hpp"

#include <algorithm>
#include <queue>

#include "dtn/error.hpp"

namespace dtn {

ProductSystem::ProductSystem(const Gta& model, std::size_t processes, bool disjunctive_guards)
    : model_(model), processes_(processes), disjunctive_(disjunctive_guards) {
  if (processes == 0) throw Error(ErrorCode::InvalidArgument, "a network needs at least one process");
  offset_ = model.time_augmented() ? 1 : 0;
  local_clocks_ = model.clock_count() - offset_;
  clock_names_.push_back(std::string(kGlobalClock));
  for (std::size_t p = 0; p < processes; ++p)
    for (std::size_t c = 0; c < local_clocks_; ++c)
      clock_names_.push_back(model.clocks[c + offset_] + "#" + std::to_string(p + 1));

  guards_.resize(processes);
  resets_.resize(processes);
  inv_.resize(processes);
  for (std::size_t p = 0; p < processes; ++p) {
    for (const auto& tr : model.transitions) {
      guards_[p].push_back(translate(tr.guard, p));
      std::vector<ClockId> r;
      for (auto c : tr.resets) r.push_back(map_clock(c, p));
      resets_[p].push_back(std::move(r));
    }
    for (const auto& inv : model.invariants) inv_[p].push_back(translate(inv, p));
  }
}

ClockId ProductSystem::map_clock(ClockId c, std::size_t process) const {
  if (offset_ == 1 && c.index == 0) return ClockId{0};
  return ClockId{1 + process * local_clocks_ + (c.index - offset_)};
}

ClockConstraint ProductSystem::translate(const ClockConstraint& cc, std::size_t process) const {
  ClockConstraint out = cc;
  for (auto& atom : out.atoms) {
    atom.clock = map_clock(atom.clock, process);
    if (atom.other) atom.other = map_clock(*atom.other, process);
  }
  return out;
}

LocationVector ProductSystem::initial_locations() const {
  return LocationVector(processes_, model_.initial);
}

ClockConstraint ProductSystem::invariants(const LocationVector& locs) const {
  ClockConstraint out;
  for (std::size_t p = 0; p < processes_; ++p) {
    const auto& inv = inv_[p][locs[p].index];
    out.atoms.insert(out.atoms.end(), inv.atoms.begin(), inv.atoms.end());
  }
  return out;
}

Dbm ProductSystem::initial_zone() const {
  auto z = delay(initial_locations(), zone_zero(dim()));
  if (!z) throw Error(ErrorCode::InitialInvariantViolated, "initial invariant is unsatisfiable");
  return *z;
}

std::optional<Dbm> ProductSystem::delay(const LocationVector& locs, const Dbm& zone) const {
  return constrain(up(zone), invariants(locs));
}

bool ProductSystem::guard_satisfied(const LocationVector& locs, std::size_t process,
                                    const Transition& tr) const {
  if (!tr.locguard || !disjunctive_) return true;
  for (std::size_t j = 0; j < processes_; ++j)
    if (j != process && locs[j] == *tr.locguard) return true;
  return false;
}

std::optional<Dbm> ProductSystem::discrete_step(const LocationVector& locs, const Dbm& zone,
                                                std::size_t process,
                                                std::size_t transition) const {
  const Transition& tr = model_.transitions[transition];
  if (tr.source != locs[process] || !guard_satisfied(locs, process, tr)) return std::nullopt;
  auto z = constrain(zone, guards_[process][transition]);
  if (!z) return std::nullopt;
  Dbm after = reset(*z, resets_[process][transition], true);
  return constrain(after, inv_[process][tr.target.index]);
}

namespace {

struct Entry {
  TimeBound t_bound;
  std::size_t seq;
  LocationVector locs;
  Dbm zone;
};

struct LaterFirst {
  bool operator()(const Entry& a, const Entry& b) const {
    if (a.t_bound != b.t_bound) return a.t_bound > b.t_bound;
    return a.seq > b.seq;
  }
};

}  // namespace

ProductResult explore_product(const ProductSystem& system, const ProductOptions& options) {
  if (options.horizon.is_infinite())
    throw Error(ErrorCode::InvalidArgument, "product exploration needs a finite horizon");
  const ClockId t{0};
  ProductResult result;
  result.min_time.assign(system.model().location_count(), TimeBound::infinity());

  std::priority_queue<Entry, std::vector<Entry>, LaterFirst> waiting;
  std::map<LocationVector, std::vector<Dbm>> passed;
  std::size_t seq = 0;
  auto push = [&](LocationVector locs, std::optional<Dbm> zone) {
    if (!zone) return;
    zone = constrain_time_upper(*zone, horizon_cut(options.horizon));
    if (!zone) return;
    const TimeBound tb = lower_bound(*zone, t);
    waiting.push({tb, seq++, std::move(locs), std::move(*zone)});
  };
  push(system.initial_locations(), system.initial_zone());

  while (!waiting.empty()) {
    Entry e = waiting.top();
    waiting.pop();
    auto& seen = passed[e.locs];
    if (std::ranges::any_of(seen, [&](const Dbm& z) { return includes(z, e.zone); })) continue;
    std::erase_if(seen, [&](const Dbm& z) { return includes(e.zone, z); });
    seen.push_back(e.zone);
    if (++result.explored > options.node_limit)
      throw Error(ErrorCode::LimitExceeded, "product exploration exceeded the node limit");

    result.reachable.insert(e.locs);
    for (auto q : e.locs)
      if (result.min_time[q.index].is_infinite()) result.min_time[q.index] = e.t_bound;

    for (std::size_t p = 0; p < system.processes(); ++p)
      for (std::size_t i = 0; i < system.model().transitions.size(); ++i) {
        auto z = system.discrete_step(e.locs, e.zone, p, i);
        if (!z) continue;
        LocationVector next = e.locs;
        next[p] = system.model().transitions[i].target;
        auto delayed = system.delay(next, *z);
        push(std::move(next), std::move(delayed));
      }
  }
  return result;
}

}  // namespace dtn
