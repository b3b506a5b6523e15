#include "dtn/minreach.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "dtn/error.hpp"

namespace dtn {

TimeBound upper_bound(const Gta& model) {
  const UgMinReachMap ug = minreach_unguarded(unguard(model));
  const TimeBound delta_max = ug.delta_max();
  if (delta_max.is_infinite())
    throw Error(ErrorCode::UnboundedHorizon, "no location of '" + model.name + "' is reachable");
  return delta_max.scaled(static_cast<std::int64_t>(guards_of(model).size()) + 1);
}

namespace {

struct Node {
  LocationId location;
  Dbm zone;
  TimeBound t_bound;
  std::size_t parent;  // npos for the root
  std::size_t transition;
  std::optional<LocationId> enabled_by;
};

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

struct Entry {
  TimeBound t_bound;
  std::size_t seq;
  std::size_t node;
};

struct LaterFirst {
  bool operator()(const Entry& a, const Entry& b) const {
    if (a.t_bound != b.t_bound) return a.t_bound > b.t_bound;
    return a.seq > b.seq;
  }
};

struct PoppedZone {
  Dbm zone;
  std::size_t epoch;
};

class Search {
 public:
  Search(const Gta& plain, const MinReachOptions& options)
      : model_(augment_with_t(plain)), options_(options) {
    ub_ = upper_bound(plain);
    cut_ = horizon_cut(ub_);
    const std::size_t n = model_.location_count();
    result_.bounds.assign(n, TimeBound::infinity());
    result_.witnesses.assign(n, {});
    result_.ub = ub_;
    visited_.assign(n, false);
    popped_.assign(n, {});
    is_guard_.assign(n, false);
    for (auto g : guards_of(model_)) is_guard_[g.index] = true;
  }

  MinReachMap run() {
    if (auto z0 = constrain_time_upper(initial_zone(model_), cut_))
      push(model_.initial, std::move(*z0), kNoParent, 0, std::nullopt);

    while (!waiting_.empty() && visited_count_ < visited_.size()) {
      const Entry e = waiting_.top();
      waiting_.pop();
      expand(e.node);
    }
    return std::move(result_);
  }

 private:
  static constexpr ClockId kTime{0};

  void push(LocationId q, Dbm zone, std::size_t parent, std::size_t transition,
            std::optional<LocationId> enabled_by) {
    const TimeBound tb = lower_bound(zone, kTime);
    nodes_.push_back({q, std::move(zone), tb, parent, transition, enabled_by});
    waiting_.push({tb, seq_++, nodes_.size() - 1});
  }

  bool discard(std::size_t id) const {
    const Node& node = nodes_[id];
    for (const auto& p : popped_[node.location.index]) {
      if (p.epoch != enabled_epoch_) continue;
      if (options_.subsumption ? includes(p.zone, node.zone) : p.zone == node.zone) return true;
    }
    return false;
  }

  // Successor along tr from zone, with t >= MinReach(guard) when guarded.
  void follow(std::size_t from, const Dbm& zone, std::size_t tr_index,
              std::optional<LocationId> enabled_by) {
    const Transition& tr = model_.transitions[tr_index];
    std::optional<Dbm> source = zone;
    if (tr.locguard) source = constrain_time_lower(zone, result_.bounds[tr.locguard->index]);
    if (!source) return;
    auto succ = successor_zone(model_, *source, tr);
    if (!succ) return;
    succ = constrain_time_upper(*succ, cut_);
    if (!succ) return;
    push(tr.target, std::move(*succ), from, tr_index, enabled_by);
  }

  void expand(std::size_t id) {
    if (nodes_[id].t_bound > ub_) return;
    if (discard(id)) return;
    const LocationId q = nodes_[id].location;
    popped_[q.index].push_back({nodes_[id].zone, enabled_epoch_});
    if (options_.trace)
      options_.trace->push_back({q, render(nodes_[id].zone, model_.clocks), nodes_[id].t_bound});

    const bool first_visit = !visited_[q.index];
    if (first_visit) {
      visited_[q.index] = true;
      ++visited_count_;
      // Pops come in nondecreasing t order, so this is the minimum; it is
      // written exactly once per location.
      result_.bounds[q.index] = nodes_[id].t_bound;
      result_.witnesses[q.index] = witness(id);
      if (is_guard_[q.index]) ++enabled_epoch_;
    }

    const Dbm zone = nodes_[id].zone;
    for (std::size_t i = 0; i < model_.transitions.size(); ++i) {
      const Transition& tr = model_.transitions[i];
      if (tr.source != q) continue;
      if (!tr.locguard || visited_[tr.locguard->index])
        follow(id, zone, i, std::nullopt);
      else
        disabled_[*tr.locguard].push_back({i, id});
    }

    if (first_visit) {
      auto it = disabled_.find(q);
      if (it != disabled_.end()) {
        const auto entries = std::move(it->second);
        disabled_.erase(it);
        for (const auto& [tr_index, node_id] : entries)
          follow(node_id, nodes_[node_id].zone, tr_index, q);
      }
    }
  }

  std::vector<WitnessStep> witness(std::size_t id) const {
    std::vector<WitnessStep> steps;
    for (std::size_t cur = id; nodes_[cur].parent != kNoParent; cur = nodes_[cur].parent)
      steps.push_back({nodes_[cur].transition, nodes_[cur].t_bound, nodes_[cur].enabled_by});
    std::ranges::reverse(steps);
    return steps;
  }

  struct Disabled {
    std::size_t transition;
    std::size_t node;
  };

  Gta model_;
  MinReachOptions options_;
  TimeBound ub_;
  TimeBound cut_;
  MinReachMap result_;
  std::vector<Node> nodes_;
  std::priority_queue<Entry, std::vector<Entry>, LaterFirst> waiting_;
  std::size_t seq_ = 0;
  std::vector<bool> visited_;
  std::size_t visited_count_ = 0;
  std::vector<bool> is_guard_;
  std::size_t enabled_epoch_ = 0;
  std::vector<std::vector<PoppedZone>> popped_;
  std::map<LocationId, std::vector<Disabled>> disabled_;
};

}  // namespace

MinReachMap solve_minreach(const Gta& model, const MinReachOptions& options) {
  validate(model);
  return Search(model, options).run();
}

const std::vector<WitnessStep>& explain_minreach(const MinReachMap& map, LocationId q) {
  if (!map.reachable(q))
    throw Error(ErrorCode::Unreachable, "location #" + std::to_string(q.index) + " is unreachable");
  return map.witnesses.at(q.index);
}

}  // namespace dtn
