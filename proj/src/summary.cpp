#include "dtn/summary.hpp"

#include "dtn/error.hpp"

namespace dtn {

std::optional<std::size_t> SummaryAutomaton::from_original(std::size_t original) const {
  for (std::size_t i = 0; i < provenance.size(); ++i)
    if (provenance[i].original_transition == original) return i;
  return std::nullopt;
}

SummaryAutomaton build_summary(const Gta& model, const MinReachMap& minreach) {
  if (minreach.bounds.size() != model.location_count())
    throw Error(ErrorCode::InvalidArgument, "minreach map does not belong to this model");
  SummaryAutomaton sa;
  const Gta augmented = augment_with_t(model);
  sa.base = augmented;
  sa.base.transitions.clear();
  sa.horizon = minreach.ub;

  for (std::size_t i = 0; i < augmented.transitions.size(); ++i) {
    Transition tr = augmented.transitions[i];
    SummaryProvenance prov{i, tr.locguard, TimeBound::infinity()};
    if (tr.locguard) {
      const TimeBound b = minreach[*tr.locguard];
      if (b.is_infinite()) continue;
      prov.bound = b;
      tr.guard.atoms.push_back(
          {ClockId{0}, std::nullopt, b.strict() ? Relation::Greater : Relation::GreaterEq, b.value()});
      tr.locguard.reset();
    }
    sa.base.transitions.push_back(std::move(tr));
    sa.provenance.push_back(prov);
  }

  bool persistent = true;
  for (auto g : guards_of(model))
    if (minreach.reachable(g) && !is_persistent(model, g)) persistent = false;
  sa.status = persistent ? SummaryStatus::Verified : SummaryStatus::Unverified;
  return sa;
}

namespace {

ProductResult explore_summary(const SummaryAutomaton& sa, const ReachQueryOptions& options) {
  if (options.copies == 0) throw Error(ErrorCode::InvalidArgument, "copies must be at least 1");
  ProductSystem system(sa.base, options.copies, /*disjunctive_guards=*/false);
  ProductOptions po;
  po.horizon = options.horizon.value_or(sa.horizon);
  po.node_limit = options.node_limit;
  return explore_product(system, po);
}

}  // namespace

std::vector<TargetResult> check_reachability(const SummaryAutomaton& sa,
                                             const std::set<LocationId>& targets,
                                             const ReachQueryOptions& options) {
  const ProductResult r = explore_summary(sa, options);
  std::vector<TargetResult> out;
  for (auto q : targets) {
    if (q.index >= sa.base.location_count())
      throw Error(ErrorCode::UnknownLocation, "target #" + std::to_string(q.index) + " is not a location");
    const TimeBound tb = r.min_time[q.index];
    out.push_back({q, tb.is_finite(), tb});
  }
  return out;
}

std::set<LocationVector> reachable_vectors(const SummaryAutomaton& sa,
                                           const ReachQueryOptions& options) {
  return explore_summary(sa, options).reachable;
}

}  // namespace dtn
