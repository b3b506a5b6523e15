#include "dtn/model.hpp"

#include <algorithm>
#include <limits>

#include "dtn/error.hpp"

namespace dtn {

std::string_view to_string(Relation rel) {
  switch (rel) {
    case Relation::Less: return "<";
    case Relation::LessEq: return "<=";
    case Relation::Equal: return "==";
    case Relation::GreaterEq: return ">=";
    case Relation::Greater: return ">";
  }
  return "?";
}

ClockConstraint ClockConstraint::operator&&(const ClockConstraint& rhs) const {
  ClockConstraint out = *this;
  out.atoms.insert(out.atoms.end(), rhs.atoms.begin(), rhs.atoms.end());
  return out;
}

std::optional<LocationId> Gta::find_location(std::string_view name) const {
  for (std::size_t i = 0; i < locations.size(); ++i)
    if (locations[i] == name) return LocationId{i};
  return std::nullopt;
}

std::optional<ClockId> Gta::find_clock(std::string_view name) const {
  for (std::size_t i = 0; i < clocks.size(); ++i)
    if (clocks[i] == name) return ClockId{i};
  return std::nullopt;
}

bool Gta::time_augmented() const { return !clocks.empty() && clocks.front() == kGlobalClock; }

namespace {

bool holds_at_zero(const AtomicConstraint& atom) {
  // Every clock is 0, so both single and diagonal atoms compare 0 with d.
  const std::int64_t d = atom.constant;
  switch (atom.relation) {
    case Relation::Less: return 0 < d;
    case Relation::LessEq: return 0 <= d;
    case Relation::Equal: return d == 0;
    case Relation::GreaterEq: return 0 >= d;
    case Relation::Greater: return 0 > d;
  }
  return false;
}

[[noreturn]] void dangling(const std::string& what) {
  throw Error(ErrorCode::DanglingReference, what);
}

void check_constraint(const Gta& model, const ClockConstraint& cc, const std::string& where) {
  for (const auto& atom : cc.atoms) {
    if (atom.clock.index >= model.clock_count())
      dangling(where + ": clock #" + std::to_string(atom.clock.index) + " is not declared");
    if (atom.other) {
      if (atom.other->index >= model.clock_count())
        dangling(where + ": clock #" + std::to_string(atom.other->index) + " is not declared");
      if (*atom.other == atom.clock)
        throw Error(ErrorCode::InvalidArgument,
                    where + ": difference constraint on a single clock '" +
                        model.clocks[atom.clock.index] + "'");
    }
    if (atom.constant < 0)
      throw Error(ErrorCode::InvalidArgument, where + ": negative constant");
  }
}

std::string edge_label(const Gta& model, std::size_t i) {
  const auto& tr = model.transitions[i];
  auto name = [&](LocationId q) {
    return q.index < model.location_count() ? model.locations[q.index]
                                            : "#" + std::to_string(q.index);
  };
  return "edge " + std::to_string(i) + " (" + name(tr.source) + " -> " + name(tr.target) + ")";
}

}  // namespace

void validate(const Gta& model) {
  if (model.locations.empty()) throw Error(ErrorCode::InvalidArgument, "model has no locations");
  if (model.invariants.size() != model.locations.size())
    throw Error(ErrorCode::InvalidArgument, "invariant table does not match the location list");
  if (model.initial.index >= model.location_count())
    dangling("initial location #" + std::to_string(model.initial.index) + " is not declared");

  for (std::size_t i = 0; i < model.locations.size(); ++i)
    for (std::size_t j = i + 1; j < model.locations.size(); ++j)
      if (model.locations[i] == model.locations[j])
        throw Error(ErrorCode::InvalidArgument, "duplicate location '" + model.locations[i] + "'");
  for (std::size_t i = 0; i < model.clocks.size(); ++i) {
    if (model.clocks[i] == kGlobalClock && i != 0)
      throw Error(ErrorCode::InvalidArgument, "the global clock 't' must be clock 0");
    for (std::size_t j = i + 1; j < model.clocks.size(); ++j)
      if (model.clocks[i] == model.clocks[j])
        throw Error(ErrorCode::InvalidArgument, "duplicate clock '" + model.clocks[i] + "'");
  }

  for (std::size_t q = 0; q < model.locations.size(); ++q)
    check_constraint(model, model.invariants[q], "invariant of '" + model.locations[q] + "'");

  for (std::size_t i = 0; i < model.transitions.size(); ++i) {
    const auto& tr = model.transitions[i];
    const std::string label = edge_label(model, i);
    if (tr.source.index >= model.location_count()) dangling(label + ": unknown source");
    if (tr.target.index >= model.location_count()) dangling(label + ": unknown target");
    if (tr.locguard && tr.locguard->index >= model.location_count())
      dangling(label + ": unknown location guard");
    check_constraint(model, tr.guard, label + " guard");
    for (auto c : tr.resets) {
      if (c.index >= model.clock_count()) dangling(label + ": reset of an undeclared clock");
      if (model.time_augmented() && c.index == 0)
        throw Error(ErrorCode::ReservedClockReset, label + " resets the global clock 't'");
    }
  }

  for (const auto& atom : model.invariant(model.initial).atoms)
    if (!holds_at_zero(atom))
      throw Error(ErrorCode::InitialInvariantViolated,
                  "initial location '" + model.location_name(model.initial) +
                      "' has an invariant the zero valuation violates");
}

Gta unguard(const Gta& model) {
  Gta out = model;
  for (auto& tr : out.transitions) tr.locguard.reset();
  return out;
}

std::set<LocationId> guards_of(const Gta& model) {
  std::set<LocationId> out;
  for (const auto& tr : model.transitions)
    if (tr.locguard) out.insert(*tr.locguard);
  return out;
}

Gta augment_with_t(const Gta& model) {
  if (model.find_clock(kGlobalClock))
    throw Error(ErrorCode::AlreadyAugmented, "model '" + model.name + "' already has clock 't'");
  Gta out = model;
  out.clocks.insert(out.clocks.begin(), std::string(kGlobalClock));
  auto shift = [](ClockConstraint& cc) {
    for (auto& atom : cc.atoms) {
      ++atom.clock.index;
      if (atom.other) ++atom.other->index;
    }
  };
  for (auto& inv : out.invariants) shift(inv);
  for (auto& tr : out.transitions) {
    shift(tr.guard);
    for (auto& c : tr.resets) ++c.index;
  }
  return out;
}

TimeBound inv_upper_bound(const Gta& model, LocationId q, ClockId c) {
  TimeBound best = TimeBound::infinity();
  for (const auto& atom : model.invariant(q).atoms) {
    if (atom.other || atom.clock != c) continue;
    TimeBound b;
    switch (atom.relation) {
      case Relation::Less: b = TimeBound::finite(atom.constant, true); break;
      case Relation::LessEq:
      case Relation::Equal: b = TimeBound::finite(atom.constant); break;
      default: continue;
    }
    // For upper bounds, strict is the tighter of two equal values.
    if (b.is_finite() && (best.is_infinite() || b.value() < best.value() ||
                          (b.value() == best.value() && b.strict())))
      best = b;
  }
  return best;
}

bool is_persistent(const Gta& model, LocationId q) {
  for (std::size_t c = 0; c < model.clock_count(); ++c)
    if (inv_upper_bound(model, q, ClockId{c}).is_finite()) return false;
  return true;
}

bool has_persistent_guards(const Gta& model) {
  return std::ranges::all_of(guards_of(model),
                             [&](LocationId q) { return is_persistent(model, q); });
}

std::vector<std::int64_t> max_constants(const Gta& model) {
  std::vector<std::int64_t> out(model.clock_count(), 0);
  auto visit = [&](const ClockConstraint& cc) {
    for (const auto& atom : cc.atoms) {
      out[atom.clock.index] = std::max(out[atom.clock.index], atom.constant);
      if (atom.other) out[atom.other->index] = std::max(out[atom.other->index], atom.constant);
    }
  };
  for (const auto& inv : model.invariants) visit(inv);
  for (const auto& tr : model.transitions) visit(tr.guard);
  return out;
}

bool has_diagonal_constraints(const Gta& model) {
  auto diag = [](const ClockConstraint& cc) {
    return std::ranges::any_of(cc.atoms, [](const auto& a) { return a.other.has_value(); });
  };
  return std::ranges::any_of(model.invariants, diag) ||
         std::ranges::any_of(model.transitions, [&](const auto& tr) { return diag(tr.guard); });
}

}  // namespace dtn
