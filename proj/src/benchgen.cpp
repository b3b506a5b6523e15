#include "dtn/benchgen.hpp"

#include <random>
#include <string>

#include "dtn/error.hpp"

namespace dtn {

namespace {

constexpr ClockId kX{0};

AtomicConstraint x_is(Relation rel, std::int64_t c) { return {kX, std::nullopt, rel, c}; }

ClockConstraint conj(std::initializer_list<AtomicConstraint> atoms) { return ClockConstraint{atoms}; }

LocationId add_location(Gta& m, std::string name, ClockConstraint inv = {}) {
  m.locations.push_back(std::move(name));
  m.invariants.push_back(std::move(inv));
  return LocationId{m.locations.size() - 1};
}

void add_edge(Gta& m, LocationId from, LocationId to, ClockConstraint guard, bool reset,
              std::optional<LocationId> locguard = std::nullopt) {
  Transition tr;
  tr.source = from;
  tr.target = to;
  tr.guard = std::move(guard);
  if (reset) tr.resets.push_back(kX);
  tr.locguard = locguard;
  m.transitions.push_back(std::move(tr));
}

}  // namespace

Gta gen_gcs(std::size_t k, bool with_invariants) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "GCS needs k >= 2");
  Gta m;
  m.name = (with_invariants ? "gcs" : "gcs_noinv") + std::to_string(k);
  m.clocks = {"x"};
  std::vector<LocationId> h, l;
  for (std::size_t i = 0; i < k; ++i)
    h.push_back(add_location(m, "h" + std::to_string(i),
                             with_invariants ? conj({x_is(Relation::LessEq, 2)}) : ClockConstraint{}));
  for (std::size_t i = 0; i < k; ++i)
    l.push_back(add_location(m, "l" + std::to_string(i), conj({x_is(Relation::LessEq, 4)})));
  const LocationId h_sy = add_location(m, "h_sy");
  const LocationId l_sy = add_location(m, "l_sy");
  m.initial = h[0];

  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t next = (i + 1) % k;
    add_edge(m, h[i], h[next], conj({x_is(Relation::Equal, 2)}), true);
    // x != 2 is split into x < 2 and x > 2.
    for (std::size_t j = 0; j < k; ++j) {
      add_edge(m, h[i], l[next], conj({x_is(Relation::Less, 2)}), true, h[j]);
      add_edge(m, h[i], l[next], conj({x_is(Relation::Greater, 2)}), true, h[j]);
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    add_edge(m, l[i], l[(i + 1) % k], conj({x_is(Relation::GreaterEq, 1)}), true);
  add_edge(m, l_sy, l[0], {}, false);
  add_edge(m, l[0], l_sy, {}, false);
  for (std::size_t i = 0; i < k; ++i) add_edge(m, l_sy, h[i], {}, true, h[i]);
  add_edge(m, h[0], h_sy, {}, false);
  for (std::size_t i = 0; i < k; ++i) add_edge(m, h_sy, h[i], {}, true);
  return m;
}

Gta gen_star(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "Star needs k >= 1");
  Gta m;
  m.name = "star" + std::to_string(k);
  m.clocks = {"x"};
  const LocationId hub = add_location(m, "q_hat");
  m.initial = hub;
  std::vector<LocationId> g, c;
  for (std::size_t i = 1; i <= k; ++i) g.push_back(add_location(m, "g" + std::to_string(i)));
  for (std::size_t i = 1; i < k; ++i) c.push_back(add_location(m, "c" + std::to_string(i)));
  const LocationId final_loc = add_location(m, "q_final");

  for (std::size_t i = 0; i < k; ++i)
    add_edge(m, hub, g[i], conj({x_is(Relation::Equal, static_cast<std::int64_t>(i + 1))}), false);
  // Chain hub -> c1 -> ... -> c{k-1} -> q_final, step i guarded by g_i.
  LocationId from = hub;
  for (std::size_t i = 0; i < k; ++i) {
    const LocationId to = i + 1 < k ? c[i] : final_loc;
    add_edge(m, from, to, i == 0 ? ClockConstraint{} : conj({x_is(Relation::GreaterEq, 1)}), true, g[i]);
    from = to;
  }
  return m;
}

Gta gen_random(std::uint64_t seed, const RandomLimits& limits) {
  if (limits.max_locations < 1 || limits.max_constant < 1)
    throw Error(ErrorCode::InvalidArgument, "random limits need at least one location and constant 1");
  // Raw engine output keeps models identical across standard libraries.
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t n) { return n == 0 ? 0 : rng() % n; };
  auto constant = [&] { return static_cast<std::int64_t>(below(limits.max_constant + 1)); };

  Gta m;
  m.name = "random" + std::to_string(seed);
  m.clocks = {"x"};
  const std::size_t n = 1 + below(limits.max_locations);
  const std::size_t guard_count = std::min<std::size_t>(below(limits.max_guards + 1), n);
  std::vector<bool> is_guard(n, false);
  for (std::size_t i = 0; i < guard_count; ++i) is_guard[below(n)] = true;

  for (std::size_t i = 0; i < n; ++i) {
    ClockConstraint inv;
    const bool may_bound = i != 0 && !(is_guard[i] && limits.persistent_guards);
    if (may_bound && below(3) == 0)
      inv.atoms.push_back(x_is(below(2) ? Relation::LessEq : Relation::Less, 1 + below(limits.max_constant)));
    add_location(m, "q" + std::to_string(i), std::move(inv));
  }
  m.initial = LocationId{0};

  std::vector<LocationId> guards;
  for (std::size_t i = 0; i < n; ++i)
    if (is_guard[i]) guards.push_back(LocationId{i});

  static constexpr Relation kRelations[] = {Relation::Less, Relation::LessEq, Relation::Equal,
                                            Relation::GreaterEq, Relation::Greater};
  const std::size_t edges = 1 + below(limits.max_transitions);
  for (std::size_t e = 0; e < edges; ++e) {
    const LocationId from{below(n)};
    const LocationId to{below(n)};
    ClockConstraint guard;
    const std::size_t atoms = below(3);
    for (std::size_t a = 0; a < atoms; ++a) guard.atoms.push_back(x_is(kRelations[below(5)], constant()));
    std::optional<LocationId> locguard;
    if (!guards.empty() && below(2) == 0) locguard = guards[below(guards.size())];
    add_edge(m, from, to, std::move(guard), below(2) == 0, locguard);
  }
  validate(m);
  return m;
}

}  // namespace dtn
