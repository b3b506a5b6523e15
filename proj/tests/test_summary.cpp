#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dtn/minreach.hpp"
#include "dtn/oracle.hpp"
#include "dtn/summary.hpp"
#include "support.hpp"

using namespace dtn;
using dtn::test::loc;

namespace {

SummaryAutomaton summarize(const Gta& m) { return build_summary(m, solve_minreach(m)); }

AtomicConstraint t_at_least(std::int64_t v, bool strict = false) {
  return {ClockId{0}, std::nullopt, strict ? Relation::Greater : Relation::GreaterEq, v};
}

}  // namespace

TEST_CASE("fig2 guards become time bounds") {
  const Gta m = test::load_model("fig2.gta");
  const SummaryAutomaton sa = summarize(m);
  REQUIRE(sa.base.transitions.size() == 5);
  CHECK(sa.base.clocks == std::vector<std::string>{"t", "x"});
  const auto& to_q2 = sa.base.transitions[3];
  CHECK(to_q2.target == loc(m, "q2"));
  CHECK(to_q2.guard.atoms == std::vector<AtomicConstraint>{t_at_least(4)});
  const auto& back = sa.base.transitions[1];
  CHECK(back.guard.atoms == std::vector<AtomicConstraint>{t_at_least(2)});
  for (const auto& tr : sa.base.transitions) CHECK_FALSE(tr.locguard.has_value());
  CHECK(sa.provenance[3].guard == loc(m, "q1"));
  CHECK(sa.provenance[3].bound == TimeBound::finite(4));
  CHECK(sa.horizon == TimeBound::finite(12));
  CHECK(sa.status == SummaryStatus::Unverified);
  CHECK(summarize(test::load_model("fig2_noinv.gta")).status == SummaryStatus::Verified);
}

TEST_CASE("unguarded model keeps its transitions") {
  const Gta m = unguard(test::load_model("fig2.gta"));
  CHECK(summarize(m).base == augment_with_t(m));
}

TEST_CASE("edges guarded by unreachable locations are dropped") {
  const Gta m = parse_gta(
      "clocks x\nlocation a initial\nlocation g\nlocation b\n"
      "edge a -> b locguard: g\nedge a -> b guard: x >= 1\n");
  const SummaryAutomaton sa = summarize(m);
  REQUIRE(sa.base.transitions.size() == 1);
  CHECK(sa.provenance[0].original_transition == 1);
  CHECK(sa.from_original(1) == 0);
  CHECK_FALSE(sa.from_original(0).has_value());
}

TEST_CASE("strict minimal times give strict guards") {
  const Gta m = parse_gta(
      "clocks x\nlocation a initial\nlocation g\nlocation b\n"
      "edge a -> g guard: x > 1\nedge a -> b locguard: g\n");
  const SummaryAutomaton sa = summarize(m);
  CHECK(sa.base.transitions[1].guard.atoms == std::vector<AtomicConstraint>{t_at_least(1, true)});
}

TEST_CASE("reachability in one copy") {
  const Gta m = test::load_model("fig2.gta");
  const SummaryAutomaton sa = summarize(m);
  const auto r = check_reachability(sa, {loc(m, "q3")});
  REQUIRE(r.size() == 1);
  CHECK(r[0].reachable);
  CHECK(r[0].min_time == TimeBound::finite(6));

  std::set<LocationId> all;
  for (std::size_t q = 0; q < m.location_count(); ++q) all.insert(LocationId{q});
  const auto every = check_reachability(sa, all);
  const MinReachMap mr = solve_minreach(m);
  for (const auto& t : every) CHECK(t.min_time == mr[t.location]);
}

TEST_CASE("two copies can both reach q3") {
  const Gta m = test::load_model("fig2.gta");
  ReachQueryOptions two;
  two.copies = 2;
  const auto vectors = reachable_vectors(summarize(m), two);
  const LocationId q3 = loc(m, "q3");
  CHECK(vectors.contains(LocationVector{q3, q3}));
  CHECK(product_minreach(m, 4).reachable.contains(LocationVector{q3, q3, m.initial, loc(m, "q1")}));
}
