#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dtn/error.hpp"
#include "dtn/oracle.hpp"
#include "support.hpp"

using namespace dtn;
using dtn::test::loc;

TEST_CASE("fig2 needs two processes to reach q3") {
  const Gta m = test::load_model("fig2.gta");
  const LocationId q3 = loc(m, "q3");
  CHECK(product_minreach(m, 1).min_time[q3.index].is_infinite());
  CHECK(product_minreach(m, 2).min_time[q3.index] == TimeBound::finite(6));
  CHECK(product_minreach(m, 3).min_time[q3.index] == TimeBound::finite(6));
}

TEST_CASE("network size limit") {
  const Gta m = test::load_model("fig2.gta");
  try {
    product_minreach(m, 5);
    FAIL("expected LimitExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LimitExceeded);
  }
  OracleOptions tiny;
  tiny.node_limit = 3;
  CHECK_THROWS_AS(product_minreach(m, 2, tiny), Error);
}

TEST_CASE("adding processes never delays a location") {
  for (const auto& m : test::persistent_corpus(40)) {
    CAPTURE(m.name);
    const auto one = product_minreach(m, 1).min_time;
    const auto two = product_minreach(m, 2).min_time;
    const auto three = product_minreach(m, 3).min_time;
    for (std::size_t q = 0; q < m.location_count(); ++q) {
      CHECK(two[q] <= one[q]);
      CHECK(three[q] <= two[q]);
    }
  }
}

TEST_CASE("reachable vectors are closed under permutation") {
  for (const auto& m : {test::load_model("fig2.gta"), gen_star(2), gen_random(11)}) {
    const auto r = product_minreach(m, 3);
    for (auto v : r.reachable) {
      std::ranges::sort(v);
      do {
        CHECK(r.reachable.contains(v));
      } while (std::ranges::next_permutation(v).found);
    }
  }
}

TEST_CASE("run filter by minimal guard times") {
  const Gta m = test::load_model("fig2.gta");
  const MinReachMap mr = solve_minreach(m);
  // q_hat -> q2 (guarded by q1) after a delay, then q2 -> q3.
  CHECK(realizable_run_check(m, mr, {{Rational(4), 3}, {Rational(2), 4}}));
  CHECK_FALSE(realizable_run_check(m, mr, {{Rational(3), 3}, {Rational(2), 4}}));
  CHECK_FALSE(realizable_run_check(m, mr, {{Rational(7, 2), 3}}));
  CHECK(realizable_run_check(m, mr, {{Rational(2), 0}, {Rational(2), 2}}));
  CHECK(realizable_run_check(m, mr, {}));
}

TEST_CASE("run filter rejects invalid runs") {
  const Gta m = test::load_model("fig2.gta");
  const MinReachMap mr = solve_minreach(m);
  auto code = [&](const std::vector<TimedStep>& run) {
    try {
      realizable_run_check(m, mr, run);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code({{Rational(1), 0}}) == ErrorCode::InvalidTrace);              // x == 2 fails
  CHECK(code({{Rational(2), 0}, {Rational(3), 2}}) == ErrorCode::InvalidTrace);  // x <= 4 in q0
  CHECK(code({{Rational(0), 4}}) == ErrorCode::InvalidTrace);              // wrong source
  CHECK(code({{Rational(-1), 3}}) == ErrorCode::InvalidTrace);
}

TEST_CASE("fig2 q0 stays occupied with three processes") {
  const Gta m = test::load_model("fig2.gta");
  const LocationId q0 = loc(m, "q0");
  const FloodCheckResult r = flooding_horizon_check(m, q0, 3, TimeBound::finite(20));
  CHECK(r.covered());
  CHECK(r.from == TimeBound::finite(2));
  const FloodCheckResult alone = flooding_horizon_check(m, q0, 1, TimeBound::finite(20));
  CHECK(alone.status == FloodStatus::Gap);
  const FloodCheckResult two = flooding_horizon_check(m, q0, 2);
  CHECK(two.covered());
  CHECK(two.horizon == TimeBound::finite(2 + 3 * 12));
}

TEST_CASE("flooding check on unreachable and gap-forcing locations") {
  const Gta unreachable = parse_gta(
      "clocks x\nlocation a initial\nlocation g\nlocation b\nedge a -> b locguard: g\n");
  CHECK(flooding_horizon_check(unreachable, loc(unreachable, "g"), 2).status == FloodStatus::NotReached);

  // g can only be entered once, at x == 2, and must be left by x == 2.
  const Gta forced = parse_gta(
      "clocks x\n"
      "location a initial\n"
      "location g invariant: x <= 2\n"
      "location b\n"
      "edge a -> g guard: x == 2\n"
      "edge g -> b\n"
      "edge b -> b locguard: g\n");
  for (std::size_t n = 1; n <= 3; ++n)
    CHECK(flooding_horizon_check(forced, loc(forced, "g"), n).status == FloodStatus::Gap);
}
