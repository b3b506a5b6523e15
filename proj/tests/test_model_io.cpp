#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dtn/minreach.hpp"
#include "dtn/model_io.hpp"
#include "dtn/summary.hpp"
#include "support.hpp"

using namespace dtn;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::vector<Diagnostic> diagnostics_of(const std::string& text) {
  try {
    parse_gta(text);
  } catch (const ParseError& e) {
    return e.diagnostics();
  }
  FAIL("expected a parse error");
  return {};
}

}  // namespace

TEST_CASE("fig2 parses into five locations, five edges, one clock") {
  const Gta m = test::load_model("fig2.gta");
  CHECK(m.name == "fig2");
  CHECK(m.location_count() == 5);
  CHECK(m.transitions.size() == 5);
  CHECK(m.clock_count() == 1);
  CHECK(m.location_name(m.initial) == "q_hat");
  CHECK(m.invariants[1].atoms.size() == 1);
  CHECK(m.transitions[3].locguard == m.find_location("q1"));
}

TEST_CASE("inequality is rejected") {
  const auto d = diagnostics_of("clocks x\nlocation a initial\nedge a -> a guard: x != 2\n");
  REQUIRE(d.size() == 1);
  CHECK(d[0].code == ErrorCode::UnsupportedRelation);
  CHECK(d[0].span.line == 3);
  CHECK(d[0].span.column == 22);
}

TEST_CASE("diagnostics carry positions inside the input") {
  const std::string text =
      "gta bad\n"
      "clocks x\n"
      "location a initial invariant: y <= 3\n"
      "edge a -> b guard: x < 1\n"
      "edge a -> a locguard: a extra\n"
      "location c initial\n"
      "frobnicate\n";
  const auto d = diagnostics_of(text);
  std::vector<ErrorCode> codes;
  for (const auto& diag : d) {
    codes.push_back(diag.code);
    CHECK(diag.span.line >= 1);
    CHECK(diag.span.line <= 7);
    CHECK(diag.span.column >= 1);
  }
  CHECK(std::ranges::count(codes, ErrorCode::UnknownClock) == 1);
  CHECK(std::ranges::count(codes, ErrorCode::UnknownLocation) == 1);
  CHECK(std::ranges::count(codes, ErrorCode::SyntaxError) == 3);
  const auto unknown = std::ranges::find_if(d, [](const auto& x) { return x.code == ErrorCode::UnknownLocation; });
  CHECK(unknown->span.line == 4);
  CHECK(unknown->span.column == 11);
}

TEST_CASE("the reserved clock may only come first") {
  CHECK_NOTHROW(parse_gta("clocks t, x\nlocation a initial\n"));
  const auto d = diagnostics_of("clocks x, t\nlocation a initial\n");
  REQUIRE(d.size() == 1);
  CHECK(d[0].span.column == 11);
}

TEST_CASE("semantic errors come from validation") {
  try {
    parse_gta("clocks x\nlocation a initial invariant: x >= 1\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InitialInvariantViolated);
  }
}

TEST_CASE("comments, alternative equality and clockless models") {
  const Gta m = parse_gta("# header\nlocation a initial # trailing\nlocation b\nedge a -> b\n");
  CHECK(m.clocks.empty());
  CHECK(m.transitions.size() == 1);
  const Gta e = parse_gta("clocks x\nlocation a initial\nedge a -> a guard: x = 2\n");
  CHECK(e.transitions[0].guard.atoms[0].relation == Relation::Equal);
  CHECK(write_gta(e).find("x == 2") != std::string::npos);
}

TEST_CASE("writer output reparses to the same model") {
  std::vector<Gta> corpus = test::persistent_corpus(50);
  corpus.push_back(gen_gcs(3, true));
  corpus.push_back(gen_gcs(4, true));
  corpus.push_back(gen_star(6));
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    RandomLimits limits;
    limits.persistent_guards = false;
    corpus.push_back(gen_random(seed, limits));
  }
  corpus.push_back(test::load_model("fig2.gta"));
  corpus.push_back(parse_gta("clocks x, y\nlocation a initial invariant: x - y <= 3 && y < 2\n"
                             "edge a -> a guard: y - x > 1 reset: y, x\n"));
  for (const auto& m : corpus) {
    CAPTURE(m.name);
    const std::string text = write_gta(m);
    const Gta back = parse_gta(text);
    CHECK(back == m);
    CHECK(write_gta(back) == text);
  }
}

TEST_CASE("fig2 text has two location guards") {
  CHECK(count(write_gta(test::load_model("fig2.gta")), "locguard:") == 2);
}

TEST_CASE("summary automaton text carries time lower bounds") {
  const Gta m = test::load_model("fig2.gta");
  const SummaryAutomaton sa = build_summary(m, solve_minreach(m));
  const std::string text = write_gta(sa.base);
  CHECK(text.find("edge q_hat -> q2 guard: t >= 4 reset: x\n") != std::string::npos);
  CHECK(count(text, "locguard:") == 0);
  CHECK(parse_gta(text) == sa.base);
}

TEST_CASE("dot export") {
  const std::string dot = export_dot(test::load_model("fig2.gta"));
  CHECK(count(dot, "shape=") == 5);
  CHECK(count(dot, "shape=doublecircle") == 1);
  CHECK(count(dot, " -> ") == 5);
  CHECK(dot.find("[q1]") != std::string::npos);
  CHECK(dot.find("label=\"q0\\nx <= 4\"") != std::string::npos);

  const std::string nodes_only = export_dot(parse_gta("location a initial\nlocation b\n"));
  CHECK(count(nodes_only, "shape=") == 2);
  CHECK(count(nodes_only, " -> ") == 0);

  const std::string gcs = export_dot(gen_gcs(3, true));
  CHECK(count(gcs, "shape=") == 8);
  CHECK(count(gcs, "\\nx <= 2\"") == 3);
  CHECK(count(gcs, "\\nx <= 4\"") == 3);
}
