// One line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "dbm_oracle.hpp"
#include "dtn/error.hpp"
#include "dtn/flooding.hpp"
#include "dtn/minreach.hpp"
#include "dtn/oracle.hpp"
#include "dtn/summary.hpp"
#include "dtn/zone_graph.hpp"
#include "support.hpp"

using namespace dtn;
using dtn::test::loc;

namespace {

using Clock = std::chrono::steady_clock;

// Collects failed expectations of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ = failed_ || !ok;
  }
  bool failed() const { return failed_; }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
    return s;
  }

 private:
  bool failed_ = false;
  std::vector<std::string> failures_;
};

std::string show(const std::vector<TimeBound>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].to_string();
  return s + "]";
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::vector<Gta>& corpus() {
  static const std::vector<Gta> models = [] {
    auto all = test::persistent_corpus(200);
    for (auto& m : test::wide_corpus(150)) all.push_back(std::move(m));
    return all;
  }();
  return models;
}

std::size_t guard_count(const Gta& m) { return guards_of(m).size(); }

void fig2_golden(Check& c) {
  const auto start = Clock::now();
  const Gta m = test::load_model("fig2.gta");
  const MinReachMap r = solve_minreach(m);
  c.expect(r[loc(m, "q3")] == TimeBound::finite(6), "solve_minreach(q3) = " + r[loc(m, "q3")].to_string());
  c.expect(r[loc(m, "q0")] == TimeBound::finite(2), "solve_minreach(q0) = " + r[loc(m, "q0")].to_string());
  const auto one = product_minreach(m, 1).min_time[loc(m, "q3").index];
  const auto two = product_minreach(m, 2).min_time[loc(m, "q3").index];
  c.expect(one.is_infinite(), "oracle n=1 reaches q3 at " + one.to_string());
  c.expect(two == TimeBound::finite(6), "oracle n=2 reaches q3 at " + two.to_string());
  c.expect(seconds_since(start) < 1.0, "took longer than 1 s");
}

void cutoff_equivalence(Check& c) {
  const auto start = Clock::now();
  for (const auto& m : corpus()) {
    const auto mine = solve_minreach(m).bounds;
    const auto theirs = product_minreach(m, 1 + guard_count(m)).min_time;
    c.expect(mine == theirs, m.name + ": " + show(mine) + " vs oracle " + show(theirs));
  }
  c.expect(seconds_since(start) < 300.0, "took longer than 5 min");
}

void monotonicity(Check& c) {
  for (const auto& m : corpus()) {
    const auto d1 = product_minreach(m, 1).min_time;
    const auto d2 = product_minreach(m, 2).min_time;
    const auto d3 = product_minreach(m, 3).min_time;
    const auto inf = solve_minreach(m).bounds;
    for (std::size_t q = 0; q < m.location_count(); ++q)
      c.expect(d1[q] >= d2[q] && d2[q] >= d3[q] && d3[q] >= inf[q],
               m.name + " " + m.locations[q] + ": " + d1[q].to_string() + " " + d2[q].to_string() + " " +
                   d3[q].to_string() + " " + inf[q].to_string());
  }
}

void bounds(Check& c) {
  for (const auto& m : corpus()) {
    const auto ug = minreach_unguarded(m).bounds;
    const MinReachMap r = solve_minreach(m);
    const TimeBound ub = upper_bound(m);
    for (std::size_t q = 0; q < m.location_count(); ++q) {
      if (r.bounds[q].is_infinite()) continue;
      c.expect(ug[q] <= r.bounds[q] && r.bounds[q] <= ub,
               m.name + " " + m.locations[q] + ": " + ug[q].to_string() + " <= " + r.bounds[q].to_string() +
                   " <= " + ub.to_string());
    }
  }
}

void fig2_flooding(Check& c) {
  const Gta m = test::load_model("fig2.gta");
  const MinReachMap r = solve_minreach(m);
  const SummaryAutomaton sa = build_summary(m, r);
  const LocationId q0 = loc(m, "q0");
  const FloodingCertificate cert = find_certificate(m, sa, r, q0);
  const EpsTime zero{}, two{2, 0}, four{4, 0};
  c.expect(cert.d1 == zero && cert.d2 == zero && cert.d3 == two,
           "d = " + cert.d1.to_string() + "," + cert.d2.to_string() + "," + cert.d3.to_string());
  c.expect(cert.T == four, "T = " + cert.T.to_string());
  c.expect(cert.width == 2, "width = " + std::to_string(cert.width));
  // Lemma conditions with plain integers: 4 >= 0+0+2+2, 4 > 2, max(2, ceil(4/2)).
  c.expect(cert.v0x == two, "v0x = " + cert.v0x.to_string());
  const std::int64_t T = 4, d2 = 0, d3 = 2;
  c.expect(std::max<std::int64_t>(2, (T + d2 + (T - d3) - 1) / (T - d3)) == 2, "reference width");
  const TimeBound horizon = r[q0] + r.ub.scaled(3);
  const FloodCheckResult fc = flooding_horizon_check(m, q0, 3, horizon);
  c.expect(fc.covered(), "q0 not kept occupied up to " + horizon.to_string());
  c.expect(horizon == TimeBound::finite(38), "horizon " + horizon.to_string());
  const FloodingReport report = certify_all(m, sa, r);
  c.expect(report.verified() && cutoff(report, 1) == 4, "cutoff(m=1) != 4");
}

void gcs_family(Check& c) {
  for (std::size_t k : {3, 4}) {
    const Gta m = gen_gcs(k, true);
    const MinReachMap r = solve_minreach(m);
    const FloodingReport report = certify_all(m, build_summary(m, r), r);
    c.expect(report.verified() && report.certificates.size() == k,
             "certify_all failed on " + m.name);
  }
  const Gta top = gen_gcs(3, false);
  const auto mine = solve_minreach(top).bounds;
  const auto theirs = product_minreach(top, 4).min_time;
  c.expect(mine == theirs, "gcs_noinv3: " + show(mine) + " vs oracle " + show(theirs));
}

void summary_equivalence(Check& c) {
  for (const auto& m : corpus()) {
    const MinReachMap r = solve_minreach(m);
    const SummaryAutomaton sa = build_summary(m, r);
    std::set<LocationId> all;
    for (std::size_t q = 0; q < m.location_count(); ++q) all.insert(LocationId{q});
    for (const auto& t : check_reachability(sa, all)) {
      c.expect(t.reachable == r.reachable(t.location) && t.min_time == r[t.location],
               m.name + " " + m.location_name(t.location) + ": " + t.min_time.to_string() + " vs " +
                   r[t.location].to_string());
    }
    if (m.location_count() > 5) continue;
    ReachQueryOptions two;
    two.copies = 2;
    auto sorted_pair = [](LocationId a, LocationId b) { return a < b ? LocationVector{a, b} : LocationVector{b, a}; };
    std::set<LocationVector> summary_pairs, oracle_pairs;
    for (const auto& v : reachable_vectors(sa, two)) summary_pairs.insert(sorted_pair(v[0], v[1]));
    OracleOptions wide;
    wide.max_processes = 5;
    for (const auto& v : product_minreach(m, 2 + guard_count(m), wide).reachable)
      oracle_pairs.insert(sorted_pair(v[0], v[1]));
    c.expect(summary_pairs == oracle_pairs, m.name + ": pair sets differ (" + std::to_string(summary_pairs.size()) +
                                                " vs " + std::to_string(oracle_pairs.size()) + ")");
  }
}

void run_filter(Check& c) {
  const Gta m = test::load_model("fig2.gta");
  const MinReachMap r = solve_minreach(m);
  const std::size_t to_q2 = 3;
  c.expect(m.transitions[to_q2].target == loc(m, "q2"), "transition 3 is not q_hat -> q2");
  c.expect(!realizable_run_check(m, r, {{Rational(3), to_q2}}), "firing at t=3 accepted");
  c.expect(realizable_run_check(m, r, {{Rational(4), to_q2}}), "firing at t=4 rejected");
}

void performance(Check& c) {
  for (auto [k, budget] : {std::pair{4, 60.0}, std::pair{6, 300.0}}) {
    const auto start = Clock::now();
    const Gta m = gen_star(k);
    const MinReachMap r = solve_minreach(m);
    const double took = seconds_since(start);
    c.expect(r[loc(m, "q_final")] == TimeBound::finite(k), m.name + " q_final = " + r[loc(m, "q_final")].to_string());
    c.expect(took < budget, m.name + " took " + std::to_string(took) + " s");
  }
}

void dbm_properties(Check& c) {
  std::mt19937_64 rng(5150);
  constexpr std::int64_t kMax = 4;
  for (int round = 0; round < 500; ++round) {
    const std::size_t clocks = 1 + rng() % 3;
    const test::Grid grid(clocks, kMax);
    const Dbm raw = test::random_matrix(rng, clocks, kMax);
    const auto canon = canonicalize(raw);
    const bool nonempty = grid.any([&](const auto& p) { return grid.member(raw, p); });
    const std::string tag = "matrix " + std::to_string(round);
    c.expect(canon.has_value() == nonempty, tag + ": emptiness disagrees with brute force");
    if (!canon) continue;
    c.expect(canonicalize(*canon) == *canon, tag + ": canonicalize not idempotent");
    const Dbm delayed = up(*canon);
    c.expect(up(delayed) == delayed && includes(delayed, *canon), tag + ": up identities");
    for (std::size_t k = 0; k < clocks; ++k)
      c.expect(lower_bound(delayed, ClockId{k}) == lower_bound(*canon, ClockId{k}), tag + ": up moved a lower bound");
    c.expect(reset(*canon, std::span<const ClockId>{}) == *canon, tag + ": empty reset changed the zone");
    c.expect(constrain(*canon, {}) == *canon, tag + ": constrain with true changed the zone");
    const ClockId r[] = {ClockId{rng() % clocks}};
    const Dbm after = reset(*canon, r);
    c.expect(canonicalize(after) == after && reset(after, r) == after, tag + ": reset identities");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"fig2 golden values", fig2_golden},
      {"cutoff equivalence with the product oracle", cutoff_equivalence},
      {"monotonicity in the network size", monotonicity},
      {"unguarded <= minreach <= upper bound", bounds},
      {"fig2 flooding certificate and cutoff", fig2_flooding},
      {"GCS certification and oracle agreement", gcs_family},
      {"summary automaton equivalence", summary_equivalence},
      {"guard-time run filter", run_filter},
      {"Star performance", performance},
      {"DBM property suite", dbm_properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = Clock::now();
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line << (check.failed() ? "FAIL" : "PASS") << "  criterion " << (i + 1) << ": " << criteria[i].first << " ("
         << std::fixed;
    line.precision(2);
    line << seconds_since(start) << " s)";
    if (check.failed()) line << " -- " << check.summary();
    std::cout << line.str() << '\n';
    failed += check.failed() ? 1 : 0;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " acceptance criteria passed\n";
  return failed == 0 ? 0 : 1;
}
