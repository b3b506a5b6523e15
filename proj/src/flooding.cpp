#include "dtn/flooding.hpp"

#include <algorithm>
#include <functional>

#include "dtn/error.hpp"

namespace dtn {

EpsTime EpsTime::from(const TimeBound& b) {
  if (!b.is_finite()) throw Error(ErrorCode::InvalidArgument, "infinite bound has no EpsTime value");
  return {b.value(), b.strict() ? 1 : 0};
}

std::string EpsTime::to_string() const {
  std::string s = std::to_string(units);
  if (eps == 0) return s;
  s += eps > 0 ? "+" : "-";
  const std::int64_t mag = eps > 0 ? eps : -eps;
  if (mag != 1) s += std::to_string(mag);
  return s + "e";
}

namespace {

constexpr EpsTime kEps{0, 1};

EpsTime clock_value(const EpsValuation& v, const AtomicConstraint& a) {
  EpsTime x = v.at(a.clock.index);
  if (a.other) x = x - v.at(a.other->index);
  return x;
}

bool holds(const EpsValuation& v, const AtomicConstraint& a) {
  const EpsTime x = clock_value(v, a);
  const EpsTime k{a.constant, 0};
  switch (a.relation) {
    case Relation::Less: return x < k;
    case Relation::LessEq: return x <= k;
    case Relation::Equal: return x == k;
    case Relation::GreaterEq: return x >= k;
    case Relation::Greater: return x > k;
  }
  return false;
}

bool holds(const EpsValuation& v, const ClockConstraint& cc) {
  return std::all_of(cc.atoms.begin(), cc.atoms.end(), [&](const auto& a) { return holds(v, a); });
}

std::string step_name(const SummaryAutomaton& sa, std::size_t idx) {
  const auto& tr = sa.base.transitions[idx];
  return "#" + std::to_string(idx) + " (" + sa.base.location_name(tr.source) + " -> " +
         sa.base.location_name(tr.target) + ")";
}

/// Least upper bound on x in Inv(q) as an EpsTime; a strict bound is approached to within ε.
std::optional<EpsTime> inv_limit(const Gta& model, LocationId q) {
  const TimeBound b = inv_upper_bound(model, q, ClockId{0});
  if (!b.is_finite()) return std::nullopt;
  return EpsTime{b.value(), b.strict() ? -1 : 0};
}

struct Segments {
  EpsTime d1, d2, d3;
};

Segments segment_durations(const AsapRun& run, const LoopDecomposition& loop) {
  Segments s;
  for (std::size_t k = 0; k < run.steps.size(); ++k) {
    EpsTime& d = k <= loop.first_reset ? s.d1 : (k <= loop.last_reset ? s.d2 : s.d3);
    d = d + run.steps[k].delay;
  }
  return s;
}

std::optional<EpsTime> pre_reset_limit(const Gta& model, const SummaryAutomaton& sa,
                                       const LoopDecomposition& loop) {
  std::optional<EpsTime> T;
  for (std::size_t k = 0; k <= loop.first_reset; ++k) {
    const auto u = inv_limit(model, sa.base.transitions[loop.transitions[k]].source);
    if (u && (!T || *u < *T)) T = u;
  }
  return T;
}

std::vector<std::size_t> summary_prefix(const SummaryAutomaton& sa, const MinReachMap& minreach,
                                        LocationId q0) {
  std::vector<std::size_t> prefix;
  for (const auto& step : explain_minreach(minreach, q0)) {
    auto idx = sa.from_original(step.transition);
    if (!idx) throw Error(ErrorCode::InvalidArgument, "witness uses a transition absent from the summary");
    prefix.push_back(*idx);
  }
  return prefix;
}

bool conditions_hold(EpsTime T, const Segments& s, EpsTime v0x) {
  return T >= s.d1 + s.d2 + s.d3 + v0x && T > s.d3;
}

void require_single_clock(const Gta& model) {
  if (model.clock_count() > 1)
    throw Error(ErrorCode::MultiClockUnsupported,
                "model '" + model.name + "' has " + std::to_string(model.clock_count()) +
                    " clocks; flooding certificates need a single clock");
}

}  // namespace

AsapRun asap_run(const SummaryAutomaton& sa, LocationId start, const EpsValuation& valuation,
                 std::span<const std::size_t> path) {
  const Gta& a = sa.base;
  if (valuation.size() != a.clock_count())
    throw Error(ErrorCode::InvalidArgument, "valuation size does not match the clock count");
  AsapRun run{start, {}, valuation, {}};
  EpsValuation& v = run.final_valuation;
  for (const std::size_t idx : path) {
    if (idx >= a.transitions.size())
      throw Error(ErrorCode::InvalidArgument, "transition #" + std::to_string(idx) + " does not exist");
    const Transition& tr = a.transitions[idx];
    if (tr.source != run.end)
      throw Error(ErrorCode::InvalidArgument, "path is not connected at " + step_name(sa, idx));

    EpsTime lo{};
    std::optional<EpsTime> hi;
    auto upper = [&](EpsTime b) { hi = hi ? std::min(*hi, b) : b; };
    for (const auto* cc : {&tr.guard, &a.invariant(tr.source)}) {
      for (const auto& atom : cc->atoms) {
        if (atom.other) {
          // Delays leave clock differences unchanged.
          if (!holds(v, atom)) throw Error(ErrorCode::Infeasible, step_name(sa, idx) + " can never fire");
          continue;
        }
        const EpsTime gap = EpsTime{atom.constant, 0} - v.at(atom.clock.index);
        switch (atom.relation) {
          case Relation::Less: upper(gap - kEps); break;
          case Relation::LessEq: upper(gap); break;
          case Relation::Equal: lo = std::max(lo, gap); upper(gap); break;
          case Relation::GreaterEq: lo = std::max(lo, gap); break;
          case Relation::Greater: lo = std::max(lo, gap + kEps); break;
        }
      }
    }
    if (hi && lo > *hi) throw Error(ErrorCode::Infeasible, step_name(sa, idx) + " can never fire");

    for (auto& c : v) c = c + lo;
    for (auto r : tr.resets) v.at(r.index) = EpsTime{};
    if (!holds(v, a.invariant(tr.target)))
      throw Error(ErrorCode::Infeasible, step_name(sa, idx) + " violates the target invariant");
    run.steps.push_back({idx, lo, v});
    run.duration = run.duration + lo;
    run.end = tr.target;
  }
  return run;
}

LoopDecomposition LoopDecomposition::split(const SummaryAutomaton& sa, std::vector<std::size_t> loop) {
  LoopDecomposition d;
  bool found = false;
  for (std::size_t k = 0; k < loop.size(); ++k) {
    if (sa.base.transitions.at(loop[k]).resets.empty()) continue;
    if (!found) d.first_reset = k;
    d.last_reset = k;
    found = true;
  }
  if (!found) throw Error(ErrorCode::InvalidArgument, "loop resets no clock");
  d.transitions = std::move(loop);
  return d;
}

std::optional<std::size_t> flooding_width(EpsTime T, EpsTime d2, EpsTime d3) {
  const EpsTime num = T + d2;
  const EpsTime den = T - d3;
  if (den <= EpsTime{}) return std::nullopt;
  // Smallest c >= 1 with c·den >= num.
  std::int64_t c = 1;
  if (den.units == 0) {
    if (num.units > 0) return std::nullopt;
    if (num.units == 0 && num.eps > 0) c = (num.eps + den.eps - 1) / den.eps;
  } else if (num.units > 0) {
    c = (num.units + den.units - 1) / den.units;
    if (EpsTime{c * den.units, c * den.eps} < num) ++c;
  }
  return static_cast<std::size_t>(std::max<std::int64_t>(2, c));
}

FloodingCertificate find_certificate(const Gta& model, const SummaryAutomaton& sa,
                                     const MinReachMap& minreach, LocationId q0,
                                     const FloodingOptions& options) {
  if (!minreach.reachable(q0))
    throw Error(ErrorCode::Unreachable, "location '" + model.location_name(q0) + "' is unreachable");
  FloodingCertificate cert;
  cert.target = q0;
  cert.prefix = summary_prefix(sa, minreach, q0);
  const AsapRun reach = asap_run(sa, sa.base.initial,
                                 EpsValuation(sa.base.clock_count()), cert.prefix);
  cert.start = reach.final_valuation;
  if (cert.start.size() > 1) cert.v0x = cert.start[1];
  if (is_persistent(model, q0)) return cert;

  require_single_clock(model);
  const std::size_t max_len = sa.base.transitions.size();
  std::size_t tried = 0;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(sa.base.location_count(), false);
  std::optional<FloodingCertificate> found;

  auto try_cycle = [&] {
    ++tried;
    const bool resetting = std::any_of(path.begin(), path.end(), [&](std::size_t i) {
      return !sa.base.transitions[i].resets.empty();
    });
    if (!resetting) return;
    LoopDecomposition loop = LoopDecomposition::split(sa, path);
    AsapRun run;
    try {
      run = asap_run(sa, q0, cert.start, loop.transitions);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Infeasible) return;
      throw;
    }
    const Segments s = segment_durations(run, loop);
    const auto T = pre_reset_limit(model, sa, loop);
    if (!T || !conditions_hold(*T, s, cert.v0x)) return;
    const auto width = flooding_width(*T, s.d2, s.d3);
    if (!width) return;
    FloodingCertificate c = cert;
    c.loop = std::move(loop);
    c.d1 = s.d1;
    c.d2 = s.d2;
    c.d3 = s.d3;
    c.T = *T;
    c.width = *width;
    found = std::move(c);
  };

  std::function<void(LocationId)> dfs = [&](LocationId q) {
    for (std::size_t i = 0; i < sa.base.transitions.size(); ++i) {
      if (found || tried >= options.max_cycles) return;
      const Transition& tr = sa.base.transitions[i];
      if (tr.source != q) continue;
      path.push_back(i);
      if (tr.target == q0) {
        try_cycle();
      } else if (!on_path[tr.target.index] && path.size() < max_len) {
        on_path[tr.target.index] = true;
        dfs(tr.target);
        on_path[tr.target.index] = false;
      }
      path.pop_back();
    }
  };
  on_path[q0.index] = true;
  dfs(q0);
  if (!found)
    throw Error(ErrorCode::NotFound, "no resetting loop through '" + model.location_name(q0) +
                                         "' meets the flooding conditions (" + std::to_string(tried) +
                                         " cycles tried)");
  return *found;
}

FloodingReport certify_all(const Gta& model, const SummaryAutomaton& sa, const MinReachMap& minreach,
                           const FloodingOptions& options) {
  std::vector<LocationId> rguards;
  for (auto g : guards_of(model))
    if (minreach.reachable(g)) rguards.push_back(g);
  for (auto g : rguards)
    if (!is_persistent(model, g)) require_single_clock(model);

  FloodingReport report;
  for (auto g : rguards) {
    try {
      report.certificates.emplace(g, find_certificate(model, sa, minreach, g, options));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotFound && e.code() != ErrorCode::Infeasible) throw;
      report.failures.push_back({g, e.what()});
    }
  }
  return report;
}

std::size_t cutoff(const FloodingReport& report, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be at least 1");
  if (!report.verified()) {
    std::string names;
    for (const auto& f : report.failures) names += (names.empty() ? "#" : ", #") + std::to_string(f.location.index);
    throw Error(ErrorCode::Uncertified, "no flooding certificate for guard location(s) " + names);
  }
  std::size_t total = m;
  for (const auto& [q, cert] : report.certificates) total += cert.width;
  return total;
}

std::vector<std::string> recheck_certificate(const Gta& model, const SummaryAutomaton& sa,
                                             const FloodingCertificate& cert) {
  std::vector<std::string> problems;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  };
  const std::string name = model.location_name(cert.target);
  try {
    const AsapRun reach = asap_run(sa, sa.base.initial, EpsValuation(sa.base.clock_count()), cert.prefix);
    expect(reach.end == cert.target, "prefix does not end in " + name);
    expect(reach.final_valuation == cert.start, "prefix reaches a different start valuation");
  } catch (const Error& e) {
    problems.push_back(std::string("prefix: ") + e.what());
    return problems;
  }

  if (is_persistent(model, cert.target)) {
    expect(cert.width == 1, "persistent location must have width 1");
    return problems;
  }
  const auto& loop = cert.loop;
  expect(!loop.transitions.empty(), "location with invariant needs a loop");
  if (loop.transitions.empty()) return problems;
  expect(sa.base.transitions.at(loop.transitions.front()).source == cert.target &&
             sa.base.transitions.at(loop.transitions.back()).target == cert.target,
         "loop does not start and end in " + name);

  std::vector<std::size_t> resetting;
  for (std::size_t k = 0; k < loop.transitions.size(); ++k)
    if (!sa.base.transitions[loop.transitions[k]].resets.empty()) resetting.push_back(k);
  expect(!resetting.empty(), "loop has no reset");
  if (resetting.empty()) return problems;
  expect(loop.first_reset == resetting.front(), "first reset index is wrong");
  expect(loop.last_reset == resetting.back(), "last reset index is wrong");

  AsapRun run;
  try {
    run = asap_run(sa, cert.target, cert.start, loop.transitions);
  } catch (const Error& e) {
    problems.push_back(std::string("loop: ") + e.what());
    return problems;
  }
  const Segments s = segment_durations(run, loop);
  expect(s.d1 == cert.d1 && s.d2 == cert.d2 && s.d3 == cert.d3, "segment durations differ");
  const auto T = pre_reset_limit(model, sa, loop);
  expect(T && *T == cert.T, "T differs");
  expect(cert.start.size() < 2 || cert.start[1] == cert.v0x, "v0x differs");
  expect(cert.T >= cert.d1 + cert.d2 + cert.d3 + cert.v0x, "T >= d1+d2+d3+v0x fails");
  expect(cert.T > cert.d3, "T > d3 fails");
  const auto w = flooding_width(cert.T, cert.d2, cert.d3);
  expect(w && *w == cert.width, "width does not match the formula");
  expect(cert.width >= 2, "width below 2 for a location with invariant");
  return problems;
}

}  // namespace dtn
