// dtnv: minimum-time reachability, summary automata, flooding certificates
// and cutoffs for networks of guarded timed automata.
//
// Exit codes: 0 success, 1 error, 2 result not certified (flooding failed).

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dtn/benchgen.hpp"
#include "dtn/error.hpp"
#include "dtn/flooding.hpp"
#include "dtn/minreach.hpp"
#include "dtn/model_io.hpp"
#include "dtn/oracle.hpp"
#include "dtn/report.hpp"
#include "dtn/summary.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kUnverified = 2;

dtn::Gta load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dtn::Error(dtn::ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return dtn::parse_gta(text.str());
}

void save(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw dtn::Error(dtn::ErrorCode::InvalidArgument, "cannot write '" + path + "'");
}

struct Analysis {
  dtn::Gta model;
  dtn::MinReachMap minreach;
  dtn::SummaryAutomaton summary;
  dtn::FloodingReport flooding;
};

// Minreach, summary and flooding certification; a model outside the
// single-clock fragment counts as a certification failure.
Analysis analyse(const std::string& path, std::vector<dtn::TraceEntry>* trace = nullptr) {
  Analysis a{load(path), {}, {}, {}};
  dtn::MinReachOptions options;
  options.trace = trace;
  a.minreach = dtn::solve_minreach(a.model, options);
  a.summary = dtn::build_summary(a.model, a.minreach);
  try {
    a.flooding = dtn::certify_all(a.model, a.summary, a.minreach);
  } catch (const dtn::Error& e) {
    if (e.code() != dtn::ErrorCode::MultiClockUnsupported) throw;
    for (auto g : dtn::guards_of(a.model))
      if (a.minreach.reachable(g) && !dtn::is_persistent(a.model, g)) a.flooding.failures.push_back({g, e.what()});
  }
  a.summary.status = a.flooding.verified() ? dtn::SummaryStatus::Verified : dtn::SummaryStatus::Unverified;
  return a;
}

int status_code(const Analysis& a) {
  if (a.flooding.verified()) return kOk;
  for (const auto& f : a.flooding.failures)
    std::cerr << "unverified: " << a.model.location_name(f.location) << ": " << f.reason << '\n';
  return kUnverified;
}

std::string bound_text(const dtn::TimeBound& b) { return b.is_finite() ? b.to_string() : "unreachable"; }

std::string witness_text(const dtn::Gta& model, const std::vector<dtn::WitnessStep>& steps) {
  std::string s;
  for (const auto& step : steps) {
    const auto& tr = model.transitions[step.transition];
    if (s.empty()) s = model.location_name(tr.source);
    s += " -> " + model.location_name(tr.target) + " @" + step.t_bound.to_string();
    if (step.enabled_by) s += " [" + model.location_name(*step.enabled_by) + "]";
  }
  return s.empty() ? "-" : s;
}

int run_minreach(const std::string& file, bool json, bool witness, bool trace) {
  std::vector<dtn::TraceEntry> entries;
  Analysis a = analyse(file, trace ? &entries : nullptr);
  if (json) {
    std::cout << dtn::minreach_json(a.model, a.minreach, witness).dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> rows{{"location", "minreach"}};
    if (witness) rows[0].push_back("witness");
    for (std::size_t q = 0; q < a.model.location_count(); ++q) {
      rows.push_back({a.model.locations[q], bound_text(a.minreach.bounds[q])});
      if (witness) rows.back().push_back(witness_text(a.model, a.minreach.witnesses[q]));
    }
    std::cout << dtn::format_table(rows) << "ub: " << a.minreach.ub.to_string() << '\n';
  }
  if (trace) std::cerr << dtn::trace_json(dtn::augment_with_t(a.model), entries).dump(2) << '\n';
  return status_code(a);
}

int run_summary(const std::string& file, const std::string& out, bool dot) {
  Analysis a = analyse(file);
  save(out, dot ? dtn::export_dot(a.summary.base) : dtn::write_gta(a.summary.base));
  std::cout << "summary: " << a.summary.base.transitions.size() << " transitions, status "
            << (a.flooding.verified() ? "verified" : "unverified") << '\n';
  return status_code(a);
}

int run_cutoff(const std::string& file, std::size_t m, bool json) {
  Analysis a = analyse(file);
  const int code = status_code(a);
  std::optional<std::size_t> c;
  if (code == kOk) c = dtn::cutoff(a.flooding, m);
  if (json) {
    dtn::Json j;
    j["model"] = a.model.name;
    j["m"] = m;
    j["cutoff"] = c ? dtn::Json(*c) : dtn::Json(nullptr);
    j["certificates"] = dtn::certificates_json(a.model, a.flooding)["certificates"];
    std::cout << j.dump(2) << '\n';
  } else if (c) {
    std::cout << *c << '\n';
  }
  return code;
}

int run_oracle(const std::string& file, std::size_t n, std::size_t limit, bool json) {
  const dtn::Gta model = load(file);
  dtn::OracleOptions options;
  options.max_processes = limit;
  const dtn::OracleResult r = dtn::product_minreach(model, n, options);
  if (json) {
    std::cout << dtn::oracle_json(model, r).dump(2) << '\n';
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"location", "minreach"}};
  for (std::size_t q = 0; q < model.location_count(); ++q) {
    const auto& b = r.min_time[q];
    rows.push_back({model.locations[q], b.is_finite() ? b.to_string() : "unreached below " + r.horizon.to_string()});
  }
  std::cout << dtn::format_table(rows) << "n: " << n << '\n';
  return kOk;
}

int run_floodcheck(const std::string& file, bool json) {
  Analysis a = analyse(file);
  if (json) {
    std::cout << dtn::certificates_json(a.model, a.flooding).dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> rows{{"location", "width", "loop", "d1", "d2", "d3", "T", "v0x"}};
    for (const auto& [q, c] : a.flooding.certificates) {
      if (c.loop.transitions.empty()) {
        rows.push_back({a.model.location_name(q), std::to_string(c.width), "-", "-", "-", "-", "-", "-"});
        continue;
      }
      std::string loop;
      for (auto i : c.loop.transitions) loop += (loop.empty() ? "" : ",") + std::to_string(i);
      rows.push_back({a.model.location_name(q), std::to_string(c.width), loop, c.d1.to_string(),
                      c.d2.to_string(), c.d3.to_string(), c.T.to_string(), c.v0x.to_string()});
    }
    for (const auto& f : a.flooding.failures)
      rows.push_back({a.model.location_name(f.location), "none", "-", "-", "-", "-", "-", "-"});
    std::cout << dtn::format_table(rows);
  }
  return status_code(a);
}

int run_check(const std::string& file, const std::vector<std::string>& targets, std::size_t copies, bool json) {
  Analysis a = analyse(file);
  std::set<dtn::LocationId> ids;
  for (const auto& name : targets) {
    auto q = a.model.find_location(name);
    if (!q) throw dtn::Error(dtn::ErrorCode::UnknownLocation, "unknown location '" + name + "'");
    ids.insert(*q);
  }
  dtn::ReachQueryOptions options;
  options.copies = copies;
  const auto results = dtn::check_reachability(a.summary, ids, options);
  if (json) {
    std::cout << dtn::query_json(a.summary, results, copies).dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> rows{{"location", "reachable", "minreach"}};
    for (const auto& r : results)
      rows.push_back({a.model.location_name(r.location), r.reachable ? "yes" : "no", bound_text(r.min_time)});
    std::cout << dtn::format_table(rows) << "copies: " << copies << '\n';
  }
  return status_code(a);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-time reachability and cutoffs for disjunctive timed networks", "dtnv"};
  app.set_version_flag("--version", "dtnv 1.0.0");
  app.require_subcommand(1);

  std::string file, out;
  bool json = false, witness = false, trace = false, dot = false, invariants = false, non_persistent = false;
  std::size_t m = 1, n = 1, limit = 4, copies = 1, k = 2;
  std::uint64_t seed = 0;
  std::vector<std::string> targets;

  auto* minreach = app.add_subcommand("minreach", "minimal reach time of every location");
  minreach->add_option("FILE", file, "model file")->required();
  minreach->add_flag("--json", json, "emit JSON");
  minreach->add_flag("--witness", witness, "include minimal-time witness paths");
  minreach->add_flag("--trace", trace, "print the search pop order as JSON on stderr");

  auto* summary = app.add_subcommand("summary", "write the summary automaton");
  summary->add_option("FILE", file, "model file")->required();
  summary->add_option("-o,--output", out, "output file")->required();
  summary->add_flag("--dot", dot, "write Graphviz instead of the model format");

  auto* cutoff = app.add_subcommand("cutoff", "cutoff for m observed processes");
  cutoff->add_option("FILE", file, "model file")->required();
  cutoff->add_option("-m", m, "observed processes")->required()->check(CLI::PositiveNumber);
  cutoff->add_flag("--json", json, "emit JSON");

  auto* oracle = app.add_subcommand("oracle", "explicit product exploration of n copies");
  oracle->add_option("FILE", file, "model file")->required();
  oracle->add_option("-n", n, "network size")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--limit", limit, "largest accepted network size")->capture_default_str();
  oracle->add_flag("--json", json, "emit JSON");

  auto* flood = app.add_subcommand("floodcheck", "flooding certificates for guard locations");
  flood->add_option("FILE", file, "model file")->required();
  flood->add_flag("--json", json, "emit JSON");

  auto* check = app.add_subcommand("check", "reachability in copies of the summary automaton");
  check->add_option("FILE", file, "model file")->required();
  check->add_option("--target", targets, "target location (repeatable)")->required();
  check->add_option("--copies", copies, "number of copies")->check(CLI::PositiveNumber)->capture_default_str();
  check->add_flag("--json", json, "emit JSON");

  auto* gen = app.add_subcommand("gen", "generate benchmark models");
  gen->require_subcommand(1);
  auto* gcs = gen->add_subcommand("gcs", "gossip clock synchronization GCS(k)");
  gcs->add_option("--k", k, "number of h locations")->required()->check(CLI::Range(2, 64));
  gcs->add_flag("--invariants", invariants, "add x <= 2 to every h location");
  gcs->add_option("-o,--output", out, "output file")->required();
  auto* star = gen->add_subcommand("star", "Star(k)");
  star->add_option("--k", k, "number of guard locations")->required()->check(CLI::Range(1, 64));
  star->add_option("-o,--output", out, "output file")->required();
  auto* random = gen->add_subcommand("random", "small random single-clock model");
  random->add_option("--seed", seed, "generator seed")->required();
  random->add_flag("--non-persistent", non_persistent, "allow invariants on guard locations");
  random->add_option("-o,--output", out, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*minreach) return run_minreach(file, json, witness, trace);
    if (*summary) return run_summary(file, out, dot);
    if (*cutoff) return run_cutoff(file, m, json);
    if (*oracle) return run_oracle(file, n, limit, json);
    if (*flood) return run_floodcheck(file, json);
    if (*check) return run_check(file, targets, copies, json);
    if (*gcs) save(out, dtn::write_gta(dtn::gen_gcs(k, invariants)));
    if (*star) save(out, dtn::write_gta(dtn::gen_star(k)));
    if (*random) {
      dtn::RandomLimits limits;
      limits.persistent_guards = !non_persistent;
      save(out, dtn::write_gta(dtn::gen_random(seed, limits)));
    }
    return kOk;
  } catch (const dtn::Error& e) {
    std::cerr << "error: " << dtn::to_string(e.code()) << ": " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
}
