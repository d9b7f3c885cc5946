// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "greedy_certify/greedy_certify.hpp"
#include "json.hpp"

namespace greedy_certify::cli {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_json_file(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

template <class V>
Json value_json(const V& v) {
  if constexpr (ValueTraits<V>::kExact) {
    return v.str();
  } else {
    return v;
  }
}

// "4/5 (0.8)" for exact values, "0.8" otherwise.
template <class V>
std::string show(const V& v) {
  const std::string d = Cell::format_number(to_double(v));
  if constexpr (ValueTraits<V>::kExact) {
    const std::string s = v.str();
    return s == d ? s : s + " (" + d + ")";
  } else {
    return d;
  }
}

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::kPositive: return "expression > 0";
    case Relation::kNotPositive: return "expression <= 0";
    case Relation::kNonzero: return "expression != 0";
  }
  return "?";
}

template <class V>
Json witness_json(const ProblemInstance<V>& problem, const Witness<V>& w) {
  Json j;
  j["description"] = w.description;
  if (!w.terms.empty()) {
    Json terms = Json::array();
    for (const auto& [coeff, seq] : w.terms) {
      terms.push_back({{"coeff", coeff},
                       {"seq", problem.describe(seq)},
                       {"ids", seq.symbols()},
                       {"value", value_json(problem.value(seq))}});
    }
    j["terms"] = std::move(terms);
    j["violation"] = relation_name(w.relation);
    j["expression"] = value_json(w.expression);
  }
  if (!w.membership.empty()) {
    Json facts = Json::array();
    for (const auto& [seq, member] : w.membership) {
      facts.push_back({{"seq", problem.describe(seq)}, {"ids", seq.symbols()}, {"member", member}});
    }
    j["membership"] = std::move(facts);
  }
  j["replays"] = witness_replays(problem, w);
  return j;
}

template <class V>
Json verdict_json(const ProblemInstance<V>& problem, const Verdict<V>& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["sampled"] = v.sampled;
  j["checked"] = v.checked;
  if (!v.note.empty()) j["note"] = v.note;
  if (v.witness) j["witness"] = witness_json(problem, *v.witness);
  return j;
}

template <class V>
Json gamma_json(const ProblemInstance<V>& problem, const GammaValue<V>& g) {
  Json j;
  j["status"] = g.defined() ? "defined" : sentinel(g.status);
  if (g.defined()) j["value"] = value_json(g.value);
  if (g.epoch) j["epoch"] = g.epoch;
  if (g.symbol) j["symbol"] = problem.describe(StringSeq{*g.symbol});
  if (g.status != Availability::kSkipped && (g.symbol || !g.base.empty())) {
    j["base"] = problem.describe(g.base);
    j["increment"] = value_json(g.increment);
  }
  if (!g.reason.empty()) j["reason"] = g.reason;
  return j;
}

template <class V>
Json beta1_json(const GammaValue<V>& g, const std::optional<V>& b) {
  if (b) return value_json(*b);
  return g.status == Availability::kSkipped ? "skip" : "undef";
}

template <class V>
Json bounds_json(const ProblemInstance<V>& problem, const BoundReport<V>& b) {
  Json j;
  j["K"] = b.horizon;
  j["ground_size"] = b.ground_size;
  j["f_GK"] = value_json(b.f_GK);
  j["f_g1"] = value_json(b.f_g1);
  j["B_s"] = value_json(b.B_s);
  Json c = Json::array();
  for (const auto& v : b.epoch_maxima) c.push_back(value_json(v));
  j["epoch_maxima"] = std::move(c);
  j["gamma_G"] = gamma_json(problem, b.gamma_G);
  j["gamma_Gpp"] = gamma_json(problem, b.gamma_Gpp);
  j["beta0"] = b.beta0;
  j["beta1_G"] = beta1_json(b.gamma_G, b.beta1_G);
  j["beta1_Gpp"] = beta1_json(b.gamma_Gpp, b.beta1_Gpp);
  j["beta2"] = value_json(b.beta2);
  if (b.f_opt) j["f_opt"] = value_json(*b.f_opt);
  if (b.ratio) j["ratio"] = value_json(*b.ratio);
  return j;
}

struct VerifyFlags {
  std::string instance;
  std::string exact = "auto";
  bool json = false;
  std::string report;
  std::string csv;
  std::size_t max_ground = 8;
  std::size_t max_horizon = 6;
  std::size_t samples = 1000;
  std::uint64_t seed = 0x5eed;
};

template <class V>
int verify_impl(TabulatedData<V> data, const VerifyFlags& flags, std::ostream& out) {
  const ProblemInstance<V> problem = make_tabulated_problem(std::move(data));
  VerifyOptions options;
  options.guard = {flags.max_ground, flags.max_horizon};
  options.samples = flags.samples;
  options.seed = flags.seed;
  options.throw_on_violation = false;
  SuperiorityReport<V> rep = verify_superiority(problem, options);

  auto& A = rep.assumptions;
  if (problem.permutation_invariant() && !problem.repeat_allowed() && problem.ground_size() <= 12) {
    A.set_submodular = check_set_submodular(problem);
  } else {
    A.set_submodular = unchecked<V>("not a set problem");
  }
  A.string_submodular = check_string_submodular(problem, flags.samples, flags.seed);
  try {
    A.matroid = check_string_matroid(problem);
  } catch (const SearchSpaceTooLarge& e) {
    A.matroid = unchecked<V>(e.what());
  }

  Json report;
  report["instance"] = flags.instance;
  report["exact"] = ValueTraits<V>::kExact;
  report["greedy"] = {{"choices", problem.describe(rep.trace.choices)},
                      {"ids", rep.trace.choices.symbols()}};
  {
    Json vals = Json::array();
    for (const auto& v : rep.trace.values) vals.push_back(value_json(v));
    report["greedy"]["values"] = std::move(vals);
  }
  report["optimum"] = {{"best", problem.describe(rep.opt.best)},
                       {"ids", rep.opt.best.symbols()},
                       {"value", value_json(rep.opt.value)},
                       {"explored", rep.opt.explored},
                       {"ties", rep.opt.optima.size()}};
  Json assumptions;
  for (std::size_t i = 1; i <= 7; ++i) {
    assumptions["A" + std::to_string(i)] = verdict_json(problem, A[i]);
  }
  assumptions["A1_optimum_ordering"] = problem.describe(A.optimum_ordering);
  assumptions["A1_any_optimum"] = A.any_optimum_satisfies_a1;
  assumptions["set_submodular"] = verdict_json(problem, A.set_submodular);
  assumptions["string_submodular"] = verdict_json(problem, A.string_submodular);
  assumptions["matroid"] = verdict_json(problem, A.matroid);
  report["assumptions"] = std::move(assumptions);
  report["bounds"] = bounds_json(problem, rep.bounds);
  Json legs = Json::array();
  for (const auto& leg : rep.legs) {
    Json l{{"inequality", leg.name}, {"requires", leg.requires_}, {"applicable", leg.applicable}};
    if (leg.applicable) {
      l["lhs"] = value_json(leg.lhs);
      l["rhs"] = value_json(leg.rhs);
      l["holds"] = leg.holds;
    }
    legs.push_back(std::move(l));
  }
  report["chain"] = {{"ok", rep.ok()}, {"legs", std::move(legs)}};

  if (!flags.report.empty()) write_atomic(flags.report, report.dump(2) + "\n");
  if (!flags.csv.empty()) {
    Table t;
    Row row{{"instance", Cell::str(flags.instance)}};
    if constexpr (ValueTraits<V>::kExact) {
      append_bound_columns(row, to_double_report(rep.bounds), true);
    } else {
      append_bound_columns(row, rep.bounds, true);
    }
    t.add(std::move(row));
    write_atomic(flags.csv, t.to_csv());
  }

  if (flags.json) {
    out << report.dump(2) << "\n";
    return rep.ok() ? kExitOk : kExitVerdict;
  }

  const auto& b = rep.bounds;
  out << "instance " << flags.instance << ": |S| = " << problem.ground_size()
      << ", K = " << problem.horizon() << (ValueTraits<V>::kExact ? ", exact" : ", floating")
      << "\n";
  out << "greedy   " << problem.describe(rep.trace.choices) << "  f = " << show(b.f_GK) << "\n";
  out << "optimum  " << problem.describe(rep.opt.best) << "  f = " << show(rep.opt.value)
      << "  (" << rep.opt.explored << " strings searched)\n\n";
  out << "assumption         verdict\n";
  auto line = [&](const std::string& name, const Verdict<V>& v) {
    out << "  " << std::left << std::setw(17) << name << v.label();
    if (v.witness) out << ": " << v.witness->description;
    if (!v.note.empty()) out << " [" << v.note << "]";
    out << "\n";
  };
  for (std::size_t i = 1; i <= 7; ++i) line("A" + std::to_string(i), A[i]);
  line("set submodular", A.set_submodular);
  line("string submod.", A.string_submodular);
  line("matroid", A.matroid);
  if (!A[1].holds()) {
    out << "  some optimum satisfies A1: " << (A.any_optimum_satisfies_a1 ? "yes" : "no") << "\n";
  }
  out << "\nbounds\n";
  out << "  B_s        " << show(b.B_s) << "\n";
  auto gamma_line = [&](const char* name, const GammaValue<V>& g,
                        const std::optional<V>& beta) {
    out << "  " << name << (g.defined() ? show(g.value) : std::string(sentinel(g.status)));
    if (!g.defined() && !g.reason.empty()) out << " (" << g.reason << ")";
    out << "\n";
    out << "    beta1    " << (beta ? show(*beta) : std::string(sentinel(g.status))) << "\n";
  };
  gamma_line("gamma_G    ", b.gamma_G, b.beta1_G);
  gamma_line("gamma_G''  ", b.gamma_Gpp, b.beta1_Gpp);
  out << "  beta0      " << Cell::format_number(b.beta0) << "\n";
  out << "  beta2      " << show(b.beta2) << "\n";
  if (rep.bounds.ratio) {
    out << "\nchain  f(G_K)/f(O_K) = " << Cell::format_number(to_double(*rep.bounds.ratio))
        << " >= beta2 = " << Cell::format_number(to_double(b.beta2));
    if (b.beta1_G) out << " >= beta1 = " << Cell::format_number(to_double(*b.beta1_G));
    out << "\n";
  }
  for (const auto& leg : rep.legs) {
    out << "  [" << (!leg.applicable ? "n/a" : leg.holds ? "ok " : "FAIL") << "] " << leg.name;
    if (leg.applicable) out << ": " << show(leg.lhs) << " vs " << show(leg.rhs);
    else out << " (needs " << leg.requires_ << ")";
    out << "\n";
  }
  out << (rep.ok() ? "certified\n" : "chain violation\n");
  return rep.ok() ? kExitOk : kExitVerdict;
}

int cmd_verify(const VerifyFlags& flags, std::ostream& out) {
  const nlohmann::json j = parse_json_file(flags.instance);
  bool exact = false;
  if (flags.exact == "yes") {
    exact = true;
  } else if (flags.exact == "auto") {
    exact = tabulated_json_is_exact(j);
  }
  if (exact) return verify_impl(tabulated_from_json<Rational>(j), flags, out);
  return verify_impl(tabulated_from_json<double>(j), flags, out);
}

struct CounterexampleFlags {
  std::string instance;
  std::string emit;
  bool json = false;
};

int cmd_counterexample(const CounterexampleFlags& flags, std::ostream& out) {
  TabulatedData<Rational> data = counterexample_table();
  if (!flags.instance.empty()) {
    const nlohmann::json j = parse_json_file(flags.instance);
    if (!tabulated_json_is_exact(j)) throw FormatError("counterexample instances must be exact");
    data = tabulated_from_json<Rational>(j);
  }
  if (!flags.emit.empty()) write_atomic(flags.emit, tabulated_to_json(data).dump(2) + "\n");
  const ProblemInstance<Rational> problem = make_tabulated_problem(data);
  const CounterexampleReport rep = verify_counterexample(problem);
  GreedyTrace<Rational> trace = rep.trace;
  const BoundReport<Rational> bounds = compute_bound_report(problem, trace);

  if (flags.json) {
    Json j;
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
      checks.push_back(
          {{"check", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"passed", c.passed}});
    }
    j["checks"] = std::move(checks);
    j["alpha_gamma"] = rep.alpha_gamma.str();
    j["lhs"] = rep.lhs.str();
    j["rhs"] = rep.rhs.str();
    j["bounds"] = bounds_json(problem, bounds);
    j["passed"] = rep.all_passed();
    out << j.dump(2) << "\n";
    return rep.all_passed() ? kExitOk : kExitVerdict;
  }

  out << "counterexample over " << problem.describe(StringSeq{0, 1, 2, 3}) << ", K = "
      << problem.horizon() << " (exact arithmetic)\n";
  for (const auto& c : rep.checks) {
    out << "  [" << (c.passed ? "ok" : "MISMATCH") << "] " << c.name << ": " << c.actual;
    if (!c.passed) out << " (expected " << c.expected << ")";
    out << "\n";
  }
  out << "greedy " << problem.describe(rep.trace.choices) << ", B_s = " << bounds.B_s.str()
      << ", gamma_G = "
      << (bounds.gamma_G.defined() ? bounds.gamma_G.value.str() : std::string("undef"))
      << ", beta2 = " << bounds.beta2.str();
  if (bounds.beta1_G) out << ", beta1 = " << bounds.beta1_G->str();
  out << ", gamma_G'' = "
      << (bounds.gamma_Gpp.defined() ? bounds.gamma_Gpp.value.str()
                                     : "undef (" + bounds.gamma_Gpp.reason + ")")
      << "\n";
  out << (rep.all_passed() ? "all six checks pass\n" : "reproduction mismatch\n");
  return rep.all_passed() ? kExitOk : kExitVerdict;
}

struct OutputFlags {
  std::string out_path;
  bool json = false;
  bool timing = false;
};

void emit_table(const Table& table, const OutputFlags& flags, std::ostream& out) {
  if (!flags.out_path.empty()) {
    write_atomic(flags.out_path, table.to_csv());
    if (flags.json) {
      std::filesystem::path p(flags.out_path);
      p.replace_extension(".jsonl");
      write_atomic(p, table.to_json_lines());
    }
  }
  out << (flags.json ? table.to_json_lines() : table.to_csv());
}

struct SensorFlags {
  std::string mode = "homo";
  std::vector<std::size_t> k{5};
  std::vector<double> lambda{0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0};
  double zeta = 0.1;
  std::uint64_t seed = 1;
  double cell_size = 1.0;
  double spacing = 1.0;
  OutputFlags output;
};

int cmd_sensor(const SensorFlags& flags, std::ostream& out) {
  SensorConfig config;
  config.mode = parse_decay_mode(flags.mode);
  config.horizons = flags.k;
  config.lambdas = flags.lambda;
  config.zeta = flags.zeta;
  config.seed = flags.seed;
  config.space.cell_size = flags.cell_size;
  config.space.placement_spacing = flags.spacing;
  for (std::size_t k : config.horizons) {
    if (k == 0) throw UsageError("--k must be at least 1");
  }
  const EventDensityField field = generate_density(config.space, config.seed);
  Table table;
  for (std::size_t k : config.horizons) {
    for (double lambda : config.lambdas) {
      const auto start = std::chrono::steady_clock::now();
      const SensorRow r = run_sensor_point(config, field, lambda, k);
      Row row{{"mode", Cell::str(to_string(r.mode))},
              {"lambda1", Cell::number(r.lambda1)},
              {"zeta", Cell::number(r.zeta)},
              {"seed", Cell::integer(r.seed)},
              {"cells", Cell::integer(r.cells)},
              {"placements", Cell::integer(r.placements)}};
      append_bound_columns(row, r.bounds);
      if (flags.output.timing) row.emplace_back("ms", Cell::number(elapsed_ms(start)));
      table.add(std::move(row));
    }
  }
  emit_table(table, flags.output, out);
  return kExitOk;
}

struct WelfareFlags {
  std::string mode = "set";
  std::vector<std::size_t> agents{10, 20, 30, 40, 50, 60};
  std::size_t items = 60;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::string bs_variant = "per-item-max";
  OutputFlags output;
};

int cmd_welfare(const WelfareFlags& flags, std::ostream& out) {
  WelfareConfig config;
  config.mode = parse_welfare_mode(flags.mode);
  config.items = flags.items;
  config.trials = flags.trials;
  config.seed = flags.seed;
  config.variant = parse_bs_variant(flags.bs_variant);
  if (config.items == 0 || config.trials == 0) throw UsageError("--items and --trials must be positive");
  Table table;
  for (std::size_t n : flags.agents) {
    if (n == 0) throw UsageError("--agents must be positive");
    config.agents = {n};
    const auto start = std::chrono::steady_clock::now();
    const WelfareRow r = run_welfare_experiment(config).front();
    Row row{{"mode", Cell::str(to_string(r.mode))},
            {"agents", Cell::integer(r.agents)},
            {"items", Cell::integer(r.items)},
            {"trials", Cell::integer(r.trials)},
            {"seed", Cell::integer(r.seed)},
            {"bs_variant", Cell::str(to_string(r.variant))},
            {"mean_beta2", Cell::number(r.mean_beta2)},
            {"ci95_low", Cell::number(r.ci95_low)},
            {"ci95_high", Cell::number(r.ci95_high)},
            {"mean_f_GK", Cell::number(r.mean_f_GK)},
            {"mean_B_s", Cell::number(r.mean_B_s)},
            {"beta0", Cell::number(r.beta0)}};
    if (flags.output.timing) row.emplace_back("ms", Cell::number(elapsed_ms(start)));
    table.add(std::move(row));
  }
  emit_table(table, flags.output, out);
  return kExitOk;
}

struct BenchFlags {
  std::size_t instances = 1000;
  std::uint64_t seed = 2026;
  std::size_t max_ground = 6;
  std::size_t max_horizon = 4;
  std::string kind = "set";
  OutputFlags output;
};

int cmd_bench(const BenchFlags& flags, std::ostream& out) {
  SuiteConfig config;
  config.instances = flags.instances;
  config.seed = flags.seed;
  config.max_ground = flags.max_ground;
  config.max_horizon = flags.max_horizon;
  if (config.max_ground < 2 || config.max_ground > 8 || config.max_horizon < 1) {
    throw UsageError("--max-ground must be in [2, 8] and --max-horizon at least 1");
  }
  if (flags.kind == "set") {
    config.kind = SuiteKind::kSet;
  } else if (flags.kind == "string") {
    config.kind = SuiteKind::kString;
  } else {
    throw UsageError("--kind must be set or string");
  }
  const auto start = std::chrono::steady_clock::now();
  const SuiteSummary s = run_superiority_suite(config);
  const double ms = elapsed_ms(start);

  Table table;
  for (const auto& [name, tally] : s.legs) {
    Row row{{"kind", Cell::str(to_string(config.kind))},
            {"instances", Cell::integer(s.instances)},
            {"seed", Cell::integer(config.seed)},
            {"inequality", Cell::str(name)},
            {"applicable", Cell::integer(tally.applicable)},
            {"violations", Cell::integer(tally.violations)}};
    table.add(std::move(row));
  }
  if (!flags.output.out_path.empty() || flags.output.json) {
    emit_table(table, flags.output, out);
  } else {
    out << s.instances << " " << to_string(config.kind) << " instances, seed " << config.seed
        << ": A1-A2 " << s.a1_a2 << ", A1-A5 " << s.a1_a5 << ", A1-A7 " << s.a1_a7 << "\n";
    for (const auto& [name, tally] : s.legs) {
      out << "  " << std::left << std::setw(58) << name << tally.applicable << " checked, "
          << tally.violations << " violated\n";
    }
    for (std::size_t i = 0; i < s.violations.size() && i < 10; ++i) {
      const auto& v = s.violations[i];
      out << "  violation: instance " << v.index << ", " << v.leg << ": "
          << Cell::format_number(v.lhs) << " < " << Cell::format_number(v.rhs) << "\n";
    }
  }
  if (flags.output.timing) out << "elapsed " << Cell::format_number(ms) << " ms\n";
  return s.ok() ? kExitOk : kExitVerdict;
}

void add_output_flags(CLI::App* cmd, OutputFlags& o) {
  cmd->add_option("--out", o.out_path, "Write CSV here (atomically)");
  cmd->add_flag("--json", o.json, "Emit JSON lines instead of CSV");
  cmd->add_flag("--timing", o.timing, "Add a wall-clock ms column");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Greedy string optimisation with computable performance certificates",
               "greedy_certify"};
  app.require_subcommand(1);

  CounterexampleFlags cx;
  auto* c_cx = app.add_subcommand("counterexample", "Reproduce the four-symbol counterexample");
  c_cx->add_option("--instance", cx.instance, "Exact tabulated instance to check instead")
      ->check(CLI::ExistingFile);
  c_cx->add_option("--emit-instance", cx.emit, "Write the instance as JSON");
  c_cx->add_flag("--json", cx.json, "Print the report as JSON");

  VerifyFlags vf;
  auto* c_verify = app.add_subcommand("verify", "Certify greedy on a tabulated instance");
  c_verify->add_option("--instance", vf.instance, "Tabulated instance (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  c_verify->add_option("--exact", vf.exact, "Rational arithmetic: auto, yes or no")
      ->check(CLI::IsMember({"auto", "yes", "no"}));
  c_verify->add_flag("--json", vf.json, "Print the JSON report instead of the table");
  c_verify->add_option("--report", vf.report, "Also write the JSON report here");
  c_verify->add_option("--csv", vf.csv, "Also write the bound row as CSV");
  c_verify->add_option("--max-ground", vf.max_ground, "Enumeration guard: ground set size");
  c_verify->add_option("--max-horizon", vf.max_horizon, "Enumeration guard: horizon");
  c_verify->add_option("--samples", vf.samples, "Samples for sampled checks");
  c_verify->add_option("--seed", vf.seed, "Seed for sampled checks");

  SensorFlags sf;
  auto* c_sensor = app.add_subcommand("sensor", "Sensor coverage sweep");
  c_sensor->add_option("--mode", sf.mode, "homo or nonhomo")
      ->check(CLI::IsMember({"homo", "nonhomo", "homogeneous", "nonhomogeneous"}));
  c_sensor->add_option("--k", sf.k, "Number of sensors (one or more)")->expected(1, -1);
  c_sensor->add_option("--lambda", sf.lambda, "Initial decay rates (one or more)")
      ->expected(1, -1);
  c_sensor->add_option("--zeta", sf.zeta, "Decay rate increase (nonhomo)");
  c_sensor->add_option("--seed", sf.seed, "Density seed");
  c_sensor->add_option("--cell-size", sf.cell_size, "Integration cell size");
  c_sensor->add_option("--spacing", sf.spacing, "Placement lattice spacing");
  add_output_flags(c_sensor, sf.output);

  WelfareFlags wf;
  auto* c_welfare = app.add_subcommand("welfare", "Welfare maximisation trials");
  c_welfare->add_option("--mode", wf.mode, "set or string")->check(CLI::IsMember({"set", "string"}));
  c_welfare->add_option("--agents", wf.agents, "Agent counts (one or more)")->expected(1, -1);
  c_welfare->add_option("--items", wf.items, "Number of items");
  c_welfare->add_option("--trials", wf.trials, "Trials per agent count");
  c_welfare->add_option("--seed", wf.seed, "Master seed");
  c_welfare->add_option("--bs-variant", wf.bs_variant, "per-item-max or top-pairs")
      ->check(CLI::IsMember({"per-item-max", "top-pairs"}));
  add_output_flags(c_welfare, wf.output);

  BenchFlags bf;
  auto* c_bench = app.add_subcommand("bench", "Certification chain over random instances");
  c_bench->add_option("--instances", bf.instances, "Number of instances");
  c_bench->add_option("--seed", bf.seed, "Master seed");
  c_bench->add_option("--max-ground", bf.max_ground, "Largest ground set");
  c_bench->add_option("--max-horizon", bf.max_horizon, "Largest horizon");
  c_bench->add_option("--kind", bf.kind, "set or string")->check(CLI::IsMember({"set", "string"}));
  add_output_flags(c_bench, bf.output);

  std::vector<const char*> argv;
  argv.push_back("greedy_certify");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_cx->parsed()) return cmd_counterexample(cx, out);
    if (c_verify->parsed()) return cmd_verify(vf, out);
    if (c_sensor->parsed()) return cmd_sensor(sf, out);
    if (c_welfare->parsed()) return cmd_welfare(wf, out);
    if (c_bench->parsed()) return cmd_bench(bf, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerdict;
  }
  return kExitUsage;
}

}  // namespace greedy_certify::cli
