#include "pathex/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "pathex/certify.hpp"
#include "pathex/constructions.hpp"
#include "pathex/graph_io.hpp"
#include "pathex/io.hpp"

namespace pathex {

namespace {

enum class Kind { Int, Real, Text, IntList, Flag };

struct Key {
  const char* name;
  Kind kind;
  const char* help;
};

const std::map<std::string, std::vector<Key>>& command_keys() {
  static const std::map<std::string, std::vector<Key>> keys = {
      {"optimize",
       {{"pattern", Kind::Text, "path | cycle | rho | anchored (optionally with size, e.g. path4)"},
        {"m", Kind::Int, "pattern size"},
        {"n", Kind::Int, "host size"},
        {"s", Kind::Int, "edges of the path anchored at a"},
        {"t", Kind::Int, "edges of the path anchored at b"},
        {"a", Kind::Int, "first anchor (default n)"},
        {"b", Kind::Int, "second anchor (default 1)"},
        {"mass", Kind::Real, "total mass"},
        {"restarts", Kind::Int, "number of restarts"},
        {"max-iterations", Kind::Int, "iteration cap per restart"},
        {"step-rule", Kind::Text, "line-search | fixed"},
        {"method", Kind::Text, "projected-gradient | frank-wolfe"},
        {"tol", Kind::Real, "convergence tolerance"},
        {"fixed-step", Kind::Real, "step for the fixed rule"},
        {"seed", Kind::Int, "random seed"}}},
      {"evaluate",
       {{"measure", Kind::Text, "uniform-cycle"},
        {"measure-file", Kind::Text, "measure JSON file"},
        {"arithmetic", Kind::Text, "rational | float"},
        {"pattern", Kind::Text, "path | cycle | rho | anchored"},
        {"m", Kind::Int, "cycle length of the measure and default pattern size"},
        {"k", Kind::Int, "pattern size when it differs from m"},
        {"n", Kind::Int, "host size"},
        {"s", Kind::Int, "edges of the path anchored at a"},
        {"t", Kind::Int, "edges of the path anchored at b"},
        {"a", Kind::Int, "first anchor (default n)"},
        {"b", Kind::Int, "second anchor (default 1)"}}},
      {"construct",
       {{"m", Kind::Int, "half cycle length"},
        {"n-list", Kind::IntList, "host sizes"},
        {"graph6", Kind::Flag, "include graph6 of each blow-up"}}},
      {"oracle",
       {{"n", Kind::Int, "host size"},
        {"pattern", Kind::Text, "path | cycle (optionally with size, e.g. path3)"},
        {"k", Kind::Int, "pattern size"},
        {"mode", Kind::Text, "maximal | all"},
        {"strategy", Kind::Text, "canonical | labeled"},
        {"cap", Kind::Int, "largest admissible n"},
        {"witness-cap", Kind::Int, "witnesses to report"}}},
      {"certify",
       {{"n-max", Kind::Int, "largest host size"},
        {"restarts", Kind::Int, "restarts per optimization"},
        {"seed", Kind::Int, "random seed"}}},
  };
  return keys;
}

const Key* find_key(const std::string& command, const std::string& name) {
  const auto& keys = command_keys().at(command);
  for (const Key& k : keys)
    if (name == k.name) return &k;
  return nullptr;
}

std::string normalized(std::string name) {
  std::replace(name.begin(), name.end(), '_', '-');
  return name;
}

class Params {
 public:
  Params(std::string command, const nlohmann::json& p) : command_(std::move(command)), p_(p) {}

  bool has(const std::string& k) const { return p_.contains(k) && !p_.at(k).is_null(); }

  long long integer(const std::string& k, long long fallback) const {
    if (!has(k)) return fallback;
    const auto& v = p_.at(k);
    if (!v.is_number_integer()) usage("'" + k + "' must be an integer");
    return v.get<long long>();
  }

  long long required_integer(const std::string& k) const {
    if (!has(k)) usage(command_ + " needs --" + k);
    return integer(k, 0);
  }

  double real(const std::string& k, double fallback) const {
    if (!has(k)) return fallback;
    const auto& v = p_.at(k);
    if (!v.is_number()) usage("'" + k + "' must be a number");
    return v.get<double>();
  }

  std::string text(const std::string& k, const std::string& fallback) const {
    if (!has(k)) return fallback;
    const auto& v = p_.at(k);
    if (!v.is_string()) usage("'" + k + "' must be a string");
    return v.get<std::string>();
  }

  bool flag(const std::string& k) const { return has(k) && p_.at(k).is_boolean() && p_.at(k).get<bool>(); }

  std::vector<int> int_list(const std::string& k) const {
    if (!has(k)) usage(command_ + " needs --" + k);
    const auto& v = p_.at(k);
    if (!v.is_array()) usage("'" + k + "' must be a list of integers");
    std::vector<int> out;
    for (const auto& x : v) {
      if (!x.is_number_integer()) usage("'" + k + "' must be a list of integers");
      out.push_back(x.get<int>());
    }
    return out;
  }

  [[noreturn]] static void usage(const std::string& what) { throw Error(ErrorKind::Usage, what); }

 private:
  std::string command_;
  const nlohmann::json& p_;
};

int threads_from_env() {
  const int hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PATHEX_THREADS")) {
    try {
      return std::clamp(std::stoi(env), 1, hw);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Usage, "PATHEX_THREADS must be a positive integer");
    }
  }
  return 1;
}

/// "path", "path4", "rho" ... with sizes from k, then m.
PatternSpec parse_pattern(const Params& p, int n, bool allow_weighted) {
  std::string name = p.text("pattern", "");
  if (name.empty()) Params::usage("missing --pattern");
  int size = 0;
  const auto digits = name.find_first_of("0123456789");
  if (digits != std::string::npos) {
    size = std::stoi(name.substr(digits));
    name = name.substr(0, digits);
  } else {
    size = static_cast<int>(p.integer("k", p.integer("m", 0)));
  }
  PatternSpec out;
  if (name == "path") {
    out = PathPattern{size};
  } else if (name == "cycle") {
    out = CyclePattern{size};
  } else if (allow_weighted && name == "rho") {
    out = RhoPattern{size};
  } else if (allow_weighted && name == "anchored") {
    out = AnchoredPairPattern{static_cast<int>(p.required_integer("s")),
                              static_cast<int>(p.required_integer("t")),
                              static_cast<int>(p.integer("a", n)), static_cast<int>(p.integer("b", 1))};
  } else {
    Params::usage("unknown pattern '" + p.text("pattern", "") + "'");
  }
  try {
    validate(out, n);
  } catch (const Error& e) {
    Params::usage(e.what());
  }
  return out;
}

std::string format_of(const Params& p, bool csv_allowed) {
  const std::string f = p.text("format", "json");
  if (f != "json" && f != "csv") Params::usage("format must be json or csv");
  if (f == "csv" && !csv_allowed) Params::usage("csv output is only available for construct and certify");
  return f;
}

template <class S>
nlohmann::json scalar_json(const S& v) {
  if constexpr (is_exact_v<S>) return to_string(v);
  else return v;
}

template <class S>
nlohmann::json evaluate_with(const EdgeMeasure<S>& mu, const PatternSpec& pattern) {
  const S value = density(mu, pattern);
  nlohmann::json result = {{"pattern", pattern_to_json(pattern)},
                           {"value", scalar_json(value)},
                           {"value_float", static_cast<double>(value)},
                           {"measure", to_json(mu)}};
  if (mu.mass() > 0) {
    const auto kkt = kkt_check(mu, pattern, S(0));
    result["kkt"] = {{"lambda", scalar_json(kkt.lambda)},
                     {"max_violation", scalar_json(kkt.max_violation)},
                     {"max_inactive_excess", scalar_json(kkt.max_inactive_excess)},
                     {"support_size", kkt.support_size},
                     {"stationary", kkt.stationary}};
  }
  if (const auto* path = std::get_if<PathPattern>(&pattern); path && is_probability(mu)) {
    const Vector<S> res = mass_identity_residual(mu, path->vertices);
    nlohmann::json residuals = nlohmann::json::array();
    for (Eigen::Index x = 0; x < res.size(); ++x) residuals.push_back(scalar_json(res[x]));
    result["mass_identity_residual"] = std::move(residuals);
  }
  return result;
}

struct CommandOutput {
  nlohmann::json result;
  std::string csv;
  std::string arithmetic = "float64";
  bool envelope_violated = false;
};

CommandOutput run_optimize(const Params& p) {
  format_of(p, false);
  SolverConfig cfg;
  cfg.n = static_cast<int>(p.required_integer("n"));
  cfg.mass = p.real("mass", cfg.mass);
  cfg.restarts = static_cast<int>(p.integer("restarts", cfg.restarts));
  cfg.max_iterations = static_cast<int>(p.integer("max-iterations", cfg.max_iterations));
  cfg.convergence_tol = p.real("tol", cfg.convergence_tol);
  cfg.fixed_step = p.real("fixed-step", cfg.fixed_step);
  cfg.seed = static_cast<std::uint64_t>(p.integer("seed", 0));
  const std::string rule = p.text("step-rule", "line-search");
  if (rule != "line-search" && rule != "fixed") Params::usage("step-rule must be line-search or fixed");
  cfg.step_rule = rule == "fixed" ? StepRule::Fixed : StepRule::LineSearch;
  const std::string method = p.text("method", "projected-gradient");
  if (method != "projected-gradient" && method != "frank-wolfe")
    Params::usage("method must be projected-gradient or frank-wolfe");
  cfg.method = method == "frank-wolfe" ? SolverMethod::FrankWolfe : SolverMethod::ProjectedGradient;
  cfg.threads = threads_from_env();
  try {
    cfg.validate();
  } catch (const Error& e) {
    Params::usage(e.what());
  }
  const PatternSpec pattern = parse_pattern(p, cfg.n, true);
  CommandOutput out;
  out.result = to_json(maximize(pattern, cfg));
  out.result["pattern"] = pattern_to_json(pattern);
  return out;
}

CommandOutput run_evaluate(const Params& p) {
  format_of(p, false);
  const std::string arithmetic = p.text("arithmetic", "rational");
  if (arithmetic != "rational" && arithmetic != "float") Params::usage("arithmetic must be rational or float");
  EdgeMeasure<Rational> mu;
  if (p.has("measure-file")) {
    std::ifstream in(p.text("measure-file", ""));
    if (!in) Params::usage("cannot open measure file '" + p.text("measure-file", "") + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Parse, e.what());
    }
    mu = measure_from_json<Rational>(j);
  } else {
    const std::string kind = p.text("measure", "uniform-cycle");
    if (kind != "uniform-cycle") Params::usage("measure must be uniform-cycle or given by --measure-file");
    mu = uniform_cycle_measure<Rational>(static_cast<int>(p.required_integer("m")),
                                         static_cast<int>(p.required_integer("n")));
  }
  const PatternSpec pattern = parse_pattern(p, mu.order(), true);
  CommandOutput out;
  if (arithmetic == "rational") {
    out.arithmetic = "rational";
    out.result = evaluate_with(mu, pattern);
  } else {
    out.result = evaluate_with(mu.cast<double>(), pattern);
  }
  return out;
}

CommandOutput run_construct(const Params& p) {
  const std::string format = format_of(p, true);
  const int m = static_cast<int>(p.required_integer("m"));
  const std::vector<int> ns = p.int_list("n-list");
  for (int n : ns)
    if (n > 24) throw Error(ErrorKind::ResourceLimit, "blow-up counting is capped at n = 24");
  const auto rows = conjecture_gap_report(m, ns);
  CommandOutput out;
  nlohmann::json table = nlohmann::json::array();
  for (const auto& row : rows) table.push_back(to_json(row));
  out.result = {{"rows", table}};
  if (p.flag("graph6")) {
    nlohmann::json graphs = nlohmann::json::array();
    for (int n : ns) {
      const SimpleGraph g = blowup_cycle(m, n);
      graphs.push_back({{"n", n}, {"graph6", to_graph6(g)}, {"planar", is_planar(g)}});
    }
    out.result["graphs"] = std::move(graphs);
  }
  if (format == "csv") out.csv = gap_report_csv(rows);
  return out;
}

nlohmann::json oracle_query(const Params& p) {
  OracleQuery q;
  q.n = static_cast<int>(p.required_integer("n"));
  q.pattern = parse_pattern(p, q.n, false);
  const std::string mode = p.text("mode", "maximal");
  if (mode != "maximal" && mode != "all") Params::usage("mode must be maximal or all");
  q.mode = mode == "all" ? OracleMode::AllGraphs : OracleMode::MaximalPlanarOnly;
  const std::string strategy = p.text("strategy", "canonical");
  if (strategy != "canonical" && strategy != "labeled") Params::usage("strategy must be canonical or labeled");
  q.strategy = strategy == "labeled" ? OracleStrategy::LabeledFilter : OracleStrategy::Canonical;
  q.cap = static_cast<int>(p.integer("cap", q.cap));
  q.witness_cap = static_cast<int>(p.integer("witness-cap", q.witness_cap));
  nlohmann::json r = to_json(max_copies_planar(q));
  r["n"] = q.n;
  r["pattern"] = pattern_to_json(q.pattern);
  r["mode"] = to_string(q.mode);
  return r;
}

CommandOutput run_oracle(const Params& p, const nlohmann::json& params) {
  format_of(p, false);
  CommandOutput out;
  if (params.contains("queries")) {
    if (!params["queries"].is_array()) Params::usage("queries must be a list");
    nlohmann::json results = nlohmann::json::array();
    for (const auto& entry : params["queries"]) {
      nlohmann::json merged = params;
      merged.erase("queries");
      for (const auto& [k, v] : entry.items()) merged[normalized(k)] = v;
      results.push_back(oracle_query(Params("oracle", merged)));
    }
    out.result = {{"queries", results}};
  } else {
    out.result = oracle_query(p);
  }
  return out;
}

CommandOutput run_certify(const Params& p) {
  const std::string format = format_of(p, true);
  EnvelopeOptions o;
  o.n_max = static_cast<int>(p.integer("n-max", o.n_max));
  o.restarts = static_cast<int>(p.integer("restarts", o.restarts));
  o.seed = static_cast<std::uint64_t>(p.integer("seed", static_cast<long long>(o.seed)));
  o.threads = threads_from_env();
  if (o.n_max < 4 || o.n_max > 10) Params::usage("n-max must be in [4, 10]");
  if (o.restarts < 1) Params::usage("restarts must be >= 1");
  const auto checks = run_envelope_suite(o);
  CommandOutput out;
  nlohmann::json rows = nlohmann::json::array();
  bool all = true;
  for (const auto& c : checks) {
    rows.push_back(to_json(c));
    all = all && c.pass;
  }
  out.result = {{"checks", rows}, {"all_pass", all}};
  out.envelope_violated = !all;
  if (format == "csv") out.csv = envelope_csv(checks);
  return out;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ResourceLimit: return kExitResourceLimit;
    case ErrorKind::NonProbabilityMeasure:
    case ErrorKind::DegenerateMeasure: return kExitFailure;
    default: return kExitUsage;
  }
}

void report_error(std::ostream& err, ErrorKind kind, const std::string& what) {
  err << nlohmann::json{{"error", {{"kind", std::string(to_string(kind))}, {"message", what}}}}.dump() << '\n';
}

}  // namespace

ExperimentManifest ExperimentManifest::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Usage, "manifest must be a JSON object");
  ExperimentManifest m;
  for (const auto& [k, v] : j.items()) {
    const std::string key = normalized(k);
    if (key == "command") {
      if (!v.is_string()) throw Error(ErrorKind::Usage, "command must be a string");
      m.command = v.get<std::string>();
    } else {
      m.params[key] = v;
    }
  }
  return m;
}

int run(const ExperimentManifest& manifest, std::ostream& out, std::ostream& err) {
  try {
    if (!command_keys().contains(manifest.command))
      throw Error(ErrorKind::Usage, "unknown command '" + manifest.command + "'");
    for (const auto& [k, v] : manifest.params.items()) {
      if (k == "format" || k == "out" || k == "manifest" || (k == "queries" && manifest.command == "oracle"))
        continue;
      if (!find_key(manifest.command, k))
        throw Error(ErrorKind::Usage, "unknown parameter '" + k + "' for " + manifest.command);
    }
    const Params p(manifest.command, manifest.params);
    CommandOutput result;
    if (manifest.command == "optimize") result = run_optimize(p);
    else if (manifest.command == "evaluate") result = run_evaluate(p);
    else if (manifest.command == "construct") result = run_construct(p);
    else if (manifest.command == "oracle") result = run_oracle(p, manifest.params);
    else result = run_certify(p);

    std::string text;
    if (!result.csv.empty()) {
      text = result.csv;
    } else {
      nlohmann::json manifest_json = manifest.params;
      manifest_json.erase("out");
      manifest_json.erase("manifest");
      const nlohmann::json report = {{"command", manifest.command},
                                     {"version", PATHEX_VERSION},
                                     {"arithmetic", result.arithmetic},
                                     {"manifest", manifest_json},
                                     {"result", result.result}};
      text = report.dump(2) + "\n";
    }
    if (manifest.params.contains("out")) {
      const std::string path = Params(manifest.command, manifest.params).text("out", "");
      std::ofstream file(path, std::ios::binary);
      if (!file) throw Error(ErrorKind::Usage, "cannot write '" + path + "'");
      file << text;
    } else {
      out << text;
    }
    return result.envelope_violated ? kExitEnvelopeViolation : kExitOk;
  } catch (const Error& e) {
    report_error(err, e.kind(), e.what());
    return exit_code_for(e.kind());
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Path-density workbench: optimize, evaluate, construct, oracle, certify", "pathex"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(PATHEX_VERSION));
  std::map<std::string, std::string> values;
  std::map<std::string, std::vector<int>> lists;
  std::map<std::string, bool> flags;
  std::map<std::string, CLI::App*> subs;
  std::map<std::string, std::vector<std::pair<std::string, CLI::Option*>>> options;
  const std::map<std::string, std::string> about = {
      {"optimize", "maximize a pattern density over edge measures on K_n"},
      {"evaluate", "evaluate a density, KKT report and vertex identity at a given measure"},
      {"construct", "count long paths in blown-up even cycles"},
      {"oracle", "maximum pattern count over planar graphs on n vertices"},
      {"certify", "run the bound-envelope suite"},
  };
  for (const auto& [command, keys] : command_keys()) {
    CLI::App* sub = app.add_subcommand(command, about.at(command));
    subs[command] = sub;
    for (const Key& k : keys) {
      const std::string flag = std::string("--") + k.name;
      CLI::Option* opt = nullptr;
      switch (k.kind) {
        case Kind::IntList: opt = sub->add_option(flag, lists[command + "/" + k.name], k.help)->delimiter(','); break;
        case Kind::Flag: opt = sub->add_flag(flag, flags[command + "/" + k.name], k.help); break;
        default: opt = sub->add_option(flag, values[command + "/" + k.name], k.help); break;
      }
      options[command].emplace_back(k.name, opt);
    }
    options[command].emplace_back("format", sub->add_option("--format", values[command + "/format"], "json | csv"));
    options[command].emplace_back("out", sub->add_option("--out", values[command + "/out"], "report path"));
    options[command].emplace_back("manifest",
                                  sub->add_option("--manifest", values[command + "/manifest"], "JSON manifest"));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::ostringstream msg;
      app.exit(e, msg, msg);
      out << msg.str();
      return kExitOk;
    }
    report_error(err, ErrorKind::Usage, e.what());
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    ExperimentManifest manifest{command, nlohmann::json::object()};
    if (subs[command]->get_option("--manifest")->count() > 0) {
      const std::string path = values[command + "/manifest"];
      std::ifstream in(path);
      if (!in) throw Error(ErrorKind::Usage, "cannot open manifest '" + path + "'");
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Usage, std::string("manifest: ") + e.what());
      }
      manifest = ExperimentManifest::from_json(j);
      if (manifest.command.empty()) manifest.command = command;
      if (manifest.command != command)
        throw Error(ErrorKind::Usage, "manifest command '" + manifest.command + "' differs from '" + command + "'");
    }
    for (const auto& [name, opt] : options[command]) {
      if (opt->count() == 0 || name == "manifest") continue;
      const std::string slot = command + "/" + name;
      const Key* key = find_key(command, name);
      const Kind kind = key ? key->kind : Kind::Text;
      const std::string& raw = values[slot];
      try {
        switch (kind) {
          case Kind::Int: {
            std::size_t used = 0;
            const long long v = std::stoll(raw, &used);
            if (used != raw.size()) throw std::invalid_argument(raw);
            manifest.params[name] = v;
            break;
          }
          case Kind::Real: {
            std::size_t used = 0;
            const double v = std::stod(raw, &used);
            if (used != raw.size()) throw std::invalid_argument(raw);
            manifest.params[name] = v;
            break;
          }
          case Kind::IntList: manifest.params[name] = lists[slot]; break;
          case Kind::Flag: manifest.params[name] = flags[slot]; break;
          case Kind::Text: manifest.params[name] = raw; break;
        }
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::Usage, "--" + name + ": invalid value '" + raw + "'");
      }
    }
    return run(manifest, out, err);
  } catch (const Error& e) {
    report_error(err, e.kind(), e.what());
    return exit_code_for(e.kind());
  }
}

}  // namespace pathex
