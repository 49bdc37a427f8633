// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#include "ew/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ew/analytic.hpp"
#include "ew/branching.hpp"
#include "ew/ensemble.hpp"
#include "ew/errors.hpp"
#include "ew/io.hpp"
#include "ew/laws.hpp"
#include "ew/limits.hpp"
#include "ew/numeric.hpp"
#include "ew/rng.hpp"
#include "ew/tree.hpp"
#include "ew/urn.hpp"
#include "ew/verify.hpp"
#include "ew/walk.hpp"

namespace ew::cli {
namespace {

using nlohmann::json;
using rng::Stream;
using rng::Tape;

// Resolved flag set of one invocation. Flags override config-file fields,
// which override the environment seed, which overrides the defaults.
struct Settings {
  double p = 1.0;
  std::string echo = "const:1";
  std::string spin = "const:1";
  std::int64_t n = 64;
  std::string checkpoints_text;
  std::vector<std::int64_t> checkpoints;
  std::int64_t reps = -1;  // -1: per-command default
  std::uint64_t seed = 1729;
  int threads = 1;
  std::string out;
  std::string format;  // resolved per command when empty
  std::string statistic = "scaled";
  double t = 4.0;
  double theta = 1.0;
  std::int64_t generations = 200;
  std::string suite = "all";
  bool horizon_is_count = false;  // brw: -n instead of --t
};

std::string hex64(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(v));
  return buf;
}

const std::set<std::string>& allowed_keys(const std::string& cmd) {
  static const std::set<std::string> classify = {"p",    "echo", "spin",
                                                 "seed", "format", "out"};
  static const std::set<std::string> walk = {"p",    "echo",   "spin", "n",
                                             "seed", "format", "out"};
  static const std::set<std::string> urn = {"p",    "echo",   "spin", "n",
                                            "reps", "seed",   "format", "out"};
  static const std::set<std::string> brw = {"echo", "theta",  "t",   "n",
                                            "seed", "format", "out"};
  static const std::set<std::string> fixpoint = {"echo", "reps", "generations",
                                                 "seed", "format", "out"};
  static const std::set<std::string> ensemble = {
      "p",    "echo",    "spin", "checkpoints", "reps", "statistic",
      "seed", "threads", "format", "out"};
  static const std::set<std::string> verify = {"suite", "seed", "threads",
                                               "out"};
  if (cmd == "classify") return classify;
  if (cmd == "walk" || cmd == "tree") return walk;
  if (cmd == "urn-check") return urn;
  if (cmd == "brw") return brw;
  if (cmd == "fixpoint") return fixpoint;
  if (cmd == "ensemble") return ensemble;
  if (cmd == "verify") return verify;
  throw ConfigError("unknown command '" + cmd + "'");
}

std::vector<std::int64_t> parse_checkpoints_text(const std::string& text) {
  std::vector<std::int64_t> cps;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::int64_t value = 0;
    const auto* begin = item.data();
    const auto* end = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (item.empty() || ec != std::errc() || ptr != end) {
      throw ConfigError(
          "field 'checkpoints' must be a comma-separated list of integers, "
          "got '" +
          text + "'");
    }
    cps.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return cps;
}

double want_number(const json& v, const std::string& key) {
  if (!v.is_number()) {
    throw ConfigError("config field '" + key + "' must be a number");
  }
  return v.get<double>();
}

std::int64_t want_integer(const json& v, const std::string& key) {
  if (!v.is_number_integer()) {
    throw ConfigError("config field '" + key + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

std::string want_string(const json& v, const std::string& key) {
  if (!v.is_string()) {
    throw ConfigError("config field '" + key + "' must be a string");
  }
  return v.get<std::string>();
}

// Copies config fields into the settings unless the same flag was given on
// the command line. Unknown or mistyped fields are named in the error.
void apply_config(const std::string& cmd, const json& doc, Settings& s,
                  const std::set<std::string>& given,
                  std::set<std::string>& config_given) {
  if (!doc.is_object()) {
    throw ConfigError("config must be a JSON object");
  }
  const auto& allowed = allowed_keys(cmd);
  for (const auto& [key, value] : doc.items()) {
    if (key == "command") {
      want_string(value, key);
      continue;
    }
    if (!allowed.count(key)) {
      throw ConfigError("config field '" + key + "' is not valid for command '" +
                        cmd + "'");
    }
    if (given.count(key)) continue;  // command line wins
    if (key == "p") {
      s.p = want_number(value, key);
    } else if (key == "echo") {
      s.echo = want_string(value, key);
    } else if (key == "spin") {
      s.spin = want_string(value, key);
    } else if (key == "n") {
      s.n = want_integer(value, key);
    } else if (key == "checkpoints") {
      if (value.is_string()) {
        s.checkpoints = parse_checkpoints_text(value.get<std::string>());
      } else if (value.is_array()) {
        std::vector<std::int64_t> cps;
        for (const auto& item : value) {
          cps.push_back(want_integer(item, key));
        }
        s.checkpoints = cps;
      } else {
        throw ConfigError(
            "config field 'checkpoints' must be an array of integers");
      }
    } else if (key == "reps") {
      s.reps = want_integer(value, key);
    } else if (key == "seed") {
      if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
        if (!value.is_number_unsigned()) {
          throw ConfigError("config field 'seed' must be a nonnegative integer");
        }
      }
      s.seed = value.get<std::uint64_t>();
    } else if (key == "threads") {
      s.threads = static_cast<int>(want_integer(value, key));
    } else if (key == "out") {
      s.out = want_string(value, key);
    } else if (key == "format") {
      s.format = want_string(value, key);
    } else if (key == "statistic") {
      s.statistic = want_string(value, key);
    } else if (key == "t") {
      s.t = want_number(value, key);
    } else if (key == "theta") {
      s.theta = want_number(value, key);
    } else if (key == "generations") {
      s.generations = want_integer(value, key);
    } else if (key == "suite") {
      s.suite = want_string(value, key);
    }
    config_given.insert(key);
  }
}

laws::WalkParams make_params(const Settings& s) {
  laws::WalkParams params{s.p, laws::parse_echo_law(s.echo),
                          laws::parse_spin_law(s.spin)};
  params.validate();
  return params;
}

// Canonical config record: exactly the fields the command consumes, law
// strings in grammar form, resolved values. Feeding this back through
// --config reproduces the run.
json to_config_json(const std::string& cmd, const Settings& s) {
  json j;
  j["command"] = cmd;
  j["seed"] = s.seed;
  const auto& allowed = allowed_keys(cmd);
  if (allowed.count("p")) j["p"] = s.p;
  if (allowed.count("echo")) j["echo"] = laws::parse_echo_law(s.echo).describe();
  if (allowed.count("spin")) j["spin"] = laws::parse_spin_law(s.spin).describe();
  if (allowed.count("n") && cmd != "brw") j["n"] = s.n;
  if (cmd == "brw") {
    if (s.horizon_is_count) {
      j["n"] = s.n;
    } else {
      j["t"] = s.t;
    }
    j["theta"] = s.theta;
  }
  if (allowed.count("checkpoints")) j["checkpoints"] = s.checkpoints;
  if (allowed.count("reps")) j["reps"] = s.reps;
  if (allowed.count("generations")) j["generations"] = s.generations;
  if (allowed.count("statistic")) j["statistic"] = s.statistic;
  if (allowed.count("threads")) j["threads"] = s.threads;
  if (allowed.count("suite")) j["suite"] = s.suite;
  if (allowed.count("format")) j["format"] = s.format;
  if (!s.out.empty()) j["out"] = s.out;
  return j;
}

void write_with_sidecar(const std::string& cmd, const Settings& s,
                        const std::string& payload, const json& extra) {
  io::write_text_file(s.out, payload);
  const json config = to_config_json(cmd, s);
  json side;
  side["tool"] = "echoed-walks";
  side["command"] = cmd;
  side["seed"] = s.seed;
  side["config"] = config;
  side["config_hash"] = hex64(numeric::fnv1a64(config.dump()));
  for (const auto& [key, value] : extra.items()) {
    side[key] = value;
  }
  io::write_text_file(s.out + ".meta.json", side.dump(2) + "\n");
}

// Payload goes to stdout without --out, to the file (plus sidecar) with it.
void emit(const std::string& cmd, const Settings& s, const std::string& payload,
          std::ostream& out, const json& extra = json::object()) {
  if (s.out.empty()) {
    out << payload;
    return;
  }
  write_with_sidecar(cmd, s, payload, extra);
}

int run_classify(const Settings& s, std::ostream& out) {
  const auto params = make_params(s);
  const auto report = laws::classify(params);
  json j;
  j["p"] = s.p;
  j["echo"] = params.echo.describe();
  j["spin"] = params.spin.describe();
  j["pm1"] = report.pm1;
  j["regime"] = laws::regime_name(report.regime);
  j["xi_log_xi"] = report.xi_log_xi;
  j["ui_holds"] = report.ui_holds;
  j["lambda_nonempty"] = report.lambda_nonempty;
  j["lambda_sup"] = report.lambda_sup;
  j["subcritical_refined"] = report.subcritical_refined;
  j["limit_constant"] = report.limit_constant;
  j["scaling_exponent"] = report.scaling_exponent;
  emit("classify", s, j.dump(2) + "\n", out);
  return 0;
}

int run_walk(const Settings& s, std::ostream& out) {
  const auto params = make_params(s);
  const Tape tape(s.seed);
  const auto traj = walk::simulate(params, s.n, Stream(tape, 0));
  std::string payload;
  if (s.format == "csv") {
    std::ostringstream os;
    io::write_trajectory_csv(os, traj);
    payload = os.str();
  } else {
    json j;
    j["p"] = s.p;
    j["echo"] = params.echo.describe();
    j["spin"] = params.spin.describe();
    j["n"] = s.n;
    j["seed"] = s.seed;
    j["increments"] = traj.increments;
    j["positions"] = traj.positions;
    payload = j.dump(2) + "\n";
  }
  emit("walk", s, payload, out);
  return 0;
}

int run_tree(const Settings& s, std::ostream& out) {
  const auto params = make_params(s);
  const Tape tape(s.seed);
  const auto tr = tree::grow(params, s.n, Stream(tape, 0));
  const auto weights = tree::subtree_weights(tr);
  std::string payload;
  if (s.format == "csv") {
    std::ostringstream os;
    io::write_tree_csv(os, tr, weights);
    payload = os.str();
  } else {
    json j;
    j["p"] = s.p;
    j["echo"] = params.echo.describe();
    j["n"] = s.n;
    j["seed"] = s.seed;
    j["parent"] = tr.parent;
    j["edge_weight"] = tr.edge_weight;
    std::vector<int> retained(tr.retained.begin(), tr.retained.end());
    j["retained"] = retained;
    j["vertex_weight"] = tr.vertex_weight;
    j["component_root"] = weights.component_of;
    j["component_count"] = weights.roots.size();
    payload = j.dump(2) + "\n";
  }
  emit("tree", s, payload, out);
  return 0;
}

int run_urn_check(const Settings& s, std::ostream& out) {
  const auto params = make_params(s);
  const auto composite =
      urn::composite_sample(params, s.n, s.reps, Tape(s.seed));
  const Tape direct_tape(numeric::splitmix64(s.seed + 0x75726e6bull));
  std::vector<double> direct(static_cast<std::size_t>(s.reps));
  walk::Trajectory scratch;
  for (std::int64_t i = 0; i < s.reps; ++i) {
    walk::simulate_into(params, s.n + 1, Stream(direct_tape, i), scratch);
    direct[static_cast<std::size_t>(i)] = scratch.positions.back();
  }
  const auto ks = ensemble::ks_two_sample(composite, direct, 0.01);
  json j;
  j["p"] = s.p;
  j["echo"] = params.echo.describe();
  j["spin"] = params.spin.describe();
  j["n"] = s.n;
  j["reps_per_side"] = s.reps;
  j["seed"] = s.seed;
  j["statistic"] = ks.statistic;
  j["threshold"] = ks.threshold;
  j["alpha"] = 0.01;
  j["reject"] = ks.reject;
  emit("urn-check", s, j.dump(2) + "\n", out);
  return ks.reject ? 1 : 0;
}

int run_brw(const Settings& s, std::ostream& out) {
  const auto law = laws::parse_echo_law(s.echo);
  const Tape tape(s.seed);
  const auto state =
      s.horizon_is_count
          ? branching::simulate_brw(law, branching::CountHorizon{s.n},
                                    Stream(tape, 0))
          : branching::simulate_brw(law, branching::TimeHorizon{s.t},
                                    Stream(tape, 0));
  std::string payload;
  if (s.format == "csv") {
    std::ostringstream os;
    io::write_particles_csv(os, state);
    payload = os.str();
  } else {
    json j;
    j["echo"] = law.describe();
    j["seed"] = s.seed;
    j["theta"] = s.theta;
    j["clock"] = state.clock;
    j["count"] = state.particles.size();
    const double log_sigma = branching::log_sigma_at(state, s.theta, state.clock);
    j["log_sigma"] = log_sigma;
    const double m_theta = law.moment(s.theta);
    if (std::isfinite(m_theta)) {
      j["m_theta"] = m_theta;
      j["w"] = std::exp(log_sigma - m_theta * state.clock);
    }
    std::vector<std::int64_t> parents;
    std::vector<double> birth_times;
    std::vector<double> positions;
    for (const auto& particle : state.particles) {
      parents.push_back(particle.parent);
      birth_times.push_back(particle.birth_time);
      positions.push_back(particle.position);
    }
    j["parent"] = parents;
    j["birth_time"] = birth_times;
    j["position"] = positions;
    payload = j.dump(2) + "\n";
  }
  emit("brw", s, payload, out);
  return 0;
}

int run_fixpoint(const Settings& s, std::ostream& out) {
  const auto law = laws::parse_echo_law(s.echo);
  const auto pool =
      limits::fixpoint_pool(law, s.reps, s.generations, Tape(s.seed));
  json meta;
  meta["law"] = law.describe();
  meta["N"] = s.reps;
  meta["generations"] = s.generations;
  meta["degenerate"] = pool.degenerate;
  json moments;
  moments["m1"] = pool.mean();
  moments["m2"] = pool.moment(2);
  moments["m3"] = pool.moment(3);
  meta["moments"] = moments;
  std::string payload;
  if (s.format == "csv") {
    std::ostringstream os;
    io::write_pool_csv(os, pool);
    payload = os.str();
  } else {
    json j = meta;
    j["seed"] = s.seed;
    j["samples"] = pool.samples;
    payload = j.dump(2) + "\n";
  }
  json extra;
  extra["pool"] = meta;
  emit("fixpoint", s, payload, out, extra);
  return 0;
}

int run_ensemble(const Settings& s, std::ostream& out) {
  const auto params = make_params(s);
  const auto kind = ensemble::parse_statistic(s.statistic);
  const auto summary = ensemble::run(params, kind, s.checkpoints, s.reps,
                                     Tape(s.seed), s.threads);
  std::string payload;
  if (s.format == "csv") {
    std::ostringstream os;
    io::write_summary_csv(os, summary);
    payload = os.str();
  } else {
    json j;
    j["p"] = s.p;
    j["echo"] = params.echo.describe();
    j["spin"] = params.spin.describe();
    j["statistic"] = ensemble::statistic_name(kind);
    j["replicates"] = summary.replicates;
    j["seed"] = s.seed;
    json rows = json::array();
    for (const auto& row : summary.rows) {
      json r;
      r["checkpoint"] = row.checkpoint;
      r["mean"] = row.mean;
      r["var"] = row.var;
      r["q05"] = row.q05;
      r["q25"] = row.q25;
      r["q50"] = row.q50;
      r["q75"] = row.q75;
      r["q95"] = row.q95;
      rows.push_back(r);
    }
    j["rows"] = rows;
    payload = j.dump(2) + "\n";
  }
  emit("ensemble", s, payload, out);
  return 0;
}

int run_verify(const Settings& s, std::ostream& out) {
  const auto ids = verify::criteria_for_suite(s.suite);
  std::string report = "echoed-walks verification (suite " + s.suite +
                       ", seed " + std::to_string(s.seed) + ")\n";
  std::size_t passed = 0;
  for (int id : ids) {
    const auto result = verify::run_criterion(id, s.seed, s.threads);
    report += "\n" + verify::format_criterion(result);
    if (result.pass) ++passed;
  }
  report += "\nverdict: " + std::string(passed == ids.size() ? "PASS" : "FAIL") +
            " (" + std::to_string(passed) + "/" + std::to_string(ids.size()) +
            " criteria passed)\n";
  out << report;
  if (!s.out.empty()) {
    write_with_sidecar("verify", s, report, json::object());
  }
  return passed == ids.size() ? 0 : 1;
}

int dispatch(const std::string& cmd, const Settings& s, std::ostream& out) {
  if (cmd == "classify") return run_classify(s, out);
  if (cmd == "walk") return run_walk(s, out);
  if (cmd == "tree") return run_tree(s, out);
  if (cmd == "urn-check") return run_urn_check(s, out);
  if (cmd == "brw") return run_brw(s, out);
  if (cmd == "fixpoint") return run_fixpoint(s, out);
  if (cmd == "ensemble") return run_ensemble(s, out);
  if (cmd == "verify") return run_verify(s, out);
  throw ConfigError("unknown command '" + cmd + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  Settings s;
  std::string config_path;
  std::string top_config;

  CLI::App app{
      "echoed-walks: simulation and verification laboratory for random "
      "walks with echoed steps"};
  app.require_subcommand(0, 1);
  app.add_option("--config", top_config,
                 "JSON config naming the command to run");

  const auto add_law_options = [&](CLI::App* sc) {
    sc->add_option("--p", s.p, "retention probability in (0,1]");
    sc->add_option("--echo", s.echo, "echo law (mini-grammar)");
    sc->add_option("--spin", s.spin, "spin law (mini-grammar)");
  };
  const auto add_io_options = [&](CLI::App* sc) {
    sc->add_option("--seed", s.seed, "master seed (default 1729)");
    sc->add_option("--format", s.format, "csv or json");
    sc->add_option("--out", s.out, "output path (adds a .meta.json sidecar)");
    sc->add_option("--config", config_path, "JSON config file");
  };

  auto* sc_classify =
      app.add_subcommand("classify", "regime report for a parameter triple");
  add_law_options(sc_classify);
  add_io_options(sc_classify);

  auto* sc_walk = app.add_subcommand("walk", "simulate one echoed walk");
  add_law_options(sc_walk);
  sc_walk->add_option("-n", s.n, "walk horizon");
  add_io_options(sc_walk);

  auto* sc_tree =
      app.add_subcommand("tree", "grow the percolated memory tree");
  add_law_options(sc_tree);
  sc_tree->add_option("-n", s.n, "tree size");
  add_io_options(sc_tree);

  auto* sc_urn = app.add_subcommand(
      "urn-check", "urn composite law vs direct walk (two-sample KS)");
  add_law_options(sc_urn);
  sc_urn->add_option("-n", s.n, "urn time");
  sc_urn->add_option("--reps", s.reps, "samples per side (default 10000)");
  add_io_options(sc_urn);

  auto* sc_brw =
      app.add_subcommand("brw", "simulate the branching random walk");
  sc_brw->add_option("--echo", s.echo, "displacement (echo) law");
  sc_brw->add_option("--theta", s.theta, "functional exponent");
  sc_brw->add_option("--t", s.t, "time horizon (default 4)");
  sc_brw->add_option("-n", s.n, "count horizon (alternative to --t)");
  add_io_options(sc_brw);

  auto* sc_fix =
      app.add_subcommand("fixpoint", "population-dynamics fixed-point pool");
  sc_fix->add_option("--echo", s.echo, "echo law (mini-grammar)");
  sc_fix->add_option("--reps", s.reps, "pool size (default 10000)");
  sc_fix->add_option("--generations", s.generations,
                     "iteration count (default 200)");
  add_io_options(sc_fix);

  auto* sc_ens =
      app.add_subcommand("ensemble", "checkpointed ensemble statistics");
  add_law_options(sc_ens);
  sc_ens->add_option("--checkpoints", s.checkpoints_text,
                     "comma-separated checkpoints (default 64,512,4096)");
  sc_ens->add_option("--reps", s.reps, "replicates (default 2000)");
  sc_ens->add_option("--statistic", s.statistic,
                     "raw|abs|scaled|centered-linear|centered-log|martingale");
  sc_ens->add_option("--threads", s.threads, "worker threads (wall time only)");
  add_io_options(sc_ens);

  auto* sc_verify =
      app.add_subcommand("verify", "run acceptance suites (all or c1..c11)");
  sc_verify->add_option("suite", s.suite, "all or c1..c11");
  sc_verify->add_option("--seed", s.seed, "master seed (default 1729)");
  sc_verify->add_option("--threads", s.threads,
                        "worker threads (wall time only)");
  sc_verify->add_option("--out", s.out, "report path (adds a sidecar)");
  sc_verify->add_option("--config", config_path, "JSON config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    CLI::App* active = nullptr;
    for (auto* sc : app.get_subcommands()) {
      active = sc;
    }
    std::string cmd = active ? active->get_name() : "";

    const std::vector<std::string> keys = {
        "p",   "echo",    "spin",   "n",           "checkpoints",
        "reps", "seed",   "threads", "out",        "format",
        "statistic", "t", "theta",  "generations", "suite"};
    std::set<std::string> given;
    if (active) {
      for (const auto& key : keys) {
        const std::string flag =
            key == "n" ? "-n" : (key == "suite" ? "suite" : "--" + key);
        const auto* opt = active->get_option_no_throw(flag);
        if (opt != nullptr && opt->count() > 0) {
          given.insert(key);
        }
      }
    }

    if (config_path.empty() && !top_config.empty()) {
      config_path = top_config;
    }
    std::set<std::string> config_given;
    if (!config_path.empty()) {
      json doc;
      try {
        doc = json::parse(io::read_text_file(config_path));
      } catch (const json::exception& e) {
        throw ConfigError("config file '" + config_path +
                          "' is not valid JSON: " + e.what());
      }
      // A sidecar wraps the config under "config"; accept both shapes.
      json inner = doc;
      if (doc.is_object() && doc.contains("config") &&
          doc["config"].is_object()) {
        inner = doc["config"];
      }
      std::string config_cmd;
      if (inner.is_object() && inner.contains("command")) {
        config_cmd = want_string(inner["command"], "command");
      } else if (doc.is_object() && doc.contains("command")) {
        config_cmd = want_string(doc["command"], "command");
      }
      if (cmd.empty()) {
        if (config_cmd.empty()) {
          throw ConfigError(
              "config field 'command' is required when no subcommand is "
              "named");
        }
        cmd = config_cmd;
      } else if (!config_cmd.empty() && config_cmd != cmd) {
        throw ConfigError("config field 'command' ('" + config_cmd +
                          "') does not match subcommand '" + cmd + "'");
      }
      apply_config(cmd, inner, s, given, config_given);
    }

    if (cmd.empty()) {
      err << "error: a subcommand is required (or --config naming one)\n";
      err << app.help();
      return 2;
    }

    // Seed precedence: flag, config field, environment, default 1729.
    if (!given.count("seed") && !config_given.count("seed")) {
      if (const char* env = std::getenv("ECHOED_WALKS_SEED")) {
        std::uint64_t value = 0;
        const auto* begin = env;
        const auto* end = env + std::string(env).size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr != end) {
          throw ConfigError(
              "environment variable ECHOED_WALKS_SEED must be an unsigned "
              "integer");
        }
        s.seed = value;
      }
    }

    const bool json_only = (cmd == "classify" || cmd == "urn-check");
    if (s.format.empty()) {
      s.format = json_only ? "json" : "csv";
    }
    if (s.format != "csv" && s.format != "json") {
      throw ConfigError("field 'format' must be csv or json, got '" +
                        s.format + "'");
    }
    if (json_only && s.format != "json") {
      throw ConfigError("command '" + cmd + "' emits json only (field 'format')");
    }
    if (s.threads < 1) {
      throw ConfigError("field 'threads' must be at least 1");
    }
    if (s.reps < 0) {
      s.reps = cmd == "ensemble" ? 2000 : 10000;
    } else if (s.reps == 0) {
      throw ConfigError("field 'reps' must be positive");
    }
    if (!s.checkpoints_text.empty()) {
      s.checkpoints = parse_checkpoints_text(s.checkpoints_text);
    }
    if (s.checkpoints.empty()) {
      s.checkpoints = {64, 512, 4096};
    }
    if (cmd == "brw") {
      const bool n_given = given.count("n") || config_given.count("n");
      const bool t_given = given.count("t") || config_given.count("t");
      if (n_given && t_given) {
        throw ConfigError("brw takes either --t or -n, not both");
      }
      s.horizon_is_count = n_given;
    }

    return dispatch(cmd, s, out);
  } catch (const ew::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ew::cli
