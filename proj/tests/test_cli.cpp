// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "ew/branching.hpp"
#include "ew/cli.hpp"
#include "ew/ensemble.hpp"
#include "ew/io.hpp"
#include "ew/laws.hpp"
#include "ew/limits.hpp"
#include "ew/rng.hpp"
#include "ew/tree.hpp"
#include "ew/walk.hpp"

namespace {

using nlohmann::json;
using ew::laws::EchoLaw;
using ew::laws::SpinLaw;
using ew::laws::WalkParams;
using ew::rng::Stream;
using ew::rng::Tape;

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("echoed-walks");
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out, err;
  const int code =
      ew::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Scratch directory under the build tree; wiped per test that uses it.
std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::path("cli_scratch") / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("format_double renders 17 significant digits and round-trips") {
  CHECK(ew::io::format_double(1.0) == "1");
  CHECK(ew::io::format_double(-2.0) == "-2");
  CHECK(ew::io::format_double(0.0) == "0");
  const std::vector<double> tricky = {1.0 / 3.0, 0.1, 6.02214076e23,
                                      -7.2e-18, 123456789.123456789};
  for (double x : tricky) {
    const std::string text = ew::io::format_double(x);
    CHECK(std::stod(text) == x);
  }
}

TEST_CASE("trajectory csv golden output for the deterministic walk") {
  const WalkParams params{1.0, EchoLaw::constant(1.0), SpinLaw::constant(1.0)};
  const Tape tape(1);
  const auto traj = ew::walk::simulate(params, 3, Stream(tape, 0));
  std::ostringstream os;
  ew::io::write_trajectory_csv(os, traj);
  CHECK(os.str() == "step,increment,position\n1,1,1\n2,1,2\n3,1,3\n");
}

TEST_CASE("tree csv rows carry parents, retention flags and components") {
  const WalkParams params{0.5, EchoLaw::constant(2.0), SpinLaw::constant(1.0)};
  const Tape tape(7);
  const auto tr = ew::tree::grow(params, 16, Stream(tape, 0));
  const auto weights = ew::tree::subtree_weights(tr);
  std::ostringstream os;
  ew::io::write_tree_csv(os, tr, weights);
  const auto lines = split_lines(os.str());
  REQUIRE(lines.size() == 17);
  CHECK(lines[0] ==
        "vertex,parent,edge_weight,retained,vertex_weight,component_root");
  // Root row: vertex 1 has no parent and no incoming edge, carries unit
  // weight, and roots its own component.
  CHECK(lines[1] == "1,0,0,0,1,1");
  for (std::size_t i = 2; i < lines.size(); ++i) {
    CHECK(lines[i].substr(0, lines[i].find(',')) == std::to_string(i));
  }
}

TEST_CASE("pool and summary csv have the pinned headers") {
  const auto pool = ew::limits::fixpoint_pool(EchoLaw::bernoulli(0.5), 200, 5,
                                              Tape(3));
  std::ostringstream os;
  ew::io::write_pool_csv(os, pool);
  auto lines = split_lines(os.str());
  REQUIRE(lines.size() == 201);
  CHECK(lines[0] == "sample");

  const WalkParams params{1.0, EchoLaw::constant(1.0), SpinLaw::constant(1.0)};
  const auto summary =
      ew::ensemble::run(params, ew::ensemble::StatKind::kRaw, {4, 8}, 120,
                        Tape(4));
  std::ostringstream os2;
  ew::io::write_summary_csv(os2, summary);
  lines = split_lines(os2.str());
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "checkpoint,mean,var,q05,q25,q50,q75,q95,N");
  CHECK(lines[1] == "4,4,0,4,4,4,4,4,120");
  CHECK(lines[2] == "8,8,0,8,8,8,8,8,120");
}

TEST_CASE("particles csv starts at the root row") {
  const auto state = ew::branching::simulate_brw(
      EchoLaw::constant(2.0), ew::branching::CountHorizon{6}, Stream(Tape(2), 0));
  std::ostringstream os;
  ew::io::write_particles_csv(os, state);
  const auto lines = split_lines(os.str());
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "index,parent,birth_time,position");
  CHECK(lines[1] == "1,0,0,0");
}

TEST_CASE("classify emits the supercritical report as json") {
  const auto res = run_cli({"classify", "--p", "0.8", "--echo", "const:2",
                            "--spin", "const:1"});
  CHECK(res.code == 0);
  const json j = json::parse(res.out);
  CHECK(j["regime"] == "supercritical");
  CHECK(j["scaling_exponent"].get<double>() == doctest::Approx(1.6).epsilon(1e-12));
  CHECK(j["pm1"].get<double>() == doctest::Approx(1.6).epsilon(1e-12));
  CHECK(j["ui_holds"] == true);
}

TEST_CASE("walk subcommand prints the deterministic 1..5 positions") {
  const auto res = run_cli({"walk", "--p", "1", "--echo", "const:1", "--spin",
                            "const:1", "-n", "5", "--seed", "1"});
  CHECK(res.code == 0);
  const auto lines = split_lines(res.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "step,increment,position");
  for (int k = 1; k <= 5; ++k) {
    CHECK(lines[k] == std::to_string(k) + ",1," + std::to_string(k));
  }
}

TEST_CASE("config errors name the offending field and exit 2") {
  const auto dir = scratch_dir("badcfg");
  const auto path = (dir / "cfg.json").string();

  ew::io::write_text_file(path, "{\"command\":\"walk\",\"pp\":1}\n");
  auto res = run_cli({"walk", "--config", path});
  CHECK(res.code == 2);
  CHECK(res.err.find("'pp'") != std::string::npos);

  ew::io::write_text_file(path, "{\"command\":\"walk\",\"n\":\"five\"}\n");
  res = run_cli({"walk", "--config", path});
  CHECK(res.code == 2);
  CHECK(res.err.find("'n'") != std::string::npos);

  ew::io::write_text_file(path, "{\"command\":\"tree\"}\n");
  res = run_cli({"walk", "--config", path});
  CHECK(res.code == 2);
  CHECK(res.err.find("command") != std::string::npos);

  res = run_cli({"walk", "--echo", "nosuch:1"});
  CHECK(res.code == 2);
  res = run_cli({"walk", "--bogus-flag"});
  CHECK(res.code == 2);
  res = run_cli({"ensemble", "--checkpoints", "64,,512"});
  CHECK(res.code == 2);
  CHECK(res.err.find("checkpoints") != std::string::npos);
}

TEST_CASE("sidecar reruns reproduce the artifact byte for byte") {
  const auto dir = scratch_dir("sidecar");
  const auto out_path = (dir / "walk.csv").string();
  const auto res = run_cli({"walk", "--p", "0.7", "--echo", "exp:1.0", "--spin",
                            "normal:0.0,1.0", "-n", "32", "--seed", "5",
                            "--out", out_path});
  REQUIRE(res.code == 0);
  const std::string payload = ew::io::read_text_file(out_path);
  const std::string sidecar = ew::io::read_text_file(out_path + ".meta.json");
  const json meta = json::parse(sidecar);
  CHECK(meta["seed"] == 5);
  CHECK(meta["command"] == "walk");
  CHECK(meta["config"]["echo"] == "exp:1");
  CHECK(meta["config_hash"].get<std::string>().size() == 16);

  // Re-run from the sidecar, both through the subcommand and bare --config.
  std::filesystem::remove(out_path);
  auto rerun = run_cli({"walk", "--config", out_path + ".meta.json"});
  REQUIRE(rerun.code == 0);
  CHECK(ew::io::read_text_file(out_path) == payload);
  CHECK(ew::io::read_text_file(out_path + ".meta.json") == sidecar);

  std::filesystem::remove(out_path);
  rerun = run_cli({"--config", out_path + ".meta.json"});
  REQUIRE(rerun.code == 0);
  CHECK(ew::io::read_text_file(out_path) == payload);
}

TEST_CASE("flags override config fields") {
  const auto dir = scratch_dir("override");
  const auto path = (dir / "cfg.json").string();
  ew::io::write_text_file(
      path, "{\"command\":\"walk\",\"p\":1.0,\"echo\":\"const:1\","
            "\"spin\":\"const:1\",\"n\":3,\"seed\":1}\n");
  const auto base = run_cli({"walk", "--config", path});
  REQUIRE(base.code == 0);
  CHECK(split_lines(base.out).size() == 4);
  const auto overridden = run_cli({"walk", "--config", path, "-n", "6"});
  REQUIRE(overridden.code == 0);
  CHECK(split_lines(overridden.out).size() == 7);
}

TEST_CASE("seed falls back to the environment variable") {
  const std::vector<std::string> base_args = {"walk",   "--p",    "0.8",
                                              "--echo", "const:2", "--spin",
                                              "rademacher", "-n", "16"};
  auto with_flag = base_args;
  with_flag.push_back("--seed");
  with_flag.push_back("99");
  const auto flagged = run_cli(with_flag);

  ::setenv("ECHOED_WALKS_SEED", "99", 1);
  const auto from_env = run_cli(base_args);
  ::unsetenv("ECHOED_WALKS_SEED");
  const auto defaulted = run_cli(base_args);

  CHECK(flagged.code == 0);
  CHECK(from_env.out == flagged.out);
  CHECK(defaulted.out != flagged.out);  // default seed 1729 differs from 99

  ::setenv("ECHOED_WALKS_SEED", "not-a-number", 1);
  const auto bad = run_cli(base_args);
  ::unsetenv("ECHOED_WALKS_SEED");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("ECHOED_WALKS_SEED") != std::string::npos);
}

TEST_CASE("ensemble output bytes do not depend on threads") {
  const std::vector<std::string> base = {
      "ensemble", "--p", "0.8",  "--echo",        "const:2", "--spin",
      "const:1",  "--checkpoints", "16,64", "--reps", "400", "--seed", "21"};
  auto one = base;
  one.push_back("--threads");
  one.push_back("1");
  auto three = base;
  three.push_back("--threads");
  three.push_back("3");
  const auto r1 = run_cli(one);
  const auto r3 = run_cli(three);
  CHECK(r1.code == 0);
  CHECK(r3.code == 0);
  CHECK(r1.out == r3.out);
  CHECK(!r1.out.empty());
}

TEST_CASE("json format round-trips the trajectory losslessly") {
  const std::vector<std::string> args = {"walk", "--p", "0.6", "--echo",
                                         "uniform:0.0,2.0", "--spin",
                                         "normal:0.0,1.0", "-n", "64",
                                         "--seed", "12", "--format", "json"};
  const auto res = run_cli(args);
  REQUIRE(res.code == 0);
  const json j = json::parse(res.out);
  const WalkParams params{0.6, EchoLaw::uniform(0.0, 2.0),
                          SpinLaw::normal(0.0, 1.0)};
  const auto traj = ew::walk::simulate(params, 64, Stream(Tape(12), 0));
  REQUIRE(j["positions"].size() == 64);
  for (std::size_t k = 0; k < 64; ++k) {
    CHECK(j["positions"][k].get<double>() == traj.positions[k]);
    CHECK(j["increments"][k].get<double>() == traj.increments[k]);
  }
}

TEST_CASE("urn-check accepts the composite law and rejects a shifted one") {
  const auto good = run_cli({"urn-check", "--echo", "bernoulli:0.5", "-n", "8",
                             "--reps", "2000", "--seed", "3"});
  CHECK(good.code == 0);
  const json j = json::parse(good.out);
  CHECK(j["reject"] == false);
  CHECK(j["statistic"].get<double>() < j["threshold"].get<double>());

  // p < 1 violates the composite hypothesis and must exit 2, not crash.
  const auto bad = run_cli({"urn-check", "--p", "0.5", "--echo", "const:2",
                            "-n", "8", "--reps", "500"});
  CHECK(bad.code == 2);
}

TEST_CASE("brw emits particles and count matches the horizon") {
  const auto res = run_cli({"brw", "--echo", "const:2", "-n", "12", "--seed",
                            "9"});
  REQUIRE(res.code == 0);
  const auto lines = split_lines(res.out);
  REQUIRE(lines.size() == 13);
  CHECK(lines[0] == "index,parent,birth_time,position");
  const auto both = run_cli({"brw", "--echo", "const:2", "-n", "12", "--t",
                             "2.0"});
  CHECK(both.code == 2);
}

TEST_CASE("fixpoint sidecar records the pool moments") {
  const auto dir = scratch_dir("fixpoint");
  const auto out_path = (dir / "pool.csv").string();
  const auto res = run_cli({"fixpoint", "--echo", "bernoulli:0.5", "--reps",
                            "500", "--generations", "20", "--seed", "8",
                            "--out", out_path});
  REQUIRE(res.code == 0);
  const json meta = json::parse(ew::io::read_text_file(out_path + ".meta.json"));
  CHECK(meta["pool"]["N"] == 500);
  CHECK(meta["pool"]["generations"] == 20);
  CHECK(meta["pool"]["degenerate"] == false);
  CHECK(meta["pool"]["moments"]["m1"].get<double>() ==
        doctest::Approx(1.1283791670955126).epsilon(1e-9));
  const auto lines = split_lines(ew::io::read_text_file(out_path));
  CHECK(lines.size() == 501);
}

TEST_CASE("verify runs the fast suites and reports failures honestly") {
  const auto pass = run_cli({"verify", "c10", "--seed", "7"});
  CHECK(pass.code == 0);
  CHECK(pass.out.find("criterion 10: PASS") != std::string::npos);
  CHECK(pass.out.find("verdict: PASS") != std::string::npos);

  const auto pass5 = run_cli({"verify", "c5", "--seed", "7"});
  CHECK(pass5.code == 0);
  CHECK(pass5.out.find("criterion 5: PASS") != std::string::npos);

  const auto unknown = run_cli({"verify", "c99"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("c99") != std::string::npos);
}

TEST_CASE("verify writes byte-identical report files on reruns") {
  const auto dir = scratch_dir("verify");
  const auto p1 = (dir / "r1.txt").string();
  const auto p2 = (dir / "r2.txt").string();
  const auto r1 = run_cli({"verify", "c5", "--seed", "7", "--out", p1});
  const auto r2 = run_cli({"verify", "c5", "--seed", "7", "--out", p2});
  REQUIRE(r1.code == 0);
  REQUIRE(r2.code == 0);
  CHECK(ew::io::read_text_file(p1) == ew::io::read_text_file(p2));
  CHECK(r1.out == r2.out);
  // The report is also echoed to stdout.
  CHECK(ew::io::read_text_file(p1) == r1.out);
}

TEST_SUITE_END();
