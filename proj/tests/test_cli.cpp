#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "oscut/cli.hpp"
#include "oscut/graph.hpp"
#include "oscut/report.hpp"

using namespace oscut;
using nlohmann::ordered_json;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("oscut");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun result;
  result.code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

const char* kC4 = "0 1\n1 2\n2 3\n0 3\n";
const char* kTriangle = "0 1\n1 2\n0 2\n";

}  // namespace

TEST_CASE("cli version and usage errors") {
  const CliRun version = run_cli({"--version"});
  CHECK(version.code == 0);
  CHECK(version.out.find("0.1.0") != std::string::npos);

  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"solve", "--help"}).code == 0);
}

TEST_CASE("solve writes a full report for C4") {
  tests::TempDir tmp;
  tests::write_file(tmp.file("c4.txt"), kC4);
  const std::string out_dir = tmp.file("run");

  const CliRun run = run_cli({"solve", "--graph", tmp.file("c4.txt"),
                              "--out-dir", out_dir, "--seed", "3"});
  REQUIRE(run.code == 0);

  // Stdout carries the same report that lands in report.json.
  const ordered_json report = ordered_json::parse(run.out);
  CHECK(report["graph"]["vertices"] == 4);
  CHECK(report["sweep"]["best_cut"] == 4.0);
  CHECK(report["verification"]["maxcut_exact"] == 4.0);
  CHECK(report["verification"]["theorem_ok"] == true);
  CHECK(report["verification"]["energy_bound_ok"] == true);
  // cd stops once a sweep improves by < grad_tol, so the final angles sit
  // within ~1e-8 of exactly antipodal.
  CHECK(report["verification"]["ratio_vs_oracle"].get<double>() ==
        doctest::Approx(1.0).epsilon(1e-6));

  const ordered_json on_disk =
      ordered_json::parse(tests::read_file(out_dir + "/report.json"));
  CHECK(on_disk["sweep"]["best_cut"] == 4.0);

  std::ifstream angles_in(out_dir + "/angles.csv");
  CHECK(load_angles_csv(angles_in).size() == 4);
  std::ifstream partition_in(out_dir + "/partition.csv");
  CHECK(load_partition_csv(partition_in).size() == 4);
  std::ifstream sweep_in(out_dir + "/sweep.csv");
  CHECK(!load_sweep_csv(sweep_in).empty());
}

TEST_CASE("solve finds the triangle optimum") {
  tests::TempDir tmp;
  tests::write_file(tmp.file("t.txt"), kTriangle);
  const CliRun run = run_cli({"solve", "--graph", tmp.file("t.txt"),
                              "--out-dir", tmp.file("run"), "--seed", "1"});
  REQUIRE(run.code == 0);
  const ordered_json report = ordered_json::parse(run.out);
  CHECK(report["sweep"]["best_cut"] == 2.0);
  CHECK(report["verification"]["maxcut_exact"] == 2.0);
}

TEST_CASE("solve is deterministic apart from timings") {
  tests::TempDir tmp;
  tests::write_file(tmp.file("c4.txt"), kC4);

  ordered_json reports[2];
  for (int i = 0; i < 2; ++i) {
    const CliRun run =
        run_cli({"solve", "--graph", tmp.file("c4.txt"), "--out-dir",
                 tmp.file("run" + std::to_string(i)), "--seed", "42"});
    REQUIRE(run.code == 0);
    reports[i] = ordered_json::parse(run.out);
    reports[i].erase("timings");
  }
  CHECK(reports[0].dump() == reports[1].dump());

  // Different seeds are allowed to produce different angles (they usually
  // do), but the reported invariants still hold.
  const CliRun other =
      run_cli({"solve", "--graph", tmp.file("c4.txt"), "--out-dir",
               tmp.file("other"), "--seed", "43"});
  CHECK(other.code == 0);
}

TEST_CASE("solve accepts explicit schedules and single stage g") {
  tests::TempDir tmp;
  tests::write_file(tmp.file("t.txt"), kTriangle);

  const CliRun tent = run_cli({"solve", "--graph", tmp.file("t.txt"), "--g",
                               "tent:5", "--out-dir", tmp.file("a")});
  REQUIRE(tent.code == 0);
  const ordered_json tent_report = ordered_json::parse(tent.out);
  CHECK(tent_report["schedule"] == "tent:5/cd");
  CHECK(tent_report["stages"].size() == 1);

  const CliRun sched =
      run_cli({"solve", "--graph", tmp.file("t.txt"), "--schedule",
               "cosine/gd,tent:3/cd", "--out-dir", tmp.file("b")});
  REQUIRE(sched.code == 0);
  const ordered_json sched_report = ordered_json::parse(sched.out);
  CHECK(sched_report["g"]["spec"] == "tent:3");
  CHECK(sched_report["stages"].size() == 2);

  // --schedule and --g are mutually exclusive; bad specs are usage errors.
  CHECK(run_cli({"solve", "--graph", tmp.file("t.txt"), "--g", "cosine",
                 "--schedule", "cosine/gd"})
            .code == 1);
  CHECK(run_cli({"solve", "--graph", tmp.file("t.txt"), "--g", "sine"})
            .code == 1);
  CHECK(run_cli({"solve", "--graph", tmp.file("missing.txt")}).code == 1);
}

TEST_CASE("solve csv summary format") {
  tests::TempDir tmp;
  tests::write_file(tmp.file("c4.txt"), kC4);
  const CliRun run =
      run_cli({"solve", "--graph", tmp.file("c4.txt"), "--out-dir",
               tmp.file("run"), "--format", "csv"});
  REQUIRE(run.code == 0);
  CHECK(run.out.find("vertices,edges,total_weight,final_energy,best_cut,"
                     "expected_cut") == 0);
  CHECK(run.out.find("\n4,4,4,") != std::string::npos);
}

TEST_CASE("solve reports solver failures as partial reports") {
  tests::TempDir tmp;
  // A near-DBL_MAX weight overflows the energy to infinity within the first
  // gradient evaluations; the solver must abort, leave a partial report
  // behind, and exit 2. The seed pins an initial configuration whose energy
  // is already non-finite.
  tests::write_file(tmp.file("huge.txt"), "0 1 1.7e308\n");
  const std::string out_dir = tmp.file("run");
  const CliRun run = run_cli({"solve", "--graph", tmp.file("huge.txt"),
                              "--schedule", "cosine/gd", "--seed", "1",
                              "--restarts", "1", "--out-dir", out_dir});
  CHECK(run.code == 2);
  CHECK(run.err.find("solver failure") != std::string::npos);
  const ordered_json partial =
      ordered_json::parse(tests::read_file(out_dir + "/report.json"));
  CHECK(partial["aborted"] == true);
  CHECK(!partial["error"].get<std::string>().empty());
}

TEST_CASE("solve fails cleanly when the output directory is blocked") {
  tests::TempDir tmp;
  tests::write_file(tmp.file("t.txt"), kTriangle);
  tests::write_file(tmp.file("blocker"), "not a directory\n");
  const CliRun run = run_cli({"solve", "--graph", tmp.file("t.txt"),
                              "--out-dir", tmp.file("blocker")});
  CHECK(run.code == 2);
}

TEST_CASE("bound prints the approximation constant") {
  const CliRun cosine = run_cli({"bound", "--g", "cosine"});
  REQUIRE(cosine.code == 0);
  const ordered_json c = ordered_json::parse(cosine.out);
  CHECK(c["g"] == "cosine");
  CHECK(std::fabs(c["constant"].get<double>() - 0.8785672058) < 1e-8);
  CHECK(std::fabs(c["argmin"].get<double>() - 2.3311) < 1e-3);

  const CliRun tent = run_cli({"bound", "--g", "tent:5"});
  REQUIRE(tent.code == 0);
  const double tc = ordered_json::parse(tent.out)["constant"].get<double>();
  CHECK(std::round(tc * 1000.0) / 1000.0 == 0.973);

  // csv output: header plus one row.
  const CliRun csv = run_cli({"bound", "--g", "cosine", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.find("g,constant,argmin\n") == 0);

  // Inadmissible g: violates g(pi) = -1.
  CHECK(run_cli({"bound", "--g", "custom:1:0.5"}).code == 1);
  CHECK(run_cli({"bound", "--g", "tent:0"}).code == 1);
}

TEST_CASE("bound writes the ratio curve") {
  tests::TempDir tmp;
  const CliRun run = run_cli({"bound", "--g", "tent:5", "--curve",
                              tmp.file("curve.csv"), "--curve-points", "64"});
  REQUIRE(run.code == 0);
  const std::string curve = tests::read_file(tmp.file("curve.csv"));
  CHECK(curve.find("x,g,tent,ratio\n") == 0);
  // 64 sample rows plus the header.
  CHECK(std::count(curve.begin(), curve.end(), '\n') >= 60);
}

TEST_CASE("gen produces loadable graph files") {
  tests::TempDir tmp;

  const CliRun cycle = run_cli(
      {"gen", "--kind", "cycle", "--n", "5", "--out", tmp.file("c5.txt")});
  REQUIRE(cycle.code == 0);
  const ordered_json cycle_summary = ordered_json::parse(cycle.out);
  CHECK(cycle_summary["edges"] == 5);
  const Graph c5 = load_graph_file(tmp.file("c5.txt"));
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.edge_count() == 5);

  const CliRun complete = run_cli(
      {"gen", "--kind", "complete", "--n", "4", "--out", tmp.file("k4.txt")});
  REQUIRE(complete.code == 0);
  CHECK(load_graph_file(tmp.file("k4.txt")).edge_count() == 6);

  const CliRun bip = run_cli({"gen", "--kind", "complete_bipartite", "--a",
                              "2", "--b", "3", "--out", tmp.file("k23.txt")});
  REQUIRE(bip.code == 0);
  CHECK(load_graph_file(tmp.file("k23.txt")).edge_count() == 6);

  // The file reproduces the library generator exactly.
  const CliRun er =
      run_cli({"gen", "--kind", "erdos_renyi", "--n", "30", "--p", "0.2",
               "--seed", "9", "--out", tmp.file("er.txt")});
  REQUIRE(er.code == 0);
  const Graph from_file = load_graph_file(tmp.file("er.txt"));
  const Graph direct = erdos_renyi(30, 0.2, 9);
  REQUIRE(from_file.edge_count() == direct.edge_count());
  for (std::size_t i = 0; i < direct.edges().size(); ++i) {
    CHECK(from_file.edges()[i].u == direct.edges()[i].u);
    CHECK(from_file.edges()[i].v == direct.edges()[i].v);
    CHECK(from_file.edges()[i].weight == direct.edges()[i].weight);
  }

  // Missing or invalid family parameters are usage errors.
  CHECK(run_cli({"gen", "--kind", "cycle", "--out", tmp.file("x.txt")}).code ==
        1);
  CHECK(run_cli({"gen", "--kind", "erdos_renyi", "--n", "10", "--out",
                 tmp.file("x.txt")})
            .code == 1);
  CHECK(run_cli({"gen", "--kind", "erdos_renyi", "--n", "10", "--p", "1.5",
                 "--out", tmp.file("x.txt")})
            .code == 1);
  CHECK(run_cli({"gen", "--kind", "moebius", "--n", "10", "--out",
                 tmp.file("x.txt")})
            .code == 1);
}

TEST_CASE("compare runs one pipeline and reports each stage") {
  tests::TempDir tmp;
  const CliRun gen = run_cli({"gen", "--kind", "complete_bipartite", "--a",
                              "3", "--b", "3", "--out", tmp.file("k33.txt")});
  REQUIRE(gen.code == 0);

  const CliRun run =
      run_cli({"compare", "--graph", tmp.file("k33.txt"), "--g", "cosine",
               "--g", "tent:5", "--seed", "2", "--format", "json"});
  REQUIRE(run.code == 0);
  const ordered_json rows = ordered_json::parse(run.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["g"] == "cosine");
  CHECK(rows[1]["g"] == "tent:5");
  // Bipartite graphs are solved exactly by every stage: both cuts hit W.
  CHECK(rows[0]["best_cut"] == 9.0);
  CHECK(rows[1]["best_cut"] == 9.0);
  CHECK(rows[0]["maxcut_exact"] == 9.0);
  CHECK(std::fabs(rows[1]["c_g"].get<double>() - 0.9731787186) < 1e-8);

  // csv table with one row per stage, plus an optional file copy.
  const CliRun csv =
      run_cli({"compare", "--graph", tmp.file("k33.txt"), "--g", "cosine",
               "--g", "tent:5", "--seed", "2", "--out", tmp.file("table.csv")});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.find("g,c_g,final_energy,iterations,best_cut,expected_cut,"
                     "maxcut_exact") == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 3);
  CHECK(tests::read_file(tmp.file("table.csv")) == csv.out);

  CHECK(run_cli({"compare", "--graph", tmp.file("k33.txt")}).code == 1);
}

TEST_CASE("brute solves small instances exactly") {
  tests::TempDir tmp;
  const CliRun gen = run_cli(
      {"gen", "--kind", "cycle", "--n", "5", "--out", tmp.file("c5.txt")});
  REQUIRE(gen.code == 0);

  const CliRun json_run = run_cli({"brute", "--graph", tmp.file("c5.txt")});
  REQUIRE(json_run.code == 0);
  const ordered_json result = ordered_json::parse(json_run.out);
  CHECK(result["maxcut"] == 4.0);
  const std::string partition = result["partition"].get<std::string>();
  CHECK(partition.size() == 5);
  CHECK(partition.find_first_not_of("AB") == std::string::npos);

  const CliRun csv_run =
      run_cli({"brute", "--graph", tmp.file("c5.txt"), "--format", "csv"});
  REQUIRE(csv_run.code == 0);
  std::istringstream in(csv_run.out);
  CHECK(load_partition_csv(in).size() == 5);

  // Beyond the enumeration limit: usage error, not a crash.
  tests::write_file(tmp.file("big.txt"), "0 26\n");
  CHECK(run_cli({"brute", "--graph", tmp.file("big.txt")}).code == 1);
}

TEST_CASE("solve reads defaults from a config file") {
  tests::TempDir tmp;
  tests::write_file(tmp.file("t.txt"), kTriangle);
  tests::write_file(tmp.file("solve.ini"),
                    "seed=5\nrestarts=2\ncoordinate-sweeps=50\n");

  const CliRun run =
      run_cli({"solve", "--graph", tmp.file("t.txt"), "--config",
               tmp.file("solve.ini"), "--out-dir", tmp.file("run")});
  REQUIRE(run.code == 0);
  const ordered_json report = ordered_json::parse(run.out);
  CHECK(report["seed"] == 5);
  CHECK(report["restarts"] == 2);

  // Command-line flags override config values.
  const CliRun override_run =
      run_cli({"solve", "--graph", tmp.file("t.txt"), "--config",
               tmp.file("solve.ini"), "--seed", "11", "--out-dir",
               tmp.file("run2")});
  REQUIRE(override_run.code == 0);
  CHECK(ordered_json::parse(override_run.out)["seed"] == 11);
}

TEST_CASE("solver parameter validation happens before solving") {
  tests::TempDir tmp;
  tests::write_file(tmp.file("t.txt"), kTriangle);
  CHECK(run_cli({"solve", "--graph", tmp.file("t.txt"), "--restarts", "0"})
            .code == 1);
  CHECK(run_cli({"solve", "--graph", tmp.file("t.txt"), "--grad-tol", "-1"})
            .code == 1);
  CHECK(run_cli({"solve", "--graph", tmp.file("t.txt"), "--max-iters", "0"})
            .code == 1);
}
