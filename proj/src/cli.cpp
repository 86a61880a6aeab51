#include "oscut/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "oscut/energy.hpp"
#include "oscut/graph.hpp"
#include "oscut/optimize.hpp"
#include "oscut/report.hpp"
#include "oscut/rounding.hpp"
#include "oscut/verify.hpp"

namespace oscut {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using steady = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;

double ms_since(steady::time_point start) {
  return std::chrono::duration<double, std::milli>(steady::now() - start)
      .count();
}

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << '\n';
  return 1;
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
  return out;
}

// ---------------------------------------------------------------------------
// option bundles
// ---------------------------------------------------------------------------

struct SolveOptions {
  std::string graph_path;
  std::string g_spec;
  std::string schedule;
  std::string config_path;
  std::string out_dir = ".";
  std::string format = "json";
  std::uint64_t seed = 0;
  int restarts = 5;
  SolverParams params;
};

struct BoundOptions {
  std::string g_spec;
  std::string curve_path;
  int curve_points = 512;
  std::string format = "json";
};

struct GenOptions {
  std::string kind;
  std::string out_path;
  int n = -1;
  int a = -1;
  int b = -1;
  double p = -1.0;
  std::uint64_t seed = 0;
};

struct CompareOptions {
  std::string graph_path;
  std::vector<std::string> g_specs;
  std::string method = "cd";
  std::string out_path;
  std::string config_path;
  std::string format = "csv";
  std::uint64_t seed = 0;
  int restarts = 5;
  SolverParams params;
};

struct BruteOptions {
  std::string graph_path;
  std::string format = "json";
};

void add_solver_flags(CLI::App* cmd, SolverParams& params, std::uint64_t& seed,
                      int& restarts) {
  cmd->add_option("--seed", seed, "Master RNG seed; all randomness derives from it")
      ->capture_default_str();
  cmd->add_option("--restarts", restarts,
                  "Independent random restarts; the best final energy wins")
      ->capture_default_str();
  cmd->add_option("--max-iters", params.max_iters, "Gradient iteration cap")
      ->capture_default_str();
  cmd->add_option("--grad-tol", params.grad_tol,
                  "Stop when the gradient norm (gd) or the per-sweep energy "
                  "improvement (cd) drops below this")
      ->capture_default_str();
  cmd->add_option("--coordinate-sweeps", params.coordinate_sweeps,
                  "Coordinate descent sweep cap")
      ->capture_default_str();
  cmd->add_option("--sample-points-per-degree", params.sample_points_per_degree,
                  "Sampling density for the univariate minimizer")
      ->capture_default_str();
  cmd->add_option("--step-size", params.step_size,
                  "Fixed gradient step size (default: automatic 1/L)");
}

// Fixed step rule kicks in whenever a positive --step-size is given.
void finalize_params(SolverParams& params) {
  if (params.step_size > 0.0) params.step_rule = StepRule::fixed;
}

/// key=value solver settings, '#' comments and blank lines allowed. A key is
/// skipped when the matching flag was given on the command line, so explicit
/// flags always win over the file.
void apply_config_file(const std::string& path, const CLI::App* cmd,
                       SolverParams& params, std::uint64_t& seed,
                       int& restarts) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config '" + path + "'");

  const auto trim = [](const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return std::string();
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto where = "config line " + std::to_string(line_no);
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(where + ": expected key=value");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));

    const auto as_double = [&] {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != value.size()) {
        throw std::invalid_argument(where + ": bad value for " + key);
      }
      return v;
    };
    const auto as_int = [&] {
      const double v = as_double();
      if (v != std::floor(v) || std::fabs(v) > 1e9) {
        throw std::invalid_argument(where + ": bad value for " + key);
      }
      return static_cast<int>(v);
    };
    const auto as_u64 = [&] {
      std::size_t used = 0;
      std::uint64_t v = 0;
      try {
        v = std::stoull(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != value.size()) {
        throw std::invalid_argument(where + ": bad value for " + key);
      }
      return v;
    };

    if (cmd->count("--" + key) > 0) continue;
    if (key == "seed") {
      seed = as_u64();
    } else if (key == "restarts") {
      restarts = as_int();
    } else if (key == "max-iters") {
      params.max_iters = as_int();
    } else if (key == "grad-tol") {
      params.grad_tol = as_double();
    } else if (key == "coordinate-sweeps") {
      params.coordinate_sweeps = as_int();
    } else if (key == "sample-points-per-degree") {
      params.sample_points_per_degree = as_int();
    } else if (key == "step-size") {
      params.step_size = as_double();
    } else {
      throw std::invalid_argument(where + ": unknown key '" + key + "'");
    }
  }
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

/// Runs the oracle checks and flags hard assertion failures: a broken
/// two-point identity, a violated pointwise theorem bound, or a violated
/// conditional ratio guarantee. Merely failing to reach the global bound is
/// reported but is not an assertion failure (local minima are legal).
ordered_json verification_json(const Graph& graph, const CouplingFunction& g,
                               const AngleConfiguration& theta,
                               double final_energy, double c_of_g,
                               bool& assertion_failed) {
  const VerificationReport theorem =
      check_theorem_bound(graph, g, theta, c_of_g);
  const EnergyBoundCheck bound =
      check_energy_upper_bound(graph, g, final_energy);
  const OracleRatio ratio =
      check_ratio_vs_oracle(graph, g, theta, final_energy);
  assertion_failed = !theorem.theorem_ok || !bound.witness_identity_ok ||
                     (!ratio.skipped && !ratio.ok);

  ordered_json v;
  v["maxcut_exact"] = bound.maxcut;
  v["energy_bound"] = bound.bound;
  v["bound_reached"] = bound.achieved_within;
  v["energy_bound_ok"] = bound.witness_identity_ok && bound.achieved_within;
  v["theorem_bound"] = theorem.theorem_bound;
  v["expected_cut"] = theorem.expected_cut_value;
  v["theorem_ok"] = theorem.theorem_ok;
  if (ratio.skipped) {
    v["ratio_vs_oracle"] = nullptr;
  } else {
    v["ratio_vs_oracle"] = ratio.ratio;
    v["ratio_guarantee_applies"] = ratio.guarantee_applies;
    v["ratio_ok"] = ratio.ok;
  }
  v["details"] = theorem.details;
  return v;
}

int run_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  Graph graph;
  std::vector<PipelineStage> schedule;
  try {
    graph = load_graph_file(opt.graph_path);
    if (!opt.schedule.empty()) {
      schedule = parse_schedule_spec(opt.schedule, opt.params);
    } else if (!opt.g_spec.empty()) {
      schedule.push_back({parse_coupling_spec(opt.g_spec),
                          Method::coordinate_descent, opt.params});
    } else {
      schedule = default_schedule(opt.params);
    }
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }

  const steady::time_point t0 = steady::now();
  ReportTimings timings;
  PipelineResult result;
  try {
    result = solve_pipeline(graph, schedule, opt.seed, opt.restarts);
  } catch (const std::exception& e) {
    // Partial report so a failed batch run still leaves evidence behind.
    try {
      ordered_json partial;
      partial["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
      partial["seed"] = opt.seed;
      partial["graph"] = {{"vertices", graph.vertex_count()},
                          {"edges", graph.edge_count()},
                          {"total_weight", graph.total_weight()}};
      partial["aborted"] = true;
      partial["error"] = e.what();
      std::ofstream report_out = open_output(fs::path(opt.out_dir) / "report.json");
      report_out << partial.dump(2) << '\n';
    } catch (...) {
    }
    err << "solver failure: " << e.what() << '\n';
    return 2;
  }
  timings.solve_ms = ms_since(t0);

  const steady::time_point t1 = steady::now();
  SweepResult sweep;
  try {
    sweep = sweep_all_cuts(graph, result.final_configuration);
  } catch (const std::exception& e) {
    err << "solver failure: " << e.what() << '\n';
    return 2;
  }
  timings.sweep_ms = ms_since(t1);

  bool assertion_failed = false;
  ordered_json verification;
  bool have_verification = false;
  const steady::time_point t2 = steady::now();
  if (graph.vertex_count() <= kBruteForceVertexLimit &&
      graph.vertex_count() >= 1) {
    try {
      const CouplingFunction& final_g = schedule.back().g;
      const double c_of_g = approximation_constant(final_g).value;
      verification =
          verification_json(graph, final_g, result.final_configuration,
                            result.final_energy, c_of_g, assertion_failed);
      have_verification = true;
    } catch (const std::exception& e) {
      err << "solver failure: " << e.what() << '\n';
      return 2;
    }
  }
  timings.verify_ms = ms_since(t2);
  timings.total_ms = ms_since(t0);

  ordered_json report = make_solve_report(
      graph, schedule, opt.seed, opt.restarts, result, sweep,
      have_verification ? &verification : nullptr, timings);

  try {
    const fs::path dir(opt.out_dir);
    fs::create_directories(dir);
    open_output(dir / "report.json") << report.dump(2) << '\n';
    std::ofstream angles_out = open_output(dir / "angles.csv");
    write_angles_csv(result.final_configuration, angles_out);
    std::ofstream sweep_out = open_output(dir / "sweep.csv");
    write_sweep_csv(sweep, sweep_out);
    std::ofstream partition_out = open_output(dir / "partition.csv");
    write_partition_csv(sweep.best.side, partition_out);
  } catch (const std::exception& e) {
    err << "solver failure: " << e.what() << '\n';
    return 2;
  }

  if (opt.format == "json") {
    out << report.dump(2) << '\n';
  } else {
    const auto previous = out.precision(17);
    out << "vertices,edges,total_weight,final_energy,best_cut,expected_cut\n"
        << graph.vertex_count() << ',' << graph.edge_count() << ','
        << graph.total_weight() << ',' << result.final_energy << ','
        << sweep.best.weight << ',' << sweep.expected << '\n';
    out.precision(previous);
  }
  if (assertion_failed) {
    err << "verification failure: " << verification["details"].get<std::string>()
        << '\n';
    return 3;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// bound
// ---------------------------------------------------------------------------

int run_bound(const BoundOptions& opt, std::ostream& out, std::ostream& err) {
  std::optional<CouplingFunction> g;
  try {
    g = parse_coupling_spec(opt.g_spec);
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }
  const ApproximationConstant c = approximation_constant(*g);

  if (!opt.curve_path.empty()) {
    try {
      std::ofstream curve = open_output(opt.curve_path);
      curve << "x,g,tent,ratio\n";
      curve.precision(17);
      for (int i = 1; i <= opt.curve_points; ++i) {
        const double x = kPi * i / opt.curve_points;
        const double gx = (*g)(x);
        const double tent = 1.0 - (2.0 / kPi) * x;
        const double denom = 1.0 - gx;
        if (!(denom > 0.0)) continue;  // ratio undefined where g touches 1
        curve << x << ',' << gx << ',' << tent << ','
              << (2.0 / kPi) * x / denom << '\n';
      }
    } catch (const std::exception& e) {
      err << "solver failure: " << e.what() << '\n';
      return 2;
    }
  }

  if (opt.format == "json") {
    ordered_json j;
    j["g"] = g->spec();
    j["constant"] = c.value;
    j["argmin"] = c.argmin;
    out << j.dump(2) << '\n';
  } else {
    const auto previous = out.precision(17);
    out << "g,constant,argmin\n"
        << g->spec() << ',' << c.value << ',' << c.argmin << '\n';
    out.precision(previous);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

int run_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  Graph graph;
  try {
    if (opt.kind == "erdos_renyi") {
      if (opt.n < 1 || opt.p < 0.0) {
        throw std::invalid_argument("erdos_renyi needs --n >= 1 and --p");
      }
      graph = erdos_renyi(opt.n, opt.p, opt.seed);
    } else if (opt.kind == "cycle") {
      if (opt.n < 0) throw std::invalid_argument("cycle needs --n");
      graph = cycle_graph(opt.n);
    } else if (opt.kind == "complete") {
      if (opt.n < 0) throw std::invalid_argument("complete needs --n");
      graph = complete_graph(opt.n);
    } else {
      if (opt.a < 0 || opt.b < 0) {
        throw std::invalid_argument("complete_bipartite needs --a and --b");
      }
      graph = complete_bipartite_graph(opt.a, opt.b);
    }
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }

  try {
    std::ofstream file = open_output(opt.out_path);
    write_edge_list(graph, file);
  } catch (const std::exception& e) {
    err << "solver failure: " << e.what() << '\n';
    return 2;
  }

  ordered_json j;
  j["kind"] = opt.kind;
  j["vertices"] = graph.vertex_count();
  j["edges"] = graph.edge_count();
  j["total_weight"] = graph.total_weight();
  j["path"] = opt.out_path;
  out << j.dump(2) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

int run_compare(const CompareOptions& opt, std::ostream& out,
                std::ostream& err) {
  Graph graph;
  std::vector<PipelineStage> schedule;
  try {
    graph = load_graph_file(opt.graph_path);
    const Method method = opt.method == "gd" ? Method::gradient_descent
                                             : Method::coordinate_descent;
    for (const std::string& spec : opt.g_specs) {
      schedule.push_back({parse_coupling_spec(spec), method, opt.params});
    }
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }

  struct Row {
    std::string g;
    double c_of_g = 0.0;
    double final_energy = 0.0;
    int iterations = 0;
    double best_cut = 0.0;
    double expected = 0.0;
  };

  std::vector<Row> rows;
  std::optional<double> maxcut;
  try {
    const PipelineResult result =
        solve_pipeline(graph, schedule, opt.seed, opt.restarts);
    std::map<std::string, double> constants;  // one c(g) per distinct spec
    for (std::size_t s = 0; s < schedule.size(); ++s) {
      const SolveTrace& trace = result.stage_traces[s];
      Row row;
      row.g = schedule[s].g.spec();
      auto [it, fresh] = constants.try_emplace(row.g, 0.0);
      if (fresh) it->second = approximation_constant(schedule[s].g).value;
      row.c_of_g = it->second;
      row.final_energy = trace.final_energy;
      row.iterations = trace.iterations_used;
      const SweepResult sweep =
          sweep_all_cuts(graph, trace.final_configuration);
      row.best_cut = sweep.best.weight;
      row.expected = expected_cut(graph, trace.final_configuration);
      rows.push_back(std::move(row));
    }
    if (graph.vertex_count() <= kBruteForceVertexLimit) {
      maxcut = brute_force_maxcut(graph).weight;
    }
  } catch (const std::exception& e) {
    err << "solver failure: " << e.what() << '\n';
    return 2;
  }

  std::ostringstream table;
  table.precision(17);
  table << "g,c_g,final_energy,iterations,best_cut,expected_cut";
  if (maxcut) table << ",maxcut_exact";
  table << '\n';
  for (const Row& row : rows) {
    table << row.g << ',' << row.c_of_g << ',' << row.final_energy << ','
          << row.iterations << ',' << row.best_cut << ',' << row.expected;
    if (maxcut) table << ',' << *maxcut;
    table << '\n';
  }

  if (!opt.out_path.empty()) {
    try {
      open_output(opt.out_path) << table.str();
    } catch (const std::exception& e) {
      err << "solver failure: " << e.what() << '\n';
      return 2;
    }
  }

  if (opt.format == "json") {
    ordered_json array = ordered_json::array();
    for (const Row& row : rows) {
      ordered_json j;
      j["g"] = row.g;
      j["c_g"] = row.c_of_g;
      j["final_energy"] = row.final_energy;
      j["iterations"] = row.iterations;
      j["best_cut"] = row.best_cut;
      j["expected_cut"] = row.expected;
      if (maxcut) j["maxcut_exact"] = *maxcut;
      array.push_back(std::move(j));
    }
    out << array.dump(2) << '\n';
  } else {
    out << table.str();
  }
  return 0;
}

// ---------------------------------------------------------------------------
// brute
// ---------------------------------------------------------------------------

int run_brute(const BruteOptions& opt, std::ostream& out, std::ostream& err) {
  MaxCutResult result;
  try {
    const Graph graph = load_graph_file(opt.graph_path);
    result = brute_force_maxcut(graph);
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }

  if (opt.format == "json") {
    std::string partition;
    partition.reserve(result.cut.side.size());
    for (bool a : result.cut.side) partition.push_back(a ? 'A' : 'B');
    ordered_json j;
    j["maxcut"] = result.weight;
    j["partition"] = partition;
    out << j.dump(2) << '\n';
  } else {
    write_partition_csv(result.cut.side, out);
  }
  return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// argument surface
// ---------------------------------------------------------------------------

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"max-cut via circle-valued energy minimization and random "
               "hyperplane rounding"};
  app.set_version_flag("--version",
                       std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  static const std::string kGSpecHelp =
      "Coupling function: cosine | tent:<m> | custom:<k:c,...>";

  SolveOptions so;
  CLI::App* solve =
      app.add_subcommand("solve", "Minimize the energy, sweep all rounding "
                                  "lines, and report the best cut");
  solve->add_option("--config", so.config_path,
                    "key=value file with solver settings; explicit flags win")
      ->check(CLI::ExistingFile);
  solve->add_option("--graph", so.graph_path, "Edge-list or DIMACS graph file")
      ->required()
      ->check(CLI::ExistingFile);
  CLI::Option* g_opt =
      solve->add_option("--g", so.g_spec, kGSpecHelp + " (single stage)");
  solve->add_option("--schedule", so.schedule,
                    "Stages 'gspec/method,...' with method gd|cd; default "
                    "cosine/gd,tent:5/cd")
      ->excludes(g_opt);
  add_solver_flags(solve, so.params, so.seed, so.restarts);
  solve->add_option("--out-dir", so.out_dir,
                    "Directory for report.json, angles.csv, sweep.csv, "
                    "partition.csv")
      ->capture_default_str();
  solve->add_option("--format", so.format, "Stdout format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  BoundOptions bo;
  CLI::App* bound = app.add_subcommand(
      "bound", "Print the rounding guarantee constant c(g) and its argmin");
  bound->add_option("--g", bo.g_spec, kGSpecHelp)->required();
  bound->add_option("--curve", bo.curve_path,
                    "Write x,g,tent,ratio comparison curve CSV here");
  bound->add_option("--curve-points", bo.curve_points, "Curve resolution")
      ->check(CLI::Range(2, 10000000))
      ->capture_default_str();
  bound->add_option("--format", bo.format, "Stdout format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  GenOptions go;
  CLI::App* gen = app.add_subcommand("gen", "Generate a graph file");
  gen->add_option("--kind", go.kind, "Graph family")
      ->required()
      ->check(CLI::IsMember(
          {"erdos_renyi", "cycle", "complete", "complete_bipartite"}));
  gen->add_option("--n", go.n, "Vertex count (erdos_renyi, cycle, complete)");
  gen->add_option("--p", go.p, "Edge probability (erdos_renyi)");
  gen->add_option("--a", go.a, "Left side size (complete_bipartite)");
  gen->add_option("--b", go.b, "Right side size (complete_bipartite)");
  gen->add_option("--seed", go.seed, "Generator seed (erdos_renyi)")
      ->capture_default_str();
  gen->add_option("--out", go.out_path, "Output edge-list path")->required();

  CompareOptions co;
  CLI::App* compare = app.add_subcommand(
      "compare", "Run a warm-started pipeline across several coupling "
                 "functions and tabulate the cuts");
  compare->add_option("--config", co.config_path,
                      "key=value file with solver settings; explicit flags win")
      ->check(CLI::ExistingFile);
  compare->add_option("--graph", co.graph_path,
                      "Edge-list or DIMACS graph file")
      ->required()
      ->check(CLI::ExistingFile);
  compare->add_option("--g", co.g_specs,
                      kGSpecHelp + "; repeat the flag for each stage")
      ->required()
      ->allow_extra_args(false);
  compare->add_option("--method", co.method,
                      "Optimizer for every stage (gd or cd)")
      ->check(CLI::IsMember({"gd", "cd"}))
      ->capture_default_str();
  add_solver_flags(compare, co.params, co.seed, co.restarts);
  compare->add_option("--out", co.out_path, "Also write the CSV table here");
  compare->add_option("--format", co.format, "Stdout format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  BruteOptions bro;
  CLI::App* brute = app.add_subcommand(
      "brute", "Exact Max-Cut by enumeration (at most 26 vertices)");
  brute->add_option("--graph", bro.graph_path, "Edge-list or DIMACS graph file")
      ->required()
      ->check(CLI::ExistingFile);
  brute->add_option("--format", bro.format,
                    "json: weight + partition string; csv: vertex,side rows")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!so.config_path.empty()) {
      apply_config_file(so.config_path, solve, so.params, so.seed,
                        so.restarts);
    }
    if (!co.config_path.empty()) {
      apply_config_file(co.config_path, compare, co.params, co.seed,
                        co.restarts);
    }
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }

  finalize_params(so.params);
  finalize_params(co.params);
  so.params.restarts = so.restarts;
  co.params.restarts = co.restarts;
  try {
    so.params.validate();
    co.params.validate();
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }

  if (solve->parsed()) return run_solve(so, out, err);
  if (bound->parsed()) return run_bound(bo, out, err);
  if (gen->parsed()) return run_gen(go, out, err);
  if (compare->parsed()) return run_compare(co, out, err);
  if (brute->parsed()) return run_brute(bro, out, err);
  return usage_error(err, "no subcommand given");
}

}  // namespace oscut
