#include "oscut/report.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace oscut {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void csv_fail(int line, const std::string& message) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + message);
}

double csv_double(const std::string& token, int line) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    csv_fail(line, "expected a number, got '" + token + "'");
  }
  return value;
}

long csv_long(const std::string& token, int line) {
  long value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    csv_fail(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

std::vector<std::string> csv_fields(const std::string& line_text) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream iss(line_text);
  while (std::getline(iss, field, ',')) fields.push_back(field);
  return fields;
}

/// Shared row reader: checks the header, hands each data row to `row`.
template <typename RowFn>
void read_csv(std::istream& in, const std::string& header, int columns,
              RowFn row) {
  std::string line_text;
  int line = 0;
  bool saw_header = false;
  while (std::getline(in, line_text)) {
    ++line;
    if (!line_text.empty() && line_text.back() == '\r') line_text.pop_back();
    if (line_text.empty()) continue;
    if (!saw_header) {
      if (line_text != header) {
        csv_fail(line, "expected header '" + header + "'");
      }
      saw_header = true;
      continue;
    }
    const std::vector<std::string> fields = csv_fields(line_text);
    if (static_cast<int>(fields.size()) != columns) {
      csv_fail(line, "expected " + std::to_string(columns) + " fields");
    }
    row(fields, line);
  }
  if (!saw_header) throw std::runtime_error("empty CSV input");
}

ordered_json trace_json(const PipelineStage& stage, const SolveTrace& trace) {
  ordered_json j;
  j["g"] = stage.g.spec();
  j["method"] = to_string(stage.method);
  j["iterations"] = trace.iterations_used;
  j["termination"] = to_string(trace.termination);
  j["final_energy"] = trace.final_energy;
  j["energy_trace"] = trace.energy_per_iteration;
  return j;
}

}  // namespace

nlohmann::ordered_json make_solve_report(
    const Graph& graph, const std::vector<PipelineStage>& schedule,
    std::uint64_t seed, int restarts, const PipelineResult& result,
    const SweepResult& sweep, const nlohmann::ordered_json* verification,
    const ReportTimings& timings) {
  ordered_json j;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["seed"] = seed;
  j["restarts"] = restarts;
  j["graph"] = {{"vertices", graph.vertex_count()},
                {"edges", graph.edge_count()},
                {"total_weight", graph.total_weight()}};

  const CouplingFunction& final_g = schedule.back().g;
  const ApproximationConstant c = approximation_constant(final_g);
  j["g"] = {{"spec", final_g.spec()},
            {"constant", c.value},
            {"argmin", c.argmin}};
  j["schedule"] = schedule_spec(schedule);
  j["best_restart"] = result.best_restart;

  ordered_json stages = ordered_json::array();
  for (std::size_t s = 0; s < schedule.size(); ++s) {
    stages.push_back(trace_json(schedule[s], result.stage_traces[s]));
  }
  j["stages"] = std::move(stages);

  j["final"] = {{"energy", result.final_energy},
                {"angles", result.final_configuration.values()}};
  j["sweep"] = {{"best_cut", sweep.best.weight},
                {"best_angle", sweep.best_angle},
                {"expected_cut", sweep.expected},
                {"breakpoints", sweep.breakpoints.size()},
                {"intervals", sweep.intervals.size()}};
  j["verification"] = verification ? *verification : ordered_json(nullptr);
  j["timings"] = {{"solve_ms", timings.solve_ms},
                  {"sweep_ms", timings.sweep_ms},
                  {"verify_ms", timings.verify_ms},
                  {"total_ms", timings.total_ms}};
  return j;
}

void write_angles_csv(const AngleConfiguration& theta, std::ostream& out) {
  out << "vertex,angle\n";
  const auto previous = out.precision(17);
  for (std::size_t i = 0; i < theta.size(); ++i) {
    out << i << ',' << theta[i] << '\n';
  }
  out.precision(previous);
}

AngleConfiguration load_angles_csv(std::istream& in) {
  std::vector<double> angles;
  read_csv(in, "vertex,angle", 2,
           [&](const std::vector<std::string>& fields, int line) {
             const long vertex = csv_long(fields[0], line);
             if (vertex != static_cast<long>(angles.size())) {
               csv_fail(line, "vertex ids must be consecutive from 0");
             }
             angles.push_back(csv_double(fields[1], line));
           });
  return AngleConfiguration(std::move(angles));
}

void write_partition_csv(const std::vector<bool>& side, std::ostream& out) {
  out << "vertex,side\n";
  for (std::size_t i = 0; i < side.size(); ++i) {
    out << i << ',' << (side[i] ? 'A' : 'B') << '\n';
  }
}

std::vector<bool> load_partition_csv(std::istream& in) {
  std::vector<bool> side;
  read_csv(in, "vertex,side", 2,
           [&](const std::vector<std::string>& fields, int line) {
             const long vertex = csv_long(fields[0], line);
             if (vertex != static_cast<long>(side.size())) {
               csv_fail(line, "vertex ids must be consecutive from 0");
             }
             if (fields[1] != "A" && fields[1] != "B") {
               csv_fail(line, "side must be A or B, got '" + fields[1] + "'");
             }
             side.push_back(fields[1] == "A");
           });
  return side;
}

std::vector<SweepInterval> load_sweep_csv(std::istream& in) {
  std::vector<SweepInterval> intervals;
  read_csv(in, "angle_lo,angle_hi,cut_weight", 3,
           [&](const std::vector<std::string>& fields, int line) {
             intervals.push_back({csv_double(fields[0], line),
                                  csv_double(fields[1], line),
                                  csv_double(fields[2], line)});
           });
  return intervals;
}

std::vector<PipelineStage> parse_schedule_spec(std::string_view spec,
                                               const SolverParams& params) {
  std::vector<PipelineStage> schedule;
  std::string pending;  // accumulates comma-split pieces of a custom g spec
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = spec.find(',', start);
    const std::string_view piece =
        spec.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                           : comma - start);
    start = comma == std::string_view::npos ? spec.size() + 1 : comma + 1;

    if (!pending.empty()) pending += ',';
    pending += piece;
    const std::size_t slash = pending.rfind('/');
    if (slash == std::string::npos) continue;  // comma inside a custom list

    const std::string g_part = pending.substr(0, slash);
    const std::string method_part = pending.substr(slash + 1);
    pending.clear();

    Method method = Method::coordinate_descent;
    if (method_part == "gd") {
      method = Method::gradient_descent;
    } else if (method_part != "cd") {
      throw std::invalid_argument("unknown method '" + method_part +
                                  "' in schedule (use gd or cd)");
    }
    schedule.push_back({parse_coupling_spec(g_part), method, params});
  }
  if (!pending.empty()) {
    throw std::invalid_argument("schedule stage '" + pending +
                                "' is missing '/gd' or '/cd'");
  }
  if (schedule.empty()) throw std::invalid_argument("schedule is empty");
  return schedule;
}

std::string schedule_spec(const std::vector<PipelineStage>& schedule) {
  std::string spec;
  for (const PipelineStage& stage : schedule) {
    if (!spec.empty()) spec += ',';
    spec += stage.g.spec();
    spec += '/';
    spec += to_string(stage.method);
  }
  return spec;
}

}  // namespace oscut
