#ifndef OSCUT_REPORT_HPP
#define OSCUT_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "oscut/angles.hpp"
#include "oscut/graph.hpp"
#include "oscut/optimize.hpp"
#include "oscut/rounding.hpp"
#include "oscut/verify.hpp"

namespace oscut {

inline constexpr const char* kToolName = "oscut";
inline constexpr const char* kToolVersion = "0.1.0";

/// Wall-clock milliseconds per phase. Kept in their own JSON object so
/// consumers can strip the only nondeterministic part of a report in one
/// erase("timings").
struct ReportTimings {
  double solve_ms = 0.0;
  double sweep_ms = 0.0;
  double verify_ms = 0.0;
  double total_ms = 0.0;
};

/// Full JSON report of one pipeline run. Everything numeric is recomputable
/// from graph + "final.angles"; traces and sweep summaries are included for
/// plotting. `verification` may be null (graphs above the brute-force
/// limit). Keys are emitted in fixed order, so two runs with the same seed
/// produce byte-identical dumps apart from "timings".
nlohmann::ordered_json make_solve_report(
    const Graph& graph, const std::vector<PipelineStage>& schedule,
    std::uint64_t seed, int restarts, const PipelineResult& result,
    const SweepResult& sweep, const nlohmann::ordered_json* verification,
    const ReportTimings& timings);

/// vertex,angle rows; angles in [0, 2*pi).
void write_angles_csv(const AngleConfiguration& theta, std::ostream& out);
AngleConfiguration load_angles_csv(std::istream& in);

/// vertex,side rows with side in {A, B}.
void write_partition_csv(const std::vector<bool>& side, std::ostream& out);
std::vector<bool> load_partition_csv(std::istream& in);

/// Re-parses the output of write_sweep_csv.
std::vector<SweepInterval> load_sweep_csv(std::istream& in);

/// "gspec/method" stages joined by commas, method in {gd, cd}. Commas inside
/// custom coefficient lists are unambiguous because every stage must name a
/// method ("custom:1:0.9,3:0.1/cd,cosine/gd" is two stages). Solver
/// parameters are shared across stages. Throws std::invalid_argument.
std::vector<PipelineStage> parse_schedule_spec(std::string_view spec,
                                               const SolverParams& params);

/// Inverse of parse_schedule_spec up to parameter sharing.
std::string schedule_spec(const std::vector<PipelineStage>& schedule);

}  // namespace oscut

#endif  // OSCUT_REPORT_HPP
