#ifndef OSCUT_VERIFY_HPP
#define OSCUT_VERIFY_HPP

#include <optional>
#include <string>

#include "oscut/angles.hpp"
#include "oscut/energy.hpp"
#include "oscut/graph.hpp"
#include "oscut/rounding.hpp"

namespace oscut {

/// Hard cap for exhaustive Max-Cut: 2^(n-1) partitions.
inline constexpr int kBruteForceVertexLimit = 26;

struct MaxCutResult {
  double weight = 0.0;
  Cut cut;
};

/// Exact Max-Cut by enumeration over all partitions with vertex 0 pinned to
/// side A, walking a Gray code so each step flips one vertex and updates the
/// cut in O(deg). Throws std::invalid_argument above the vertex limit.
MaxCutResult brute_force_maxcut(const Graph& graph);

/// The two-point witness: side A at angle 0, side B at pi. Its energy equals
/// 2W - 4 MaxCut exactly for every admissible g (cut edges contribute
/// g(pi) = -1, uncut edges g(0) = 1, everything counted twice), which is the
/// upper bound min f <= 2W - 4 MaxCut.
struct EnergyBoundCheck {
  double maxcut = 0.0;
  double bound = 0.0;             // 2W - 4 MaxCut
  double two_point_energy = 0.0;  // energy of the witness configuration
  bool witness_identity_ok = false;  // |two_point_energy - bound| <= 1e-9
  bool achieved_within = false;      // achieved_energy <= bound + 1e-9
};
EnergyBoundCheck check_energy_upper_bound(const Graph& graph,
                                          const CouplingFunction& g,
                                          double achieved_energy);

/// Pointwise guarantee check. The rounding argument is valid for EVERY
/// configuration, not just minimizers:
///   expected_cut(theta) >= c(g) * (W/2 - f(theta)/4).
struct VerificationReport {
  std::optional<double> maxcut_exact;       // oracle-sized graphs only
  std::optional<bool> energy_bound_ok;      // witness identity + achieved <= bound
  double theorem_bound = 0.0;               // c(g) * (W/2 - f/4)
  double expected_cut_value = 0.0;
  bool theorem_ok = false;                  // expected >= bound - 1e-9
  std::optional<double> ratio_vs_oracle;    // expected / MaxCut
  std::optional<bool> ratio_ok;
  std::optional<bool> ratio_guarantee_applies;
  std::string details;
};

VerificationReport check_theorem_bound(const Graph& graph,
                                       const CouplingFunction& g,
                                       const AngleConfiguration& theta);
/// Overload taking a precomputed c(g) so property suites can amortize the
/// constant computation.
VerificationReport check_theorem_bound(const Graph& graph,
                                       const CouplingFunction& g,
                                       const AngleConfiguration& theta,
                                       double c_of_g);

/// expected_cut(theta) / MaxCut. The theorem promises ratio >= c(g) only when
/// the optimizer actually reached energy <= 2W - 4 MaxCut (global minima do;
/// local minima carry no guarantee), so the assertion is conditional on that
/// hypothesis. MaxCut = 0 (edgeless graph) reports skipped = true.
struct OracleRatio {
  double maxcut = 0.0;
  double ratio = 0.0;
  bool guarantee_applies = false;
  bool ok = true;
  bool skipped = false;
};
OracleRatio check_ratio_vs_oracle(const Graph& graph, const CouplingFunction& g,
                                  const AngleConfiguration& final_theta,
                                  double final_energy);

/// Full oracle-backed report for the CLI: exact Max-Cut, energy bound,
/// pointwise theorem check, and the ratio, all recomputed from the final
/// configuration. Requires vertex_count <= kBruteForceVertexLimit.
VerificationReport verify_solution(const Graph& graph,
                                   const CouplingFunction& g,
                                   const AngleConfiguration& final_theta,
                                   double final_energy);

}  // namespace oscut

#endif  // OSCUT_VERIFY_HPP
