#include "oscut/verify.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace oscut {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCheckTol = 1e-9;

}  // namespace

MaxCutResult brute_force_maxcut(const Graph& graph) {
  const int n = graph.vertex_count();
  if (n < 1) throw std::invalid_argument("graph has no vertices");
  if (n > kBruteForceVertexLimit) {
    throw std::invalid_argument("brute force limited to " +
                                std::to_string(kBruteForceVertexLimit) +
                                " vertices");
  }

  // Vertex 0 stays on side A (complements give the same cut), the rest walk
  // a binary reflected Gray code: step k flips vertex ctz(k) + 1, so each of
  // the 2^(n-1) partitions costs one O(deg) update.
  std::uint32_t sides = 0;  // bit set = side B
  double weight = 0.0;
  double best_weight = 0.0;
  std::uint32_t best_sides = 0;
  const std::uint64_t steps = n > 1 ? (std::uint64_t(1) << (n - 1)) : 1;
  for (std::uint64_t k = 1; k < steps; ++k) {
    const int v = std::countr_zero(k) + 1;
    const std::uint32_t v_bit = std::uint32_t(1) << v;
    const bool v_was_b = (sides & v_bit) != 0;
    for (const auto& [u, w] : graph.neighbors(v)) {
      const bool u_is_b = (sides & (std::uint32_t(1) << u)) != 0;
      weight += u_is_b == v_was_b ? w : -w;
    }
    sides ^= v_bit;
    if (weight > best_weight) {
      best_weight = weight;
      best_sides = sides;
    }
  }

  MaxCutResult result;
  result.weight = best_weight;
  result.cut.side.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    result.cut.side[static_cast<std::size_t>(i)] =
        (best_sides & (std::uint32_t(1) << i)) == 0;
  }
  result.cut.weight = best_weight;
  return result;
}

EnergyBoundCheck check_energy_upper_bound(const Graph& graph,
                                          const CouplingFunction& g,
                                          double achieved_energy) {
  const MaxCutResult maxcut = brute_force_maxcut(graph);
  EnergyBoundCheck check;
  check.maxcut = maxcut.weight;
  check.bound = 2.0 * graph.total_weight() - 4.0 * maxcut.weight;

  std::vector<double> witness(maxcut.cut.side.size());
  for (std::size_t i = 0; i < witness.size(); ++i) {
    witness[i] = maxcut.cut.side[i] ? 0.0 : kPi;
  }
  check.two_point_energy = energy(graph, g, AngleConfiguration(witness));
  check.witness_identity_ok =
      std::fabs(check.two_point_energy - check.bound) <= kCheckTol;
  check.achieved_within = achieved_energy <= check.bound + kCheckTol;
  return check;
}

VerificationReport check_theorem_bound(const Graph& graph,
                                       const CouplingFunction& g,
                                       const AngleConfiguration& theta) {
  return check_theorem_bound(graph, g, theta,
                             approximation_constant(g).value);
}

VerificationReport check_theorem_bound(const Graph& graph,
                                       const CouplingFunction& g,
                                       const AngleConfiguration& theta,
                                       double c_of_g) {
  VerificationReport report;
  const double f = energy(graph, g, theta);
  report.theorem_bound =
      c_of_g * (graph.total_weight() / 2.0 - f / 4.0);
  report.expected_cut_value = expected_cut(graph, theta);
  report.theorem_ok =
      report.expected_cut_value >= report.theorem_bound - kCheckTol;

  std::ostringstream oss;
  oss.precision(12);
  oss << "expected cut " << report.expected_cut_value << " vs bound "
      << report.theorem_bound << " (c = " << c_of_g << ", energy = " << f
      << ")";
  report.details = oss.str();
  return report;
}

OracleRatio check_ratio_vs_oracle(const Graph& graph,
                                  const CouplingFunction& g,
                                  const AngleConfiguration& final_theta,
                                  double final_energy) {
  OracleRatio ratio;
  const MaxCutResult maxcut = brute_force_maxcut(graph);
  ratio.maxcut = maxcut.weight;
  if (maxcut.weight <= 0.0) {
    ratio.skipped = true;
    return ratio;
  }
  const double bound = 2.0 * graph.total_weight() - 4.0 * maxcut.weight;
  ratio.guarantee_applies = final_energy <= bound + kCheckTol;
  ratio.ratio = expected_cut(graph, final_theta) / maxcut.weight;
  // The ratio >= c(g) promise is conditional on the optimizer having matched
  // the two-point bound; a merely local minimum proves nothing either way.
  ratio.ok = !ratio.guarantee_applies ||
             ratio.ratio >= approximation_constant(g).value - kCheckTol;
  return ratio;
}

VerificationReport verify_solution(const Graph& graph,
                                   const CouplingFunction& g,
                                   const AngleConfiguration& final_theta,
                                   double final_energy) {
  const double c_of_g = approximation_constant(g).value;
  VerificationReport report =
      check_theorem_bound(graph, g, final_theta, c_of_g);

  const EnergyBoundCheck bound =
      check_energy_upper_bound(graph, g, final_energy);
  report.maxcut_exact = bound.maxcut;
  report.energy_bound_ok = bound.witness_identity_ok && bound.achieved_within;

  const OracleRatio ratio =
      check_ratio_vs_oracle(graph, g, final_theta, final_energy);
  if (!ratio.skipped) {
    report.ratio_vs_oracle = ratio.ratio;
    report.ratio_ok = ratio.ok;
    report.ratio_guarantee_applies = ratio.guarantee_applies;
  }

  std::ostringstream oss;
  oss.precision(12);
  oss << report.details << "; maxcut = " << bound.maxcut
      << ", energy bound 2W - 4 maxcut = " << bound.bound
      << (bound.achieved_within ? " reached" : " not reached");
  if (!ratio.skipped) {
    oss << ", ratio = " << ratio.ratio
        << (ratio.guarantee_applies ? " (guarantee applies)"
                                    : " (local minimum, no guarantee)");
  }
  report.details = oss.str();
  return report;
}

}  // namespace oscut
