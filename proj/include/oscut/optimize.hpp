#ifndef OSCUT_OPTIMIZE_HPP
#define OSCUT_OPTIMIZE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "oscut/angles.hpp"
#include "oscut/energy.hpp"
#include "oscut/graph.hpp"

namespace oscut {

enum class StepRule { fixed, lipschitz_auto };
enum class Method { gradient_descent, coordinate_descent };
enum class Termination { gradient_tol, max_iters, no_coordinate_improvement };

std::string to_string(Method method);
std::string to_string(Termination reason);

struct SolverParams {
  int max_iters = 5000;
  double grad_tol = 1e-6;
  StepRule step_rule = StepRule::lipschitz_auto;
  double step_size = 0.0;  // used by StepRule::fixed
  int restarts = 5;
  std::uint64_t seed = 0;
  int coordinate_sweeps = 200;
  int sample_points_per_degree = 16;

  /// Throws std::invalid_argument when out of range.
  void validate() const;
};

struct SolveTrace {
  /// Energy after every step: per gradient iteration, or per coordinate
  /// sweep. Non-increasing for both methods (exactly for coordinate descent).
  std::vector<double> energy_per_iteration;
  AngleConfiguration final_configuration;
  double final_energy = 0.0;
  int iterations_used = 0;
  Termination termination = Termination::max_iters;
};

/// i.i.d. uniform angles on [0, 2*pi), deterministic per seed.
AngleConfiguration random_configuration(int n, std::uint64_t seed);

/// theta <- theta - eta grad f, reduced mod 2*pi. Under lipschitz_auto the
/// step is 1/L with L = 4 * (max weighted degree) * sum_k k^2 |c_k|, a global
/// Hessian spectral-norm bound (Gershgorin), so the energy trace is
/// non-increasing. Stops when ||grad||_2 <= grad_tol or after max_iters.
/// Throws std::runtime_error if the energy turns non-finite.
SolveTrace gradient_descent(const Graph& graph, const CouplingFunction& g,
                            const AngleConfiguration& theta0,
                            const SolverParams& params);

/// Global minimum of a nonzero trigonometric polynomial
/// h(t) = sum_k A_k cos(kt) + B_k sin(kt), to within 1e-10 in value.
/// Samples max(64, sample_points_per_degree * d) equispaced points, refines
/// the best three local brackets by derivative bisection, and returns the
/// best. The d = 1 case agrees with the closed form atan2(-B, -A): the
/// minimum of A cos(t - phase) sits at the antipode of the phase.
struct TrigPolyMinimum {
  double angle = 0.0;
  double value = 0.0;
};
TrigPolyMinimum minimize_trig_poly(const LocalField& field,
                                   int sample_points_per_degree = 16);

/// Sweeps vertices in random order (reshuffled per sweep, seeded from
/// params.seed); each visit moves theta_i to the global minimizer of its
/// local field, so energy is non-increasing across every individual update.
/// Zero-field vertices keep their angle. Stops when a full sweep improves
/// energy by less than grad_tol or after coordinate_sweeps sweeps.
SolveTrace coordinate_descent(const Graph& graph, const CouplingFunction& g,
                              const AngleConfiguration& theta0,
                              const SolverParams& params);

struct PipelineStage {
  CouplingFunction g;
  Method method = Method::coordinate_descent;
  SolverParams params;
};

struct PipelineResult {
  /// Winning restart's trace per stage, in schedule order. Energies across
  /// stages are deliberately kept per-stage: different g's are on different
  /// scales and their energies are not comparable.
  std::vector<SolveTrace> stage_traces;
  AngleConfiguration final_configuration;
  double final_energy = 0.0;
  int best_restart = 0;
};

/// Runs the stage schedule end to end: stage 1 starts from a random
/// configuration, every later stage warm-starts from the previous stage's
/// final angles. The whole schedule is restarted `restarts` times from
/// fresh random initializations and the best run by final-stage energy is
/// kept (ties to the earliest restart). Randomness flows from `seed` through
/// the named sub-streams "init" (per restart) and "order" (per restart and
/// stage), so runs are reproducible.
PipelineResult solve_pipeline(const Graph& graph,
                              const std::vector<PipelineStage>& schedule,
                              std::uint64_t seed, int restarts);

/// The two-stage protocol used as the default: cosine gradient descent,
/// then exact coordinate descent on the degree-9 tent truncation,
/// warm-started from the cosine result.
std::vector<PipelineStage> default_schedule(const SolverParams& params);

}  // namespace oscut

#endif  // OSCUT_OPTIMIZE_HPP
