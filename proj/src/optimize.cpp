#include "oscut/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "oscut/rng.hpp"

namespace oscut {

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void abort_non_finite(const char* where) {
  throw std::runtime_error(std::string("non-finite energy in ") + where +
                           "; check coupling coefficients and edge weights");
}

/// Minimizes h on [lo, hi] by bisecting h' when the endpoint derivatives
/// bracket a root, golden section otherwise.
double refine_bracket(const LocalField& field, double lo, double hi) {
  const double dlo = field.derivative(lo);
  const double dhi = field.derivative(hi);
  if (dlo < 0.0 && dhi > 0.0) {
    double a = lo, b = hi;
    for (int iter = 0; iter < 200 && b - a > 1e-13; ++iter) {
      const double mid = 0.5 * (a + b);
      if (field.derivative(mid) < 0.0) {
        a = mid;
      } else {
        b = mid;
      }
    }
    return 0.5 * (a + b);
  }
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = field.value(x1);
  double f2 = field.value(x2);
  while (b - a > 1e-12) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = field.value(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = field.value(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::string to_string(Method method) {
  switch (method) {
    case Method::gradient_descent:
      return "gd";
    case Method::coordinate_descent:
      return "cd";
  }
  return "?";
}

std::string to_string(Termination reason) {
  switch (reason) {
    case Termination::gradient_tol:
      return "gradient_tol";
    case Termination::max_iters:
      return "max_iters";
    case Termination::no_coordinate_improvement:
      return "no_coordinate_improvement";
  }
  return "?";
}

void SolverParams::validate() const {
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (!(grad_tol > 0.0)) throw std::invalid_argument("grad_tol must be > 0");
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (coordinate_sweeps < 1) {
    throw std::invalid_argument("coordinate_sweeps must be >= 1");
  }
  if (sample_points_per_degree < 8) {
    throw std::invalid_argument("sample_points_per_degree must be >= 8");
  }
  if (step_rule == StepRule::fixed && !(step_size > 0.0)) {
    throw std::invalid_argument("fixed step rule needs step_size > 0");
  }
}

AngleConfiguration random_configuration(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  RandomStream stream(seed);
  std::vector<double> angles(static_cast<std::size_t>(n));
  for (double& a : angles) a = kTwoPi * stream.next_unit();
  return AngleConfiguration(std::move(angles));
}

SolveTrace gradient_descent(const Graph& graph, const CouplingFunction& g,
                            const AngleConfiguration& theta0,
                            const SolverParams& params) {
  params.validate();
  if (theta0.size() != static_cast<std::size_t>(graph.vertex_count())) {
    throw std::invalid_argument("angle configuration length mismatch");
  }

  double eta = params.step_size;
  if (params.step_rule == StepRule::lipschitz_auto) {
    // Gershgorin bound on the Hessian: |H_ii| + sum_j |H_ij| <=
    // 4 deg_w(i) sup|g''|, so eta = 1/L guarantees descent without a line
    // search. Edgeless graphs have L = 0 and a zero gradient; eta is unused.
    const double lipschitz =
        4.0 * graph.max_weighted_degree() * g.curvature_bound();
    eta = lipschitz > 0.0 ? 1.0 / lipschitz : 0.0;
  }

  SolveTrace trace;
  AngleConfiguration theta = theta0;
  double current = energy(graph, g, theta);
  if (!std::isfinite(current)) abort_non_finite("gradient_descent");
  trace.energy_per_iteration.push_back(current);
  trace.termination = Termination::max_iters;

  int iters = 0;
  while (iters < params.max_iters) {
    const std::vector<double> grad = energy_gradient(graph, g, theta);
    double norm_sq = 0.0;
    for (double c : grad) norm_sq += c * c;
    if (!std::isfinite(norm_sq)) abort_non_finite("gradient_descent");
    if (std::sqrt(norm_sq) <= params.grad_tol) {
      trace.termination = Termination::gradient_tol;
      break;
    }
    for (std::size_t i = 0; i < grad.size(); ++i) {
      theta.set(i, theta[i] - eta * grad[i]);
    }
    ++iters;
    current = energy(graph, g, theta);
    if (!std::isfinite(current)) abort_non_finite("gradient_descent");
    trace.energy_per_iteration.push_back(current);
  }

  trace.final_configuration = std::move(theta);
  trace.final_energy = current;
  trace.iterations_used = iters;
  return trace;
}

TrigPolyMinimum minimize_trig_poly(const LocalField& field,
                                   int sample_points_per_degree) {
  const int d = field.degree();
  if (d < 1) throw std::invalid_argument("field must have degree >= 1");
  if (field.is_zero()) {
    throw std::invalid_argument("zero field has no minimizer");
  }
  const int n = std::max(64, sample_points_per_degree * d);
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    values[static_cast<std::size_t>(j)] = field.value(kTwoPi * j / n);
  }

  // Local minima of the circular sample sequence, best three first. A
  // degree-d trigonometric polynomial has at most d local minima, so at
  // 16 points per degree no basin can hide between samples.
  std::vector<int> candidates;
  for (int j = 0; j < n; ++j) {
    const double here = values[static_cast<std::size_t>(j)];
    const double prev = values[static_cast<std::size_t>((j + n - 1) % n)];
    const double next = values[static_cast<std::size_t>((j + 1) % n)];
    if (here <= prev && here <= next) candidates.push_back(j);
  }
  std::sort(candidates.begin(), candidates.end(), [&](int x, int y) {
    return values[static_cast<std::size_t>(x)] <
           values[static_cast<std::size_t>(y)];
  });
  if (candidates.size() > 3) candidates.resize(3);

  TrigPolyMinimum best{0.0, std::numeric_limits<double>::infinity()};
  for (int j : candidates) {
    const double sample_t = kTwoPi * j / n;
    const double sample_v = values[static_cast<std::size_t>(j)];
    if (sample_v < best.value) best = {wrap_angle(sample_t), sample_v};
    const double lo = kTwoPi * (j - 1) / n;
    const double hi = kTwoPi * (j + 1) / n;
    const double t = refine_bracket(field, lo, hi);
    const double v = field.value(t);
    if (v < best.value) best = {wrap_angle(t), v};
  }
  return best;
}

SolveTrace coordinate_descent(const Graph& graph, const CouplingFunction& g,
                              const AngleConfiguration& theta0,
                              const SolverParams& params) {
  params.validate();
  const int n = graph.vertex_count();
  if (theta0.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("angle configuration length mismatch");
  }

  SolveTrace trace;
  AngleConfiguration theta = theta0;
  // Energy is tracked through the per-update deltas h(t*) - h(t_old), which
  // are exact restrictions of f; this keeps the recorded trace monotone in
  // floating point, which recomputing full sums would not.
  double current = energy(graph, g, theta);
  if (!std::isfinite(current)) abort_non_finite("coordinate_descent");
  trace.energy_per_iteration.push_back(current);
  trace.termination = Termination::max_iters;

  RandomStream order_stream(params.seed);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);

  int sweeps = 0;
  while (sweeps < params.coordinate_sweeps) {
    // Random order per sweep; fixed orders can cycle on symmetric graphs.
    order_stream.shuffle(order);
    double improvement = 0.0;
    for (int i : order) {
      const LocalField field = local_field(graph, g, theta, i);
      if (field.is_zero()) continue;  // isolated or fully cancelled
      const TrigPolyMinimum minimum =
          minimize_trig_poly(field, params.sample_points_per_degree);
      const double at_current = field.value(theta[static_cast<std::size_t>(i)]);
      if (!std::isfinite(minimum.value) || !std::isfinite(at_current)) {
        abort_non_finite("coordinate_descent");
      }
      if (minimum.value < at_current) {
        theta.set(static_cast<std::size_t>(i), minimum.angle);
        const double delta = at_current - minimum.value;
        current -= delta;
        improvement += delta;
      }
    }
    ++sweeps;
    trace.energy_per_iteration.push_back(current);
    if (improvement < params.grad_tol) {
      trace.termination = Termination::no_coordinate_improvement;
      break;
    }
  }

  trace.final_configuration = std::move(theta);
  trace.final_energy = current;
  trace.iterations_used = sweeps;
  return trace;
}

std::vector<PipelineStage> default_schedule(const SolverParams& params) {
  std::vector<PipelineStage> schedule;
  schedule.push_back(
      {CouplingFunction::cosine(), Method::gradient_descent, params});
  schedule.push_back(
      {CouplingFunction::fourier_tent(5), Method::coordinate_descent, params});
  return schedule;
}

PipelineResult solve_pipeline(const Graph& graph,
                              const std::vector<PipelineStage>& schedule,
                              std::uint64_t seed, int restarts) {
  if (schedule.empty()) throw std::invalid_argument("schedule is empty");
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (graph.vertex_count() < 1) {
    throw std::invalid_argument("graph has no vertices");
  }
  for (const PipelineStage& stage : schedule) stage.params.validate();

  PipelineResult best;
  bool have_best = false;
  for (int r = 0; r < restarts; ++r) {
    AngleConfiguration theta = random_configuration(
        graph.vertex_count(), derive_seed(seed, "init", std::uint64_t(r)));
    std::vector<SolveTrace> traces;
    traces.reserve(schedule.size());
    for (std::size_t s = 0; s < schedule.size(); ++s) {
      const PipelineStage& stage = schedule[s];
      SolverParams stage_params = stage.params;
      stage_params.seed = derive_seed(
          seed, "order", (std::uint64_t(r) << 32) | std::uint64_t(s));
      SolveTrace trace =
          stage.method == Method::gradient_descent
              ? gradient_descent(graph, stage.g, theta, stage_params)
              : coordinate_descent(graph, stage.g, theta, stage_params);
      theta = trace.final_configuration;
      traces.push_back(std::move(trace));
    }
    const double final_energy = traces.back().final_energy;
    if (!have_best || final_energy < best.final_energy) {
      best.stage_traces = std::move(traces);
      best.final_configuration = std::move(theta);
      best.final_energy = final_energy;
      best.best_restart = r;
      have_best = true;
    }
  }
  return best;
}

}  // namespace oscut
