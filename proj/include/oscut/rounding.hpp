#ifndef OSCUT_ROUNDING_HPP
#define OSCUT_ROUNDING_HPP

#include <iosfwd>
#include <vector>

#include "oscut/angles.hpp"
#include "oscut/graph.hpp"

namespace oscut {

/// Shortest distance on the circle, in [0, pi].
double circle_distance(double a, double b);

/// Probability that a uniformly random line through the origin separates two
/// angles: d_S1(a, b) / pi.
double separation_probability(double a, double b);

struct Cut {
  std::vector<bool> side;  // true = side A
  double weight = 0.0;
};

/// Weight of edges crossing the given bipartition.
double cut_weight(const Graph& graph, const std::vector<bool>& side);

/// Expected cut weight over a uniformly random rounding line:
/// sum over edges of w * d_S1(theta_u, theta_v) / pi.
double expected_cut(const Graph& graph, const AngleConfiguration& theta);

/// Partition induced by the line at angle phi: vertex i lands on side A iff
/// theta_i in [phi, phi + pi) mod 2*pi. Boundary angles resolve by that
/// half-open rule (theta == phi -> A, theta == phi + pi -> B), so results
/// are deterministic.
Cut cut_at_angle(const Graph& graph, const AngleConfiguration& theta,
                 double phi);

/// Exact enumeration of every combinatorially distinct rounding line.
/// Lines are parametrized by phi in [0, pi) -- a line, not a direction; the
/// partition changes only when phi crosses some theta_i mod pi.
struct SweepInterval {
  double lo = 0.0;
  double hi = 0.0;
  double cut = 0.0;
};

struct SweepResult {
  /// Sorted, deduplicated (tolerance 1e-12) values of theta_i mod pi.
  std::vector<double> breakpoints;
  /// Positive-length intervals of [0, pi] between consecutive breakpoints
  /// with the (constant) cut weight on each. The first and last intervals
  /// carry the same bipartition: phi and phi + pi induce the same cut.
  std::vector<SweepInterval> intervals;
  Cut best;
  double best_angle = 0.0;  // midpoint of a best interval
  double expected = 0.0;    // length-weighted average of interval cuts
};

/// Walks the breakpoint circle once, flipping one vertex group per
/// breakpoint and updating the cut incrementally in O(deg) per flip
/// (O(n log n + sum deg) total), which keeps large sweeps cheap. The result
/// is identical to evaluating cut_at_angle at every interval midpoint.
SweepResult sweep_all_cuts(const Graph& graph, const AngleConfiguration& theta);

/// CSV with header angle_lo,angle_hi,cut_weight; plot directly to reproduce
/// the cut-versus-line-angle curves.
void write_sweep_csv(const SweepResult& sweep, std::ostream& out);

}  // namespace oscut

#endif  // OSCUT_ROUNDING_HPP
