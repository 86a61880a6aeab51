#include "oscut/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace oscut {

namespace {

constexpr double kPi = std::numbers::pi;
// Breakpoints closer than this collapse into one flip group, and intervals
// shorter than this are dropped as numerically empty.
constexpr double kBreakpointTol = 1e-12;

void check_lengths(const Graph& graph, std::size_t got, const char* what) {
  if (got != static_cast<std::size_t>(graph.vertex_count())) {
    throw std::invalid_argument(std::string(what) +
                                " length does not match vertex count");
  }
}

}  // namespace

double circle_distance(double a, double b) {
  const double diff = std::fabs(wrap_angle(a) - wrap_angle(b));
  return std::min(diff, kTwoPi - diff);
}

double separation_probability(double a, double b) {
  return circle_distance(a, b) / kPi;
}

double cut_weight(const Graph& graph, const std::vector<bool>& side) {
  check_lengths(graph, side.size(), "side vector");
  double total = 0.0;
  for (const Edge& e : graph.edges()) {
    if (side[static_cast<std::size_t>(e.u)] !=
        side[static_cast<std::size_t>(e.v)]) {
      total += e.weight;
    }
  }
  return total;
}

double expected_cut(const Graph& graph, const AngleConfiguration& theta) {
  check_lengths(graph, theta.size(), "angle configuration");
  double total = 0.0;
  for (const Edge& e : graph.edges()) {
    total += e.weight * separation_probability(
                            theta[static_cast<std::size_t>(e.u)],
                            theta[static_cast<std::size_t>(e.v)]);
  }
  return total;
}

Cut cut_at_angle(const Graph& graph, const AngleConfiguration& theta,
                 double phi) {
  check_lengths(graph, theta.size(), "angle configuration");
  Cut cut;
  cut.side.resize(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    cut.side[i] = wrap_angle(theta[i] - phi) < kPi;
  }
  cut.weight = cut_weight(graph, cut.side);
  return cut;
}

SweepResult sweep_all_cuts(const Graph& graph,
                           const AngleConfiguration& theta) {
  check_lengths(graph, theta.size(), "angle configuration");
  const int n = graph.vertex_count();

  // theta_i and theta_i + pi meet the same lines, so each vertex produces
  // one breakpoint in [0, pi).
  std::vector<std::pair<double, int>> marks;
  marks.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    marks.emplace_back(std::fmod(wrap_angle(theta[static_cast<std::size_t>(i)]), kPi), i);
  }
  std::sort(marks.begin(), marks.end());

  SweepResult result;
  std::vector<std::vector<int>> groups;  // vertices flipping at breakpoints[j]
  for (const auto& [pos, vertex] : marks) {
    if (result.breakpoints.empty() ||
        pos - result.breakpoints.back() > kBreakpointTol) {
      result.breakpoints.push_back(pos);
      groups.emplace_back();
    }
    groups.back().push_back(vertex);
  }

  // Segment j of [0, pi] runs from boundaries: seg 0 = [0, b_0],
  // seg j = [b_{j-1}, b_j], seg k = [b_{k-1}, pi]. Crossing b_j flips
  // groups[j]. Only the first and last segment can be empty (interior gaps
  // exceed the dedup tolerance by construction).
  const std::size_t k = result.breakpoints.size();
  auto seg_lo = [&](std::size_t j) {
    return j == 0 ? 0.0 : result.breakpoints[j - 1];
  };
  auto seg_hi = [&](std::size_t j) {
    return j == k ? kPi : result.breakpoints[j];
  };

  std::size_t first = 0;
  while (first <= k && seg_hi(first) - seg_lo(first) <= kBreakpointTol) {
    ++first;
  }
  if (first > k) {
    throw std::logic_error("sweep found no positive-length interval");
  }

  // One full evaluation for the first live segment, O(deg) flips after that.
  Cut running =
      cut_at_angle(graph, theta, 0.5 * (seg_lo(first) + seg_hi(first)));
  std::size_t best_index = 0;
  double best_weight = -1.0;
  double weighted_sum = 0.0;
  for (std::size_t j = first; j <= k; ++j) {
    const double lo = seg_lo(j);
    const double hi = seg_hi(j);
    if (hi - lo > kBreakpointTol) {
      result.intervals.push_back({lo, hi, running.weight});
      weighted_sum += (hi - lo) * running.weight;
      if (running.weight > best_weight) {
        best_weight = running.weight;
        best_index = result.intervals.size() - 1;
      }
    }
    if (j < k) {
      for (int v : groups[j]) {
        const bool was = running.side[static_cast<std::size_t>(v)];
        for (const auto& [u, w] : graph.neighbors(v)) {
          running.weight +=
              running.side[static_cast<std::size_t>(u)] == was ? w : -w;
        }
        running.side[static_cast<std::size_t>(v)] = !was;
      }
    }
  }

  const SweepInterval& best_interval = result.intervals[best_index];
  result.best_angle = 0.5 * (best_interval.lo + best_interval.hi);
  // Recompute the winner from scratch: exact weight and side vector, free of
  // any drift the incremental updates may have accumulated.
  result.best = cut_at_angle(graph, theta, result.best_angle);
  result.expected = weighted_sum / kPi;
  return result;
}

void write_sweep_csv(const SweepResult& sweep, std::ostream& out) {
  out << "angle_lo,angle_hi,cut_weight\n";
  const auto previous = out.precision(17);
  for (const SweepInterval& interval : sweep.intervals) {
    out << interval.lo << ',' << interval.hi << ',' << interval.cut << '\n';
  }
  out.precision(previous);
}

}  // namespace oscut
