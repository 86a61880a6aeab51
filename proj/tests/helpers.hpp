#ifndef OSCUT_TESTS_HELPERS_HPP
#define OSCUT_TESTS_HELPERS_HPP

#include <unistd.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oscut/energy.hpp"
#include "oscut/graph.hpp"
#include "oscut/rng.hpp"

namespace oscut::tests {

/// Independent Max-Cut oracle: plain subset enumeration, no Gray code, no
/// incremental updates. Only for tiny n.
inline double naive_maxcut(const Graph& graph) {
  const int n = graph.vertex_count();
  double best = 0.0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
    double weight = 0.0;
    for (const Edge& e : graph.edges()) {
      const bool u_in = (mask >> e.u) & 1;
      const bool v_in = (mask >> e.v) & 1;
      if (u_in != v_in) weight += e.weight;
    }
    if (weight > best) best = weight;
  }
  return best;
}

/// Independent energy oracle: direct double loop over ordered pairs through
/// the adjacency query instead of the edge list.
inline double naive_energy(const Graph& graph, const CouplingFunction& g,
                           const AngleConfiguration& theta) {
  double total = 0.0;
  for (int i = 0; i < graph.vertex_count(); ++i) {
    for (int j = 0; j < graph.vertex_count(); ++j) {
      if (i == j) continue;
      const double w = graph.edge_weight(i, j);
      if (w > 0.0) total += w * g(theta[std::size_t(i)] - theta[std::size_t(j)]);
    }
  }
  return total;
}

/// Central finite differences of the energy, h = 1e-5.
inline std::vector<double> numeric_gradient(const Graph& graph,
                                            const CouplingFunction& g,
                                            const AngleConfiguration& theta) {
  const double h = 1e-5;
  std::vector<double> grad(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    AngleConfiguration plus = theta;
    AngleConfiguration minus = theta;
    plus.set(i, theta[i] + h);
    minus.set(i, theta[i] - h);
    grad[i] = (energy(graph, g, plus) - energy(graph, g, minus)) / (2.0 * h);
  }
  return grad;
}

/// Random connected-ish test graph with weights in [0.5, 2].
inline Graph random_graph(int n, double edge_prob, RandomStream& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_unit() < edge_prob) {
        edges.push_back({u, v, 0.5 + 1.5 * rng.next_unit()});
      }
    }
  }
  if (edges.empty() && n >= 2) edges.push_back({0, 1, 1.0});
  return Graph::from_edges(n, edges);
}

inline AngleConfiguration random_angles(int n, RandomStream& rng) {
  std::vector<double> angles(static_cast<std::size_t>(n));
  for (double& a : angles) a = kTwoPi * rng.next_unit();
  return AngleConfiguration(std::move(angles));
}

/// Unique scratch directory under the system temp dir, removed on scope exit.
class TempDir {
 public:
  TempDir() {
    static std::uint64_t counter = 0;
    const auto base = std::filesystem::temp_directory_path();
    path_ = base / ("oscut_test_" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream oss;
  oss << in.rdbuf();
  return oss.str();
}

}  // namespace oscut::tests

#endif  // OSCUT_TESTS_HELPERS_HPP
