#ifndef OSCUT_GRAPH_HPP
#define OSCUT_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oscut {

struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

/// Undirected simple graph with strictly positive edge weights.
///
/// Immutable after construction, so it is safe to share across parallel
/// solver restarts. The unweighted case of the underlying theory is w == 1
/// throughout; positive weights generalize it (every bound used here is
/// linear over edges, with the total weight W replacing the edge count).
class Graph {
 public:
  Graph() = default;

  /// Validates and builds the adjacency structure.
  /// Throws std::invalid_argument on self-loops, duplicate undirected pairs,
  /// non-positive/non-finite weights, or out-of-range endpoints.
  static Graph from_edges(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  double total_weight() const noexcept { return total_weight_; }

  /// Neighbors of v as (vertex, weight) pairs.
  std::span<const std::pair<int, double>> neighbors(int v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }

  /// Weight of edge {u, v}; 0 when absent. Symmetric by construction.
  double edge_weight(int u, int v) const;

  double weighted_degree(int v) const {
    return weighted_degree_[static_cast<std::size_t>(v)];
  }
  double max_weighted_degree() const noexcept { return max_weighted_degree_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, double>>> adjacency_;
  std::vector<double> weighted_degree_;
  double total_weight_ = 0.0;
  double max_weighted_degree_ = 0.0;
};

/// Parses the edge-list format: one "u v" or "u v w" per line, 0-based ids,
/// '#' starts a comment. Vertex count is 1 + max id; ids with no edges are
/// isolated vertices. Throws std::runtime_error with the offending line
/// number on malformed tokens, self-loops, duplicates, or bad weights.
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(std::istream& in);

/// DIMACS-like reader: "p <name> n m", then "e u v [w]" with 1-based ids
/// (mapped to 0-based); 'c' lines are comments.
Graph load_dimacs(std::istream& in);

/// Loads a graph file, sniffing DIMACS ("c"/"p" lead tokens) vs edge list.
Graph load_graph_file(const std::string& path);

/// Writes the canonical edge-list form; load(write(g)) preserves the edge set.
void write_edge_list(const Graph& graph, std::ostream& out);

/// G(n, p): each unordered pair kept independently with probability p,
/// unit weights. Deterministic per seed.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);

}  // namespace oscut

#endif  // OSCUT_GRAPH_HPP
