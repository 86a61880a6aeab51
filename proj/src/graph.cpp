#include "oscut/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "oscut/rng.hpp"

namespace oscut {

namespace {

std::uint64_t pair_key(int u, int v) {
  const std::uint64_t lo = static_cast<std::uint64_t>(std::min(u, v));
  const std::uint64_t hi = static_cast<std::uint64_t>(std::max(u, v));
  return (hi << 32) | lo;
}

[[noreturn]] void parse_fail(int line_number, const std::string& message) {
  throw std::runtime_error("line " + std::to_string(line_number) + ": " +
                           message);
}

}  // namespace

Graph Graph::from_edges(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 0) {
    throw std::invalid_argument("vertex count must be non-negative");
  }
  Graph g;
  g.n_ = vertex_count;
  g.adjacency_.resize(static_cast<std::size_t>(vertex_count));
  g.weighted_degree_.assign(static_cast<std::size_t>(vertex_count), 0.0);

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " +
                                  std::to_string(e.u));
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw std::invalid_argument("edge weight must be positive and finite");
    }
    if (!seen.insert(pair_key(e.u, e.v)).second) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) +
                                  "," + std::to_string(e.v) + "}");
    }
    g.adjacency_[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.weight);
    g.adjacency_[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.weight);
    g.weighted_degree_[static_cast<std::size_t>(e.u)] += e.weight;
    g.weighted_degree_[static_cast<std::size_t>(e.v)] += e.weight;
    g.total_weight_ += e.weight;
  }
  g.edges_ = std::move(edges);
  if (!g.weighted_degree_.empty()) {
    g.max_weighted_degree_ =
        *std::max_element(g.weighted_degree_.begin(), g.weighted_degree_.end());
  }
  if (!std::isfinite(g.total_weight_)) {
    throw std::invalid_argument("total weight is not finite");
  }
  return g;
}

double Graph::edge_weight(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::invalid_argument("vertex out of range");
  }
  const auto& row = adjacency_[static_cast<std::size_t>(u)];
  for (const auto& [nbr, w] : row) {
    if (nbr == v) return w;
  }
  return 0.0;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in);
}

Graph load_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  int max_id = -1;
  int line_number = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    long long u, v;
    if (!(tokens >> u)) continue;  // blank or comment-only line
    if (!(tokens >> v)) parse_fail(line_number, "expected two vertex ids");
    double w = 1.0;
    if (tokens >> w) {
      // weight given explicitly
    } else if (!tokens.eof()) {
      parse_fail(line_number, "malformed weight");
    }
    std::string trailing;
    if (tokens.clear(), tokens >> trailing) {
      parse_fail(line_number, "unexpected trailing token '" + trailing + "'");
    }
    if (u < 0 || v < 0 || u > std::numeric_limits<int>::max() ||
        v > std::numeric_limits<int>::max()) {
      parse_fail(line_number, "vertex id out of range");
    }
    if (u == v) parse_fail(line_number, "self-loop");
    if (!(w > 0.0) || !std::isfinite(w)) {
      parse_fail(line_number, "weight must be positive");
    }
    const int ui = static_cast<int>(u), vi = static_cast<int>(v);
    if (!seen.insert(pair_key(ui, vi)).second) {
      parse_fail(line_number, "duplicate edge");
    }
    edges.push_back({ui, vi, w});
    max_id = std::max({max_id, ui, vi});
  }
  return Graph::from_edges(max_id + 1, std::move(edges));
}

Graph load_dimacs(std::istream& in) {
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  int n = -1;
  long long declared_edges = -1;
  int line_number = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream tokens(line);
    std::string tag;
    if (!(tokens >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) parse_fail(line_number, "duplicate problem line");
      std::string name;
      if (!(tokens >> name >> n >> declared_edges) || n < 0) {
        parse_fail(line_number, "malformed problem line");
      }
      continue;
    }
    if (tag == "e") {
      if (n < 0) parse_fail(line_number, "edge before problem line");
      long long u, v;
      if (!(tokens >> u >> v)) parse_fail(line_number, "malformed edge line");
      double w = 1.0;
      if (tokens >> w) {
        // optional weight
      } else if (!tokens.eof()) {
        parse_fail(line_number, "malformed weight");
      }
      if (u < 1 || v < 1 || u > n || v > n) {
        parse_fail(line_number, "vertex id outside 1..n");
      }
      if (u == v) parse_fail(line_number, "self-loop");
      if (!(w > 0.0) || !std::isfinite(w)) {
        parse_fail(line_number, "weight must be positive");
      }
      const int ui = static_cast<int>(u - 1), vi = static_cast<int>(v - 1);
      if (!seen.insert(pair_key(ui, vi)).second) {
        parse_fail(line_number, "duplicate edge");
      }
      edges.push_back({ui, vi, w});
      continue;
    }
    parse_fail(line_number, "unknown line type '" + tag + "'");
  }
  if (n < 0) throw std::runtime_error("missing DIMACS problem line");
  if (declared_edges >= 0 &&
      declared_edges != static_cast<long long>(edges.size())) {
    throw std::runtime_error("problem line declares " +
                             std::to_string(declared_edges) + " edges, found " +
                             std::to_string(edges.size()));
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  // Sniff: DIMACS files lead with 'c' or 'p' tokens.
  std::string first_token;
  for (std::string line; std::getline(in, line);) {
    std::istringstream tokens(line);
    if (tokens >> first_token) break;
  }
  in.clear();
  in.seekg(0);
  if (first_token == "c" || first_token == "p") return load_dimacs(in);
  return load_edge_list(in);
}

void write_edge_list(const Graph& graph, std::ostream& out) {
  out << "# " << graph.vertex_count() << " vertices, " << graph.edge_count()
      << " edges\n";
  out.precision(17);
  for (const Edge& e : graph.edges()) {
    out << e.u << ' ' << e.v;
    if (e.weight != 1.0) out << ' ' << e.weight;
    out << '\n';
  }
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must lie in [0, 1]");
  }
  RandomStream stream(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (stream.next_unit() < p) edges.push_back({u, v, 1.0});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  return Graph::from_edges(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("both sides need a vertex");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v, 1.0});
  }
  return Graph::from_edges(a + b, std::move(edges));
}

}  // namespace oscut
