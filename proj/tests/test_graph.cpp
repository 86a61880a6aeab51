#include <cmath>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "oscut/graph.hpp"

using namespace oscut;

TEST_CASE("edge list parsing") {
  const Graph triangle = parse_edge_list("0 1\n1 2\n0 2\n");
  CHECK(triangle.vertex_count() == 3);
  CHECK(triangle.edge_count() == 3);
  CHECK(triangle.total_weight() == 3.0);

  const Graph weighted = parse_edge_list("0 1 2.5");
  CHECK(weighted.vertex_count() == 2);
  CHECK(weighted.total_weight() == 2.5);

  const Graph commented = parse_edge_list("# header\n0 1\n\n# more\n2 3 0.5\n");
  CHECK(commented.edge_count() == 2);
  CHECK(commented.vertex_count() == 4);
}

TEST_CASE("edge list rejects bad input") {
  CHECK_THROWS_AS(parse_edge_list("0 0"), std::runtime_error);
  CHECK_THROWS_AS(parse_edge_list("0 1\n1 0"), std::runtime_error);
  CHECK_THROWS_AS(parse_edge_list("0 1 -2"), std::runtime_error);
  CHECK_THROWS_AS(parse_edge_list("0 1 0"), std::runtime_error);
  CHECK_THROWS_AS(parse_edge_list("0 x"), std::runtime_error);
  CHECK_THROWS_AS(parse_edge_list("0 1 1 1"), std::runtime_error);
  CHECK_THROWS_AS(parse_edge_list("0"), std::runtime_error);

  // Errors carry the offending line number.
  try {
    parse_edge_list("0 1\n2 2\n");
    FAIL("expected a parse error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("vertex id gaps create isolated vertices") {
  const Graph g = parse_edge_list("0 5");
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 1);
  CHECK(g.weighted_degree(3) == 0.0);
  CHECK(g.neighbors(3).empty());
}

TEST_CASE("from_edges validates") {
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1, 1.0}, {1, 0, 2.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1, -1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(-1, {}), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric") {
  const Graph g = parse_edge_list("0 1 2.0\n1 2 0.25\n0 3\n");
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      CHECK(g.edge_weight(u, v) == g.edge_weight(v, u));
    }
  }
  CHECK(g.edge_weight(0, 1) == 2.0);
  CHECK(g.edge_weight(0, 2) == 0.0);
  CHECK(g.weighted_degree(0) == 3.0);
  CHECK(g.weighted_degree(2) == 0.25);
  CHECK(g.max_weighted_degree() == 3.0);
  CHECK_THROWS_AS(g.edge_weight(0, 7), std::invalid_argument);
}

TEST_CASE("dimacs loading") {
  std::istringstream in(
      "c comment line\n"
      "p cut 4 3\n"
      "e 1 2\n"
      "e 2 3 2.5\n"
      "e 1 4\n");
  const Graph g = load_dimacs(in);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.edge_weight(0, 1) == 1.0);  // 1-based ids shifted down
  CHECK(g.edge_weight(1, 2) == 2.5);
  CHECK(g.edge_weight(0, 3) == 1.0);

  std::istringstream missing("p cut 3 2\ne 1 2\n");
  CHECK_THROWS_AS(load_dimacs(missing), std::runtime_error);
  std::istringstream out_of_range("p cut 2 1\ne 1 3\n");
  CHECK_THROWS_AS(load_dimacs(out_of_range), std::runtime_error);
}

TEST_CASE("graph file sniffing") {
  tests::TempDir dir;
  tests::write_file(dir.file("plain.txt"), "0 1\n1 2\n");
  tests::write_file(dir.file("dimacs.txt"), "p cut 3 2\ne 1 2\ne 2 3\n");
  CHECK(load_graph_file(dir.file("plain.txt")).edge_count() == 2);
  CHECK(load_graph_file(dir.file("dimacs.txt")).edge_count() == 2);
  CHECK_THROWS(load_graph_file(dir.file("missing.txt")));
}

TEST_CASE("write then load is identity on the edge set") {
  RandomStream rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = tests::random_graph(2 + int(rng.next_below(12)), 0.4, rng);
    std::ostringstream out;
    write_edge_list(g, out);
    std::istringstream in(out.str());
    const Graph back = load_edge_list(in);
    REQUIRE(back.edge_count() == g.edge_count());
    for (const Edge& e : g.edges()) {
      CHECK(back.edge_weight(e.u, e.v) == e.weight);
    }
  }
}

TEST_CASE("erdos renyi generator") {
  CHECK(erdos_renyi(10, 0.0, 3).edge_count() == 0);
  CHECK(erdos_renyi(10, 1.0, 3).edge_count() == 45);

  const Graph a = erdos_renyi(60, 0.2, 99);
  const Graph b = erdos_renyi(60, 0.2, 99);
  REQUIRE(a.edge_count() == b.edge_count());
  for (std::size_t i = 0; i < a.edges().size(); ++i) {
    CHECK(a.edges()[i].u == b.edges()[i].u);
    CHECK(a.edges()[i].v == b.edges()[i].v);
  }
  CHECK(erdos_renyi(60, 0.2, 100).edge_count() != a.edge_count());

  // Binomial(n choose 2, p) edge count: mean 1247.5, sigma ~ 35.1.
  const Graph big = erdos_renyi(500, 0.01, 1);
  CHECK(big.edge_count() >= 1107);
  CHECK(big.edge_count() <= 1388);

  CHECK_THROWS_AS(erdos_renyi(10, -0.1, 0), std::invalid_argument);
  CHECK_THROWS_AS(erdos_renyi(10, 1.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(erdos_renyi(0, 0.5, 0), std::invalid_argument);
}

TEST_CASE("structured generators") {
  const Graph c5 = cycle_graph(5);
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(c5.weighted_degree(0) == 2.0);

  const Graph k4 = complete_graph(4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.max_weighted_degree() == 3.0);

  const Graph k33 = complete_bipartite_graph(3, 3);
  CHECK(k33.vertex_count() == 6);
  CHECK(k33.edge_count() == 9);
  CHECK(k33.edge_weight(0, 1) == 0.0);  // within a side
  CHECK(k33.edge_weight(0, 3) == 1.0);  // across

  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(complete_bipartite_graph(0, 3), std::invalid_argument);
}
