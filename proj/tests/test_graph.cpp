#include <doctest.h>

#include <map>
#include <random>

#include "cvgraph/graph_io.hpp"
#include "cvgraph/weighted_graph.hpp"
#include "test_support.hpp"

using namespace cvgraph;
using cvgraph::test::five_vertex_example;
using cvgraph::test::random_graph;

namespace {

// Full-matrix scan of the representation invariants.
void check_invariants(const WeightedGraph& g) {
  for (int u = 1; u <= g.vertex_count(); ++u) {
    CHECK(g.weight(u, u) == 0);
    for (int v = 1; v <= g.vertex_count(); ++v) {
      CHECK(g.weight(u, v) == g.weight(v, u));
    }
  }
}

}  // namespace

TEST_SUITE("graph_core") {

TEST_CASE("new graph is edgeless") {
  WeightedGraph g(3);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges().empty());
  check_invariants(g);
  CHECK(WeightedGraph(1).vertex_count() == 1);
  CHECK_THROWS_AS(WeightedGraph(0), std::invalid_argument);
}

TEST_CASE("set_edge updates symmetrically and zero deletes") {
  WeightedGraph g = WeightedGraph(3).set_edge(1, 2, 1);
  CHECK(g.weight(1, 2) == 1);
  CHECK(g.weight(2, 1) == 1);
  CHECK(g.has_edge(1, 2));
  check_invariants(g);

  WeightedGraph cleared = g.set_edge(1, 2, 0);
  CHECK(!cleared.has_edge(1, 2));
  CHECK(cleared == WeightedGraph(3));

  CHECK_THROWS_AS(g.set_edge(2, 2, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(g.set_edge(0, 1, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(g.set_edge(1, 4, Rational(1)), std::invalid_argument);
}

TEST_CASE("neighborhood is the sorted support of a row") {
  WeightedGraph g = five_vertex_example();
  CHECK(g.neighborhood(1) == std::vector<int>{2, 3, 5});
  CHECK(g.neighborhood(4) == std::vector<int>{3, 5});
  CHECK(WeightedGraph(4).neighborhood(2).empty());
  CHECK_THROWS_AS(g.neighborhood(6), std::invalid_argument);
}

TEST_CASE("canonical bytes distinguish n and weights, not build order") {
  WeightedGraph a = WeightedGraph(4).set_edge(1, 2, Rational(1, 2)).set_edge(3, 4, 2);
  WeightedGraph b = WeightedGraph(4).set_edge(3, 4, 2).set_edge(1, 2, Rational(1, 2));
  CHECK(a.canonical_bytes() == b.canonical_bytes());

  WeightedGraph negated = a.set_edge(1, 2, Rational(-1, 2));
  CHECK(a.canonical_bytes() != negated.canonical_bytes());

  CHECK(WeightedGraph(2).canonical_bytes() != WeightedGraph(3).canonical_bytes());
}

TEST_CASE("canonical bytes collide only for equal graphs") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<int> size(1, 8);
  std::map<std::string, WeightedGraph> seen;
  for (int i = 0; i < 10000; ++i) {
    WeightedGraph g = random_graph(rng, size(rng));
    auto [it, inserted] = seen.emplace(g.canonical_bytes(), g);
    if (!inserted) {
      CHECK(it->second == g);
    }
  }
}

TEST_CASE("invariants hold after random operation chains") {
  std::mt19937_64 rng(7);
  WeightedGraph g(6);
  std::uniform_int_distribution<int> vertex(1, 6);
  for (int i = 0; i < 200; ++i) {
    int u = vertex(rng), v = vertex(rng);
    if (u == v) continue;
    g = g.set_edge(u, v, cvgraph::test::random_rational(rng));
    check_invariants(g);
  }
}

TEST_CASE("from_weight_matrix validates") {
  std::vector<Rational> ok = {Rational(0), Rational(2), Rational(2), Rational(0)};
  CHECK(WeightedGraph::from_weight_matrix(2, ok) ==
        WeightedGraph(2).set_edge(1, 2, 2));

  std::vector<Rational> asym = {Rational(0), Rational(2), Rational(1), Rational(0)};
  CHECK_THROWS_AS(WeightedGraph::from_weight_matrix(2, asym),
                  std::invalid_argument);
  std::vector<Rational> diag = {Rational(1), Rational(0), Rational(0), Rational(0)};
  CHECK_THROWS_AS(WeightedGraph::from_weight_matrix(2, diag),
                  std::invalid_argument);
}

TEST_CASE("graph file parsing") {
  WeightedGraph g = parse_graph("cvgraph v1\nn 2\ne 1 2 1\n");
  CHECK(g == WeightedGraph(2).set_edge(1, 2, 1));

  g = parse_graph("cvgraph v1\nn 2\ne 1 2 3/4\n");
  CHECK(g.weight(1, 2) == Rational(3, 4));

  SUBCASE("comments, blank lines, missing newline at eof") {
    g = parse_graph("# header comment\ncvgraph v1\n\nn 3\ne 1 3 -2\n# done");
    CHECK(g == WeightedGraph(3).set_edge(1, 3, -2));
  }
  SUBCASE("duplicate edge with equal weight is tolerated") {
    g = parse_graph("cvgraph v1\nn 2\ne 1 2 1\ne 1 2 1\n");
    CHECK(g.weight(1, 2) == 1);
  }
}

TEST_CASE("graph file errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("cvgraph v2\nn 2\n") == 1);
  CHECK(line_of("") == 1);
  CHECK(line_of("cvgraph v1\nn 0\n") == 2);
  CHECK(line_of("cvgraph v1\nm 2\n") == 2);
  CHECK(line_of("cvgraph v1\nn 2\ne 1 1 1\n") == 3);
  CHECK(line_of("cvgraph v1\nn 2\ne 2 1 1\n") == 3);
  CHECK(line_of("cvgraph v1\nn 2\ne 1 3 1\n") == 3);
  CHECK(line_of("cvgraph v1\nn 2\ne 1 2 x\n") == 3);
  CHECK(line_of("cvgraph v1\nn 2\ne 1 2 1/0\n") == 3);
  CHECK(line_of("cvgraph v1\nn 2\ne 1 2 1\ne 1 2 2\n") == 4);
  CHECK(line_of("cvgraph v1\nn 2\n# fine\nextra stuff\n") == 4);
}

TEST_CASE("serialize emits canonical sorted text") {
  WeightedGraph g = WeightedGraph(3).set_edge(2, 3, Rational(-1, 2)).set_edge(1, 2, 2);
  CHECK(serialize_graph(g) == "cvgraph v1\nn 3\ne 1 2 2\ne 2 3 -1/2\n");
  CHECK(serialize_graph(WeightedGraph(2)) == "cvgraph v1\nn 2\n");
}

TEST_CASE("parse after serialize is the identity on random graphs") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> size(1, 8);
  for (int i = 0; i < 500; ++i) {
    WeightedGraph g = random_graph(rng, size(rng));
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
}

TEST_CASE("serialize of a parse is canonical") {
  // Same graph written with shuffled edge order and unreduced weights.
  const std::string messy =
      "cvgraph v1\nn 4\n# comment\ne 2 4 4/8\ne 1 2 -2/1\ne 1 3 3\n";
  const std::string canonical = "cvgraph v1\nn 4\ne 1 2 -2\ne 1 3 3\ne 2 4 1/2\n";
  CHECK(serialize_graph(parse_graph(messy)) == canonical);
  CHECK(serialize_graph(parse_graph(canonical)) == canonical);
}

}  // TEST_SUITE
