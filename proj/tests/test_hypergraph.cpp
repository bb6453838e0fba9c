#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "hyperlag/hypergraph.hpp"

using hyperlag::Hypergraph;

TEST_CASE("edges are sorted and canonicalized on construction") {
  const Hypergraph g(3, 5, {{3, 1, 2}, {5, 4, 1}});
  REQUIRE(g.edge_count() == 2);
  const auto e0 = g.edge(0);
  CHECK(e0[0] == 0);
  CHECK(e0[1] == 1);
  CHECK(e0[2] == 2);
  const auto e1 = g.edge(1);
  CHECK(e1[0] == 0);
  CHECK(e1[1] == 3);
  CHECK(e1[2] == 4);
}

TEST_CASE("toy graph shape and degrees") {
  const auto g = fixtures::toy_graph();
  CHECK(g.order() == 3);
  CHECK(g.vertex_count() == 12);
  CHECK(g.edge_count() == 13);

  const auto d = g.degrees();
  std::int64_t total = 0;
  for (int j = 0; j < 12; ++j) {
    total += d[static_cast<std::size_t>(j)];
    // Vertices 4, 8, 12 carry the bridge edge on top of their clique.
    const bool bridge = (j == 3 || j == 7 || j == 11);
    CHECK(d[static_cast<std::size_t>(j)] == (bridge ? 4 : 3));
  }
  CHECK(total == 13 * 3);
}

TEST_CASE("construction rejects malformed input") {
  CHECK_THROWS_AS(Hypergraph(3, 4, {{1, 2}}), hyperlag::EdgeArityError);
  CHECK_THROWS_AS(Hypergraph(3, 4, {{1, 2, 3, 4}}), hyperlag::EdgeArityError);
  CHECK_THROWS_AS(Hypergraph(3, 4, {{1, 2, 5}}),
                  hyperlag::VertexOutOfRangeError);
  CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1, 2}}),
                  hyperlag::VertexOutOfRangeError);
  CHECK_THROWS_AS(Hypergraph(3, 4, {{1, 2, 2}}), hyperlag::RepeatedVertexError);
  CHECK_THROWS_AS(Hypergraph(3, 4, {{1, 2, 3}, {3, 2, 1}}),
                  hyperlag::DuplicateEdgeError);
  CHECK_THROWS_AS(Hypergraph(1, 4, {}), hyperlag::HypergraphError);
  CHECK_THROWS_AS(Hypergraph(3, 0, {}), hyperlag::HypergraphError);
}

TEST_CASE("empty edge set is legal") {
  const Hypergraph g(3, 5, {});
  CHECK(g.edge_count() == 0);
  CHECK(g.degrees() == std::vector<std::int64_t>(5, 0));
  CHECK_NOTHROW(g.revalidate());
}

TEST_CASE("equality ignores the vertex order inside an edge") {
  const Hypergraph a(3, 5, {{1, 2, 3}});
  const Hypergraph b(3, 5, {{3, 2, 1}});
  const Hypergraph c(3, 6, {{1, 2, 3}});
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("trusted matches the validating constructor") {
  const Hypergraph a(3, 5, {{1, 2, 3}, {2, 3, 5}});
  const Hypergraph b = Hypergraph::trusted(3, 5, {0, 1, 2, 1, 2, 4});
  CHECK(a == b);
  CHECK_NOTHROW(b.revalidate());
}

TEST_CASE("revalidate catches a corrupted trusted graph") {
  const Hypergraph g = Hypergraph::trusted(3, 4, {0, 1, 1});
  CHECK_THROWS_AS(g.revalidate(), hyperlag::RepeatedVertexError);
}
