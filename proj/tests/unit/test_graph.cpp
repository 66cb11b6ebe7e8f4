#include <doctest.h>

#include "edgepow/graph.hpp"
#include "edgepow/patterns.hpp"
#include "oracles.hpp"

using namespace edgepow;

namespace {
const Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
const Graph p4(4, {{1, 2}, {2, 3}, {3, 4}});
const Graph k3(3, {{1, 2}, {2, 3}, {1, 3}});
const Graph two_edges(4, {{1, 2}, {3, 4}});
const Graph cherry(3, {{1, 2}, {1, 3}});
}  // namespace

TEST_CASE("neighbors") {
  CHECK(c4.neighbors(1) == VertexSet{2, 4});
  CHECK(Graph(5).neighbors(3).empty());
  CHECK(complete_graph(4).neighbors(3) == VertexSet{1, 2, 4});
  CHECK_THROWS_AS((void)c4.neighbors(7), std::out_of_range);
}

TEST_CASE("graph construction rejects loops and bad labels") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), std::invalid_argument);
  CHECK(Graph(3, {{1, 2}, {2, 1}}).edge_count() == 1);
}

TEST_CASE("maximal independent sets") {
  CHECK(maximal_independent_sets(c4) == std::vector<VertexSet>{{1, 3}, {2, 4}});
  CHECK(maximal_independent_sets(Graph(2, {{1, 2}})) == std::vector<VertexSet>{{1}, {2}});
  CHECK(maximal_independent_sets(p4) == std::vector<VertexSet>{{1, 3}, {1, 4}, {2, 4}});
  CHECK(maximal_independent_sets(Graph()) == std::vector<VertexSet>{VertexSet{}});
}

TEST_CASE("maximal independent sets match subset enumeration") {
  for (int n = 1; n <= 6; ++n)
    for_each_graph(n, false, [](const Graph& g) {
      REQUIRE(maximal_independent_sets(g) == oracle::maximal_independent_sets(g));
    });
}

TEST_CASE("alpha") {
  CHECK(alpha(c4) == 2);
  for (int m = 1; m <= 4; ++m) CHECK(alpha(complete_bipartite(m, m)) == m);
  CHECK(alpha(Graph()) == 0);
}

TEST_CASE("localizations") {
  CHECK(localize_edge(k3, 1, 2).vertex_count() == 0);
  const Graph p = localize_edge(p4, 1, 2);
  CHECK(p.vertices() == VertexSet{4});
  CHECK(p.edge_count() == 0);
  const Graph d = localize_edge(two_edges, 1, 2);
  CHECK(d.vertices() == VertexSet{3, 4});
  CHECK(d.has_edge(3, 4));
  CHECK_THROWS_AS(localize_edge(p4, 1, 3), std::invalid_argument);

  CHECK(localize_vertex(c4, 1).vertices() == VertexSet{3});
  CHECK(localize_vertex(p4, 2).vertices() == VertexSet{4});
  for (int m = 2; m <= 4; ++m) {
    const Graph k = complete_bipartite(m, m);
    const Graph l = localize_vertex(k, 1);
    CHECK(l.vertices() == VertexSet::range(2, m));
    CHECK(l.edge_count() == 0);
  }
  CHECK_THROWS_AS(localize_vertex(c4, 9), std::out_of_range);
}

TEST_CASE("unmixed and triangles") {
  CHECK(is_unmixed(c4));
  CHECK(is_unmixed(p4));
  CHECK_FALSE(is_unmixed(cherry));
  CHECK(has_triangle(k3));
  CHECK_FALSE(has_triangle(c4));
  CHECK_FALSE(has_triangle(complete_bipartite(3, 3)));
}

TEST_CASE("bipartition") {
  const auto b = bipartition(c4);
  REQUIRE(b);
  CHECK(b->first == VertexSet{1, 3});
  CHECK(b->second == VertexSet{2, 4});
  CHECK_FALSE(bipartition(k3));
  const auto d = bipartition(two_edges);
  REQUIRE(d);
  CHECK(d->first == VertexSet{1, 3});
  CHECK(d->second == VertexSet{2, 4});
}

TEST_CASE("herzog hibi examples") {
  CHECK(is_herzog_hibi(two_edges));
  CHECK(is_herzog_hibi(p4));
  CHECK_FALSE(is_herzog_hibi(c4));
  CHECK_THROWS_AS(is_herzog_hibi(k3), std::invalid_argument);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_graphs(1, false).size() == 1);
  CHECK(enumerate_graphs(3, false).size() == 8);
  CHECK(enumerate_graphs(4, true).size() == 41);
  CHECK(enumerate_graphs(5, true).size() == 376);
  CHECK_THROWS_AS(enumerate_graphs(9, false), std::invalid_argument);
  CHECK(enumerate_graphs(0, false).size() == 1);
}

TEST_CASE("bipartite filter agrees with an odd-cycle oracle") {
  // reference: try every 2-colouring
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, false)) {
      bool two_colourable = false;
      for (VertexSet x : oracle::subsets(g.vertices())) {
        bool ok = true;
        for (Edge e : g.edges()) ok = ok && (x.contains(e.u) != x.contains(e.v));
        if (ok) two_colourable = true;
      }
      CHECK(bipartition(g).has_value() == two_colourable);
    }
}
