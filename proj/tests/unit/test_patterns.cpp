#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "edgepow/patterns.hpp"
#include "oracles.hpp"

using namespace edgepow;

namespace {
Graph permuted(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (Edge e : g.edges()) edges.emplace_back(perm[static_cast<std::size_t>(e.u - 1)], perm[static_cast<std::size_t>(e.v - 1)]);
  return Graph(g.vertex_count(), edges);
}
}  // namespace

TEST_CASE("builders") {
  CHECK(complete_bipartite(2, 3).edge_count() == 6);
  CHECK(path_graph(4) == Graph(4, {{1, 2}, {2, 3}, {3, 4}}));
  CHECK(cycle_graph(4).edge_count() == 4);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(disjoint_edges(3) == Graph(6, {{1, 2}, {3, 4}, {5, 6}}));
}

TEST_CASE("disjoint edges matcher") {
  CHECK(is_disjoint_edges(disjoint_edges(1)));
  CHECK(is_disjoint_edges(Graph(4, {{1, 3}, {2, 4}})));
  CHECK_FALSE(is_disjoint_edges(path_graph(3)));
  CHECK_FALSE(is_disjoint_edges(Graph(3, {{1, 2}})));
  CHECK_FALSE(is_disjoint_edges(Graph()));
}

TEST_CASE("P4 matcher") {
  CHECK(is_p4(path_graph(4)));
  CHECK(is_p4(Graph(4, {{2, 4}, {4, 1}, {1, 3}})));
  CHECK_FALSE(is_p4(Graph(4, {{1, 2}, {1, 3}, {1, 4}})));
  CHECK_FALSE(is_p4(cycle_graph(4)));
  CHECK_FALSE(is_p4(path_graph(5)));
  CHECK_FALSE(is_p4(Graph(5, {{1, 2}, {2, 3}, {3, 4}})));
}

TEST_CASE("balanced complete bipartite matcher") {
  CHECK(complete_bipartite_balanced(cycle_graph(4)) == 2);
  CHECK(complete_bipartite_balanced(complete_bipartite(3, 3)) == 3);
  CHECK(complete_bipartite_balanced(disjoint_edges(1)) == 1);
  CHECK_FALSE(complete_bipartite_balanced(complete_bipartite(2, 3)));
  CHECK_FALSE(complete_bipartite_balanced(cycle_graph(6)));
  CHECK_FALSE(complete_bipartite_balanced(disjoint_edges(2)));
  // 3-regular on 6 vertices but the prism, not K_{3,3}
  CHECK_FALSE(complete_bipartite_balanced(Graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {2, 5}, {3, 6}})));
}

TEST_CASE("matchers ignore vertex labels") {
  const std::vector<Graph> samples{path_graph(4), cycle_graph(4), complete_bipartite(3, 3), disjoint_edges(3),
                                   complete_bipartite(1, 3), cycle_graph(6)};
  for (const Graph& g : samples) {
    std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      const Graph h = permuted(g, perm);
      CHECK(is_isomorphic(g, h));
      CHECK(is_p4(h) == is_p4(g));
      CHECK(is_disjoint_edges(h) == is_disjoint_edges(g));
      CHECK(complete_bipartite_balanced(h) == complete_bipartite_balanced(g));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("isomorphism against permutation search") {
  // brute force over all relabelings for every pair of 4-vertex graphs
  const auto all = enumerate_graphs(4, false);
  std::vector<int> perm{1, 2, 3, 4};
  for (std::size_t i = 0; i < all.size(); i += 3)
    for (std::size_t j = 0; j < all.size(); j += 5) {
      bool expected = false;
      std::sort(perm.begin(), perm.end());
      do expected = expected || permuted(all[i], perm) == all[j];
      while (!expected && std::next_permutation(perm.begin(), perm.end()));
      CHECK(is_isomorphic(all[i], all[j]) == expected);
    }
}
