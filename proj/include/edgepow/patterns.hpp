#pragma once

#include <optional>

#include "edgepow/graph.hpp"

namespace edgepow {

/// Brute-force isomorphism test with a degree-sequence precheck and
/// backtracking over vertex images. Meant for graphs of at most ~10 vertices.
bool is_isomorphic(const Graph& a, const Graph& b);

/// At least one edge and every vertex has degree exactly 1.
bool is_disjoint_edges(const Graph& g);

/// Isomorphic to the path 1-2-3-4.
bool is_p4(const Graph& g);

/// m if g is isomorphic to K_{m,m}, m >= 1.
std::optional<int> complete_bipartite_balanced(const Graph& g);

/// Graph on 1..2m with parts {1..m} and {m+1..2m}.
Graph complete_bipartite(int m, int k);
/// Path 1-2-...-n.
Graph path_graph(int n);
/// Cycle 1-2-...-n-1.
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Edges {1,2}, {3,4}, ..., {2m-1,2m}.
Graph disjoint_edges(int m);

}  // namespace edgepow
