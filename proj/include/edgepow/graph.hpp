#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgepow/vertex_set.hpp"

namespace edgepow {

struct Edge {
  int u = 0;
  int v = 0;
  Edge() = default;
  /// Normalizes so that u < v.
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

/// Finite simple graph on a set of labeled vertices.
///
/// Graphs built from a vertex count use labels 1..n. Localizations keep the
/// labels of the surviving vertices, so the vertex set of a general Graph is
/// any subset of 1..63. Isolated vertices are allowed.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on 1..n.
  explicit Graph(int n);
  /// Graph on 1..n; throws std::invalid_argument on loops or out-of-range
  /// endpoints. Duplicate edges collapse.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
  /// Graph on an arbitrary vertex set.
  Graph(VertexSet vertices, std::span<const Edge> edges);

  [[nodiscard]] VertexSet vertices() const { return vertices_; }
  [[nodiscard]] int vertex_count() const { return vertices_.size(); }
  [[nodiscard]] int edge_count() const;
  [[nodiscard]] bool has_vertex(int v) const { return vertices_.contains(v); }
  [[nodiscard]] bool has_edge(int u, int v) const {
    return has_vertex(u) && adj_[static_cast<std::size_t>(u)].contains(v);
  }
  /// Edges in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const;

  /// N(u). Throws std::out_of_range if u is not a vertex.
  [[nodiscard]] VertexSet neighbors(int u) const;
  [[nodiscard]] int degree(int u) const { return neighbors(u).size(); }
  /// Vertices adjacent to at least one vertex of s.
  [[nodiscard]] VertexSet neighborhood(VertexSet s) const;
  [[nodiscard]] bool is_independent(VertexSet s) const;
  [[nodiscard]] VertexSet isolated_vertices() const;

  /// Induced subgraph on vertices() & keep.
  [[nodiscard]] Graph induced(VertexSet keep) const;
  /// G \ U.
  [[nodiscard]] Graph remove(VertexSet drop) const { return induced(vertices_ - drop); }

  /// Unchecked adjacency row; u must be a vertex.
  [[nodiscard]] VertexSet adjacency(int u) const { return adj_[static_cast<std::size_t>(u)]; }

  bool operator==(const Graph& other) const;

  /// "n 4 | 1-2 2-3" style one-liner for diagnostics.
  [[nodiscard]] std::string describe() const;

 private:
  void add_edge(int u, int v);

  VertexSet vertices_;
  std::array<VertexSet, VertexSet::kMaxLabel + 1> adj_{};
};

/// Inclusion-maximal independent sets in lexicographic order. The graph
/// with no vertices yields the single empty set.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

/// Size of the largest independent set; 0 for the graph with no vertices.
int alpha(const Graph& g);

/// G_pq = G \ (N(p) u N(q)). Throws std::invalid_argument unless pq is an edge.
Graph localize_edge(const Graph& g, int p, int q);

/// G_i = G \ ({i} u N(i)). Throws std::out_of_range unless i is a vertex.
Graph localize_vertex(const Graph& g, int i);

/// All maximal independent sets have the same size.
bool is_unmixed(const Graph& g);

bool has_triangle(const Graph& g);

using Bipartition = std::pair<VertexSet, VertexSet>;

/// 2-coloring with the lowest vertex of every component placed in the first part.
std::optional<Bipartition> bipartition(const Graph& g);

/// Connected components as vertex sets, ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

/// The combinatorial Cohen-Macaulay test for bipartite graphs: after
/// dropping isolated vertices (cone points of the independence complex), a
/// perfect matching x_i y_i must exist whose induced order relation
/// "x_a y_b is an edge" on matched pairs is acyclic and transitive.
/// Throws std::invalid_argument on non-bipartite input.
bool is_herzog_hibi(const Graph& g);

inline constexpr int kDefaultEnumerationCap = 8;

/// Visits every labeled simple graph on exactly 1..n (optionally only the
/// bipartite ones) once, in a fixed order. Throws std::invalid_argument if
/// n exceeds cap or is negative.
void for_each_graph(int n, bool bipartite_only, const std::function<void(const Graph&)>& visit,
                    int cap = kDefaultEnumerationCap);

/// Materialized form of for_each_graph.
std::vector<Graph> enumerate_graphs(int n, bool bipartite_only, int cap = kDefaultEnumerationCap);

}  // namespace edgepow
