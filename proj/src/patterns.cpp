#include "edgepow/patterns.hpp"

#include <algorithm>
#include <vector>

namespace edgepow {

namespace {

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out;
  for (int v : g.vertices()) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b) : a_(a), b_(b), order_(a.vertices().to_vector()) {}

  bool run() { return extend(0, VertexSet{}); }

 private:
  bool extend(std::size_t k, VertexSet used) {
    if (k == order_.size()) return true;
    const int u = order_[k];
    for (int w : b_.vertices() - used) {
      if (b_.degree(w) != a_.degree(u)) continue;
      bool consistent = true;
      for (std::size_t j = 0; j < k && consistent; ++j)
        consistent = a_.has_edge(order_[j], u) == b_.has_edge(image_[j], w);
      if (!consistent) continue;
      image_.push_back(w);
      if (extend(k + 1, used.with(w))) return true;
      image_.pop_back();
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<int> order_;
  std::vector<int> image_;
};

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return IsoSearch(a, b).run();
}

bool is_disjoint_edges(const Graph& g) {
  if (g.edge_count() == 0) return false;
  for (int v : g.vertices())
    if (g.degree(v) != 1) return false;
  return true;
}

bool is_p4(const Graph& g) {
  if (g.vertex_count() != 4 || g.edge_count() != 3) return false;
  return is_isomorphic(g, path_graph(4));
}

std::optional<int> complete_bipartite_balanced(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0 || n % 2 != 0) return std::nullopt;
  const int m = n / 2;
  if (g.edge_count() != m * m) return std::nullopt;
  for (int v : g.vertices())
    if (g.degree(v) != m) return std::nullopt;
  if (!is_isomorphic(g, complete_bipartite(m, m))) return std::nullopt;
  return m;
}

Graph complete_bipartite(int m, int k) {
  std::vector<Edge> edges;
  for (int u = 1; u <= m; ++u)
    for (int v = m + 1; v <= m + k; ++v) edges.emplace_back(u, v);
  return Graph(m + k, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  if (n >= 3) edges.emplace_back(1, n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph disjoint_edges(int m) {
  std::vector<Edge> edges;
  for (int k = 0; k < m; ++k) edges.emplace_back(2 * k + 1, 2 * k + 2);
  return Graph(2 * m, edges);
}

}  // namespace edgepow
