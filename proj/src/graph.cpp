#include "edgepow/graph.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace edgepow {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

std::ostream& operator<<(std::ostream& os, VertexSet s) { return os << s.to_string(); }

Graph::Graph(int n) {
  if (n < 0 || n > VertexSet::kMaxLabel)
    throw std::invalid_argument("vertex count " + std::to_string(n) + " out of range");
  vertices_ = VertexSet::range(1, n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(VertexSet vertices, std::span<const Edge> edges) : vertices_(vertices) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if (!vertices_.contains(u) || !vertices_.contains(v))
    throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                " has an endpoint outside the vertex set");
  adj_[static_cast<std::size_t>(u)].insert(v);
  adj_[static_cast<std::size_t>(v)].insert(u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v : vertices_) twice += adj_[static_cast<std::size_t>(v)].size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u : vertices_)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::neighbors(int u) const {
  if (!vertices_.contains(u))
    throw std::out_of_range("vertex " + std::to_string(u) + " is not in the graph");
  return adj_[static_cast<std::size_t>(u)];
}

VertexSet Graph::neighborhood(VertexSet s) const {
  VertexSet out;
  for (int v : s & vertices_) out |= adj_[static_cast<std::size_t>(v)];
  return out;
}

bool Graph::is_independent(VertexSet s) const {
  for (int v : s)
    if (adj_[static_cast<std::size_t>(v)].intersects(s)) return false;
  return true;
}

VertexSet Graph::isolated_vertices() const {
  VertexSet out;
  for (int v : vertices_)
    if (adj_[static_cast<std::size_t>(v)].empty()) out.insert(v);
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  Graph h;
  h.vertices_ = vertices_ & keep;
  for (int v : h.vertices_) h.adj_[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)] & h.vertices_;
  return h;
}

bool Graph::operator==(const Graph& other) const {
  if (vertices_ != other.vertices_) return false;
  for (int v : vertices_)
    if (adj_[static_cast<std::size_t>(v)] != other.adj_[static_cast<std::size_t>(v)]) return false;
  return true;
}

std::string Graph::describe() const {
  std::ostringstream os;
  os << "V=" << vertices_ << " E={";
  bool first = true;
  for (const Edge& e : edges()) {
    if (!first) os << ',';
    os << e.u << e.v;
    first = false;
  }
  os << '}';
  return os.str();
}

namespace {

// Bron-Kerbosch with pivoting on the complement graph: cliques of the
// complement are the independent sets of g.
void collect_maximal_independent(const Graph& g, VertexSet chosen, VertexSet candidates,
                                 VertexSet excluded, std::vector<VertexSet>& out) {
  if (candidates.empty() && excluded.empty()) {
    out.push_back(chosen);
    return;
  }
  const VertexSet all = g.vertices();
  auto non_neighbors = [&](int v) { return (all - g.adjacency(v)).without(v); };

  int pivot = 0;
  int best = -1;
  for (int u : candidates | excluded) {
    const int score = (candidates & non_neighbors(u)).size();
    if (score > best) {
      best = score;
      pivot = u;
    }
  }
  for (int v : candidates - non_neighbors(pivot)) {
    const VertexSet nv = non_neighbors(v);
    collect_maximal_independent(g, chosen.with(v), candidates & nv, excluded & nv, out);
    candidates.erase(v);
    excluded.insert(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  collect_maximal_independent(g, VertexSet{}, g.vertices(), VertexSet{}, out);
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

int alpha(const Graph& g) {
  int best = 0;
  for (VertexSet s : maximal_independent_sets(g)) best = std::max(best, s.size());
  return best;
}

Graph localize_edge(const Graph& g, int p, int q) {
  if (!g.has_edge(p, q))
    throw std::invalid_argument("localize_edge: " + std::to_string(p) + "-" + std::to_string(q) +
                                " is not an edge");
  return g.remove(g.neighbors(p) | g.neighbors(q));
}

Graph localize_vertex(const Graph& g, int i) {
  return g.remove(g.neighbors(i).with(i));
}

bool is_unmixed(const Graph& g) {
  const auto sets = maximal_independent_sets(g);
  return std::all_of(sets.begin(), sets.end(),
                     [&](VertexSet s) { return s.size() == sets.front().size(); });
}

bool has_triangle(const Graph& g) {
  for (const Edge& e : g.edges())
    if (g.adjacency(e.u).intersects(g.adjacency(e.v))) return true;
  return false;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet comp{left.min()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      frontier = g.neighborhood(frontier) - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  VertexSet first;
  VertexSet second;
  for (VertexSet comp : connected_components(g)) {
    VertexSet even{comp.min()};
    VertexSet odd;
    VertexSet frontier = even;
    bool parity_odd = false;
    while (!frontier.empty()) {
      VertexSet next = g.neighborhood(frontier) - even - odd;
      parity_odd = !parity_odd;
      (parity_odd ? odd : even) |= next;
      frontier = next;
    }
    for (int v : even)
      if (g.adjacency(v).intersects(even)) return std::nullopt;
    for (int v : odd)
      if (g.adjacency(v).intersects(odd)) return std::nullopt;
    first |= even;
    second |= odd;
  }
  return Bipartition{first, second};
}

namespace {

struct MatchingSearch {
  const Graph& g;
  std::vector<int> xs;
  std::vector<int> partner;  // partner[k] = y matched to xs[k]

  bool order_is_valid() const {
    // pair index of each y
    std::array<int, VertexSet::kMaxLabel + 1> pair_of_y{};
    for (std::size_t k = 0; k < xs.size(); ++k) pair_of_y[static_cast<std::size_t>(partner[k])] = static_cast<int>(k);
    std::vector<std::uint64_t> succ(xs.size(), 0);
    for (std::size_t a = 0; a < xs.size(); ++a)
      for (int y : g.adjacency(xs[a])) {
        const int b = pair_of_y[static_cast<std::size_t>(y)];
        if (b != static_cast<int>(a)) succ[a] |= std::uint64_t{1} << b;
      }
    for (std::size_t a = 0; a < xs.size(); ++a)
      for (std::uint64_t rest = succ[a]; rest != 0; rest &= rest - 1) {
        const auto b = static_cast<std::size_t>(std::countr_zero(rest));
        if ((succ[b] >> a) & 1U) return false;                         // 2-cycle
        if ((succ[b] & ~succ[a] & ~(std::uint64_t{1} << a)) != 0) return false;  // not transitive
      }
    return true;
  }

  bool search(std::size_t k, VertexSet used) {
    if (k == xs.size()) return order_is_valid();
    for (int y : g.adjacency(xs[k]) - used) {
      partner[k] = y;
      if (search(k + 1, used.with(y))) return true;
    }
    return false;
  }
};

}  // namespace

bool is_herzog_hibi(const Graph& g) {
  const Graph core = g.remove(g.isolated_vertices());
  const auto parts = bipartition(core);
  if (!parts) throw std::invalid_argument("is_herzog_hibi: graph is not bipartite");
  if (parts->first.size() != parts->second.size()) return false;
  MatchingSearch s{core, parts->first.to_vector(), {}};
  s.partner.assign(s.xs.size(), 0);
  return s.search(0, VertexSet{});
}

namespace {

struct GraphEnumerator {
  int n;
  bool bipartite_only;
  const std::function<void(const Graph&)>& visit;
  std::vector<Edge> pairs;
  std::array<VertexSet, VertexSet::kMaxLabel + 1> adj{};

  // Would adding u-v close an odd cycle?
  bool closes_odd_cycle(int u, int v) const {
    VertexSet same{u};
    VertexSet other;
    VertexSet frontier = same;
    bool on_other = false;
    while (!frontier.empty()) {
      VertexSet next;
      for (int w : frontier) next |= adj[static_cast<std::size_t>(w)];
      next = next - same - other;
      on_other = !on_other;
      (on_other ? other : same) |= next;
      frontier = next;
    }
    return same.contains(v);
  }

  void emit() const {
    std::vector<Edge> chosen;
    for (const Edge& e : pairs)
      if (adj[static_cast<std::size_t>(e.u)].contains(e.v)) chosen.push_back(e);
    visit(Graph(n, chosen));
  }

  void run(std::size_t k) {
    if (k == pairs.size()) {
      emit();
      return;
    }
    run(k + 1);
    const Edge e = pairs[k];
    if (bipartite_only && closes_odd_cycle(e.u, e.v)) return;
    adj[static_cast<std::size_t>(e.u)].insert(e.v);
    adj[static_cast<std::size_t>(e.v)].insert(e.u);
    run(k + 1);
    adj[static_cast<std::size_t>(e.u)].erase(e.v);
    adj[static_cast<std::size_t>(e.v)].erase(e.u);
  }
};

}  // namespace

void for_each_graph(int n, bool bipartite_only, const std::function<void(const Graph&)>& visit,
                    int cap) {
  if (n < 0) throw std::invalid_argument("for_each_graph: negative vertex count");
  if (n > cap)
    throw std::invalid_argument("for_each_graph: n = " + std::to_string(n) +
                                " exceeds the enumeration cap " + std::to_string(cap));
  GraphEnumerator e{n, bipartite_only, visit, {}, {}};
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.pairs.emplace_back(u, v);
  e.run(0);
}

std::vector<Graph> enumerate_graphs(int n, bool bipartite_only, int cap) {
  std::vector<Graph> out;
  for_each_graph(n, bipartite_only, [&](const Graph& g) { out.push_back(g); }, cap);
  return out;
}

}  // namespace edgepow
