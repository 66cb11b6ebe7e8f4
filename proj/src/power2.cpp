#include "edgepow/power2.hpp"

#include <algorithm>
#include <unordered_map>

#include "edgepow/homology.hpp"
#include "edgepow/ringprops.hpp"

namespace edgepow {

namespace {

const std::string kRouteSpecial = "special-cm";
const std::string kRouteStarUnion = "star-union";
const std::string kRouteDeltaV = "delta-v-oracle";
const std::string kRouteLinks = "cm-and-vertex-localizations";
const std::string kRouteUnmixedLinks = "unmixed-and-vertex-localizations";

std::optional<VertexSet> find_triangle(const Graph& g, VertexSet s) {
  for (int p : s)
    for (int q : g.adjacency(p) & s) {
      if (q <= p) continue;
      const VertexSet common = g.adjacency(p) & g.adjacency(q) & s;
      for (int r : common)
        if (r > q) return VertexSet{p, q, r};
    }
  return std::nullopt;
}

Verdict failure(Witness w, std::vector<std::string> routes) {
  return Verdict{false, std::move(w), std::move(routes)};
}

Witness face_witness(const ReisnerCheck& check, std::string clause) {
  Witness w;
  w.kind = Witness::Kind::Face;
  w.set = check.face;
  w.clause = std::move(clause);
  w.detail = check.describe();
  return w;
}

Witness edge_witness(int p, int q, std::string clause, std::string detail) {
  Witness w;
  w.kind = Witness::Kind::Edge;
  w.edge = Edge(p, q);
  w.clause = std::move(clause);
  w.detail = std::move(detail);
  return w;
}

// Every localization in the criteria is an induced subgraph, so results
// are cached per vertex subset of the one graph under study.
class Evaluator {
 public:
  Evaluator(const Graph& g, FieldSpec field) : g_(g), field_(field) {}

  const Graph& graph() const { return g_; }
  FieldSpec field() const { return field_; }
  VertexSet all() const { return g_.vertices(); }

  const SimplicialComplex& delta(VertexSet s) {
    auto it = delta_.find(s.bits());
    if (it == delta_.end()) it = delta_.emplace(s.bits(), independence_complex(g_.induced(s))).first;
    return it->second;
  }

  int alpha(VertexSet s) { return delta(s).dim() + 1; }

  const ReisnerCheck& cm(VertexSet s) {
    auto it = cm_.find(s.bits());
    if (it == cm_.end()) it = cm_.emplace(s.bits(), check_cm(delta(s), field_)).first;
    return it->second;
  }

  // G[s] minus the closed neighborhoods of p and q
  VertexSet edge_localization(VertexSet s, int p, int q) const {
    return s - (g_.adjacency(p) | g_.adjacency(q)).with(p).with(q);
  }
  VertexSet vertex_localization(VertexSet s, int i) const { return s - g_.adjacency(i).with(i); }

  Verdict special(VertexSet s, bool include_delta) {
    auto& memo = include_delta ? special_ : special_edges_;
    if (auto it = memo.find(s.bits()); it != memo.end()) return it->second;
    Verdict v = compute_special(s, include_delta);
    memo.emplace(s.bits(), v);
    return v;
  }

  Verdict star_union_route(VertexSet s) {
    const std::vector<std::string> routes{kRouteStarUnion};
    if (const auto& c = cm(s); !c.holds) return failure(face_witness(c, "delta-not-cm"), routes);
    const SimplicialComplex& d = delta(s);
    for (int p : s)
      for (int q : g_.adjacency(p) & s) {
        if (q <= p) continue;
        const ReisnerCheck c = check_cm(union_of(star(d, VertexSet{p}), star(d, VertexSet{q})), field_);
        if (!c.holds) return failure(edge_witness(p, q, "star-union-not-cm", c.describe()), routes);
      }
    return Verdict{true, {}, routes};
  }

  Verdict delta_v_route(VertexSet s) {
    const std::vector<std::string> routes{kRouteDeltaV};
    if (const auto& c = cm(s); !c.holds) return failure(face_witness(c, "delta-not-cm"), routes);
    const SimplicialComplex& d = delta(s);
    const int top = d.dim() + 1;
    for (int size = 2; size <= top; ++size) {
      const std::uint64_t full = s.bits();
      for (std::uint64_t sub = 0;;) {
        sub = (sub - full) & full;  // next submask in increasing order
        if (sub == 0) break;
        const VertexSet v(sub);
        if (v.size() != size) continue;
        const ReisnerCheck c = check_cm(delta_v(d, v), field_);
        if (!c.holds) {
          Witness w;
          w.kind = Witness::Kind::Face;
          w.set = v;
          w.clause = "delta-v-not-cm";
          w.detail = "Delta_V for V = " + v.to_string() + ": " + c.describe();
          return failure(std::move(w), routes);
        }
      }
    }
    return Verdict{true, {}, routes};
  }

  Verdict unmixed() {
    const SimplicialComplex& d = delta(all());
    const std::vector<std::string> routes{"maximal-independent-sets"};
    if (d.is_pure()) return Verdict{true, {}, routes};
    const int top = d.dim() + 1;
    Witness w;
    w.kind = Witness::Kind::Face;
    w.clause = "not-unmixed";
    for (VertexSet f : d.facets())
      if (f.size() < top) {
        w.set = f;
        w.detail = "maximal independent set " + f.to_string() + " has size " + std::to_string(f.size()) +
                   " < alpha = " + std::to_string(top);
        break;
      }
    return failure(std::move(w), routes);
  }

  // every G_i special CM (and triangle-free when asked)
  Verdict vertex_localizations(bool triangle_free, const std::vector<std::string>& routes) {
    for (int i : all()) {
      const VertexSet si = vertex_localization(all(), i);
      const Verdict inner = special(si, true);
      if (!inner.value) {
        Witness w;
        w.kind = Witness::Kind::Vertex;
        w.vertex = i;
        w.set = si;
        w.clause = "localization-not-special-cm";
        w.detail = "G_" + std::to_string(i) + ": " + inner.witness.clause + " " + inner.witness.detail;
        return failure(std::move(w), routes);
      }
      if (triangle_free) {
        if (const auto t = find_triangle(g_, si)) {
          Witness w;
          w.kind = Witness::Kind::Vertex;
          w.vertex = i;
          w.set = *t;
          w.clause = "localization-has-triangle";
          w.detail = "G_" + std::to_string(i) + " contains the triangle " + t->to_string();
          return failure(std::move(w), routes);
        }
      }
    }
    return Verdict{true, {}, routes};
  }

  Verdict gcm(bool triangle_free) {
    const std::vector<std::string> routes{kRouteUnmixedLinks};
    if (Verdict u = unmixed(); !u.value) return failure(std::move(u.witness), routes);
    return vertex_localizations(triangle_free, routes);
  }

  Verdict buchsbaum(bool triangle_free) {
    const std::vector<std::string> routes{kRouteLinks};
    if (const auto& c = cm(all()); !c.holds) return failure(face_witness(c, "delta-not-cm"), routes);
    return vertex_localizations(triangle_free, routes);
  }

  SymbolicCmRoutes routes() {
    SymbolicCmRoutes r;
    r.special = special(all(), true);
    r.special.routes = {kRouteSpecial};
    r.star_union = star_union_route(all());
    r.delta_v = delta_v_route(all());
    return r;
  }

  Verdict symbolic_cm(RouteSelection selection) {
    if (selection == RouteSelection::Fast) {
      Verdict v = special(all(), true);
      v.routes = {kRouteSpecial};
      return v;
    }
    const SymbolicCmRoutes r = routes();
    if (!r.agree())
      throw RouteDisagreement("routes disagree on " + g_.describe() + ": special-cm=" +
                              (r.special.value ? "true" : "false") +
                              " star-union=" + (r.star_union.value ? "true" : "false") +
                              " delta-v-oracle=" + (r.delta_v.value ? "true" : "false"));
    Verdict v = r.special;
    v.routes = {kRouteSpecial, kRouteStarUnion, kRouteDeltaV};
    return v;
  }

  Verdict ordinary_cm() {
    Verdict v = special(all(), true);
    v.routes = {"special-cm-and-triangle-free"};
    if (!v.value) return v;
    if (const auto t = find_triangle(g_, all())) {
      Witness w;
      w.kind = Witness::Kind::Face;
      w.set = *t;
      w.clause = "triangle";
      w.detail = "G contains the triangle " + t->to_string();
      return failure(std::move(w), v.routes);
    }
    return v;
  }

 private:
  Verdict compute_special(VertexSet s, bool include_delta) {
    const std::vector<std::string> routes{include_delta ? "special-cm" : "special-cm-edges-only"};
    if (include_delta)
      if (const auto& c = cm(s); !c.holds) return failure(face_witness(c, "delta-not-cm"), routes);
    const int a = alpha(s);
    for (int p : s)
      for (int q : g_.adjacency(p) & s) {
        if (q <= p) continue;
        const VertexSet t = edge_localization(s, p, q);
        const int at = alpha(t);
        if (at != a - 1)
          return failure(edge_witness(p, q, "alpha-drop",
                                      "alpha(G_pq) = " + std::to_string(at) + ", alpha(G) - 1 = " +
                                          std::to_string(a - 1)),
                         routes);
        if (const auto& c = cm(t); !c.holds)
          return failure(edge_witness(p, q, "localization-not-cm", "G_pq: " + c.describe()), routes);
      }
    return Verdict{true, {}, routes};
  }

  const Graph& g_;
  FieldSpec field_;
  std::unordered_map<std::uint64_t, SimplicialComplex> delta_;
  std::unordered_map<std::uint64_t, ReisnerCheck> cm_;
  std::unordered_map<std::uint64_t, Verdict> special_;
  std::unordered_map<std::uint64_t, Verdict> special_edges_;
};

}  // namespace

Verdict special_cm(const Graph& g, FieldSpec field) { return Evaluator(g, field).special(g.vertices(), true); }

bool is_special_cm(const Graph& g, FieldSpec field) { return special_cm(g, field).value; }

Verdict special_cm_edges_only(const Graph& g, FieldSpec field) {
  return Evaluator(g, field).special(g.vertices(), false);
}

SymbolicCmRoutes symbolic2_cm_routes(const Graph& g, FieldSpec field) { return Evaluator(g, field).routes(); }

Verdict symbolic2_cm(const Graph& g, FieldSpec field, RouteSelection routes) {
  return Evaluator(g, field).symbolic_cm(routes);
}

Verdict ordinary2_cm(const Graph& g, FieldSpec field) { return Evaluator(g, field).ordinary_cm(); }

Verdict symbolic2_gcm(const Graph& g, FieldSpec field) { return Evaluator(g, field).gcm(false); }

Verdict ordinary2_gcm(const Graph& g, FieldSpec field) { return Evaluator(g, field).gcm(true); }

Verdict symbolic2_buchsbaum(const Graph& g, FieldSpec field) { return Evaluator(g, field).buchsbaum(false); }

Verdict ordinary2_buchsbaum(const Graph& g, FieldSpec field) { return Evaluator(g, field).buchsbaum(true); }

MonomialIdeal symbolic_square(const Graph& g) {
  if (g.vertices().empty()) throw std::invalid_argument("symbolic_square: graph has no vertices");
  const SimplicialComplex d = independence_complex(g);
  std::vector<Component> components;
  for (VertexSet f : d.facets()) components.push_back({f, 2});
  return MonomialIdeal::from_components(g.vertices().max(), std::move(components));
}

std::int64_t TakayamaTable::at(int i, const DegreeVector& a) const {
  for (const TakayamaEntry& e : entries)
    if (e.i == i && e.a == a) return e.dimension;
  throw std::out_of_range("TakayamaTable: entry (" + std::to_string(i) + ", " + a.to_string() + ") not computed");
}

TakayamaTable takayama_table(const MonomialIdeal& ideal, const std::vector<DegreeVector>& degrees, int i_min,
                             int i_max, FieldSpec field) {
  if (field.kind() == FieldSpec::Kind::AllFields)
    throw std::invalid_argument("takayama_table: choose a single characteristic");
  const int n = ideal.variable_count();
  const std::vector<int>& rho = ideal.rho();
  const SimplicialComplex radical = ideal.radical_complex();
  const bool components = ideal.form() == MonomialIdeal::Form::Components;
  const bool facet_route_ok = components && ideal.is_unmixed();
  std::optional<MonomialIdeal> generator_form;
  if (!components) generator_form = ideal;

  TakayamaTable table;
  table.field = field;
  for (const DegreeVector& a : degrees) {
    if (a.size() != n) throw std::invalid_argument("takayama_table: degree has wrong length");
    const VertexSet ga = a.negative_support();
    bool zero = !radical.contains_face(ga);
    for (int j = 0; j < n && !zero; ++j)
      if (a.values()[static_cast<std::size_t>(j)] >= rho[static_cast<std::size_t>(j)]) zero = true;
    BettiNumbers b;
    if (!zero) {
      SimplicialComplex da;
      if (facet_route_ok && a.is_nonnegative()) {
        da = degree_complex(ideal, a);
      } else {
        if (!generator_form) generator_form = minimal_generators_of_components(ideal, ideal.max_exponent());
        da = degree_complex(*generator_form, a);
      }
      b = betti(da, field);
    }
    for (int i = i_min; i <= i_max; ++i)
      table.entries.push_back({i, a, zero ? 0 : b[i - ga.size() - 1]});
  }
  return table;
}

Main2Support verify_main2_support(const Graph& g, FieldSpec field) {
  if (field.kind() == FieldSpec::Kind::AllFields)
    throw std::invalid_argument("verify_main2_support: choose a single characteristic");
  if (!symbolic2_gcm(g, field).value)
    throw std::invalid_argument("verify_main2_support: S/I(G)^(2) is not generalized Cohen-Macaulay");
  Main2Support out;
  if (g.vertices().empty()) return out;
  const MonomialIdeal ideal = symbolic_square(g);
  const int n = ideal.variable_count();
  std::vector<DegreeVector> degrees;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
    degrees.push_back(DegreeVector::indicator(n, VertexSet(bits << 1)));
  const TakayamaTable table = takayama_table(ideal, degrees, 0, alpha(g) - 1, field);
  for (const TakayamaEntry& e : table.entries) {
    if (e.dimension == 0) continue;
    const VertexSet support = e.a.positive_support();
    const bool allowed = support.size() <= 1 || (support.size() == 2 && g.has_edge(support.min(), support.max()));
    if (!allowed) {
      out.holds = false;
      out.violation = e;
      return out;
    }
  }
  return out;
}

std::vector<std::string> ClassificationReport::implication_violations() const {
  static const std::vector<std::pair<std::string, std::string>> chain{
      {"delta_cm", "delta_buchsbaum"},
      {"delta_buchsbaum", "unmixed"},
      {"special_cm", "special_cm_edges_only"},
      {"special_cm", "delta_cm"},
      {"symbolic2_cm", "symbolic2_buchsbaum"},
      {"symbolic2_buchsbaum", "symbolic2_gcm"},
      {"ordinary2_cm", "ordinary2_buchsbaum"},
      {"ordinary2_buchsbaum", "ordinary2_gcm"},
      {"ordinary2_cm", "symbolic2_cm"},
      {"ordinary2_buchsbaum", "symbolic2_buchsbaum"},
      {"ordinary2_gcm", "symbolic2_gcm"},
      {"symbolic2_gcm", "delta_buchsbaum"},
  };
  std::vector<std::string> out;
  for (const auto& [from, to] : chain) {
    const auto a = properties.find(from);
    const auto b = properties.find(to);
    if (a == properties.end() || b == properties.end()) continue;
    if (a->second.value && !b->second.value) out.push_back(from + " holds but " + to + " fails");
  }
  return out;
}

ClassificationReport classify(const Graph& g, const ClassifyOptions& options) {
  if (!options.allow_isolated && !g.isolated_vertices().empty())
    throw IsolatedVerticesError("graph has isolated vertices " + g.isolated_vertices().to_string());
  Evaluator ev(g, options.field);
  ClassificationReport r;
  r.graph = g;
  r.field = options.field;
  auto& p = r.properties;

  const ReisnerCheck& cm = ev.cm(g.vertices());
  p["delta_cm"] = cm.holds ? Verdict{true, {}, {"reisner"}} : failure(face_witness(cm, cm.pure ? "link-homology" : "not-pure"), {"reisner"});
  const ReisnerCheck bb = check_buchsbaum(ev.delta(g.vertices()), options.field);
  p["delta_buchsbaum"] =
      bb.holds ? Verdict{true, {}, {"vertex-links-cm"}}
               : failure(face_witness(bb, bb.pure ? "link-homology" : "not-pure"), {"vertex-links-cm"});
  p["unmixed"] = ev.unmixed();
  p["special_cm"] = ev.special(g.vertices(), true);
  p["special_cm_edges_only"] = ev.special(g.vertices(), false);
  p["symbolic2_cm"] = ev.symbolic_cm(options.routes);
  p["ordinary2_cm"] = ev.ordinary_cm();
  p["symbolic2_buchsbaum"] = ev.buchsbaum(false);
  p["ordinary2_buchsbaum"] = ev.buchsbaum(true);
  p["symbolic2_gcm"] = ev.gcm(false);
  p["ordinary2_gcm"] = ev.gcm(true);

  if (p["special_cm"].value != p["special_cm_edges_only"].value)
    r.notes.push_back("special_cm and special_cm_edges_only differ: the clause on Delta(G) matters here");
  for (const std::string& v : r.implication_violations()) r.notes.push_back("implication violated: " + v);
  return r;
}

}  // namespace edgepow
