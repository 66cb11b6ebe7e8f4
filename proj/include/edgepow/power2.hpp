#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgepow/complex.hpp"
#include "edgepow/field_spec.hpp"
#include "edgepow/graph.hpp"
#include "edgepow/ideals.hpp"

namespace edgepow {

/// Evidence attached to a false verdict.
struct Witness {
  enum class Kind { None, Edge, Vertex, Face, Degree };

  Kind kind = Kind::None;
  std::optional<Edge> edge;
  std::optional<int> vertex;
  /// A face, a vertex set V, or a support, depending on the clause.
  std::optional<VertexSet> set;
  /// Short machine tag such as "not-unmixed" or "localization-not-cm".
  std::string clause;
  std::string detail;

  bool operator==(const Witness&) const = default;
};

struct Verdict {
  bool value = true;
  Witness witness;
  /// Names of the routes that computed the verdict.
  std::vector<std::string> routes;

  bool operator==(const Verdict&) const = default;
};

/// Thrown when two routes that must agree return different verdicts.
class RouteDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by the headline classification for graphs with isolated vertices.
class IsolatedVerticesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Delta(G) is CM and, for every edge pq, Delta(G_pq) is CM with
/// alpha(G_pq) = alpha(G) - 1. The empty and edgeless graphs qualify.
Verdict special_cm(const Graph& g, FieldSpec field = FieldSpec::all_fields());
bool is_special_cm(const Graph& g, FieldSpec field = FieldSpec::all_fields());

/// special_cm without the clause on Delta(G) itself.
Verdict special_cm_edges_only(const Graph& g, FieldSpec field = FieldSpec::all_fields());

enum class RouteSelection { All, Fast };

/// Verdict of each route for S/I(G)^(2) Cohen-Macaulay.
struct SymbolicCmRoutes {
  /// G special CM.
  Verdict special;
  /// Delta CM and st(p) u st(q) CM for every edge pq.
  Verdict star_union;
  /// Delta CM and Delta_V CM for every V with 2 <= |V| <= dim Delta + 1.
  Verdict delta_v;

  [[nodiscard]] bool agree() const {
    return special.value == star_union.value && star_union.value == delta_v.value;
  }
};

SymbolicCmRoutes symbolic2_cm_routes(const Graph& g, FieldSpec field = FieldSpec::all_fields());

/// S/I(G)^(2) Cohen-Macaulay. With RouteSelection::All every route runs and
/// RouteDisagreement is thrown if they differ; Fast uses special_cm alone.
Verdict symbolic2_cm(const Graph& g, FieldSpec field = FieldSpec::all_fields(),
                     RouteSelection routes = RouteSelection::All);

/// S/I(G)^2 Cohen-Macaulay: special CM and triangle-free.
Verdict ordinary2_cm(const Graph& g, FieldSpec field = FieldSpec::all_fields());

/// S/I(G)^(2) generalized CM: G unmixed and every G_i special CM.
Verdict symbolic2_gcm(const Graph& g, FieldSpec field = FieldSpec::all_fields());
/// S/I(G)^2 generalized CM: G unmixed and every G_i special CM and triangle-free.
Verdict ordinary2_gcm(const Graph& g, FieldSpec field = FieldSpec::all_fields());

/// S/I(G)^(2) Buchsbaum: Delta(G) CM and every G_i special CM.
Verdict symbolic2_buchsbaum(const Graph& g, FieldSpec field = FieldSpec::all_fields());
/// S/I(G)^2 Buchsbaum: Delta(G) CM and every G_i special CM and triangle-free.
Verdict ordinary2_buchsbaum(const Graph& g, FieldSpec field = FieldSpec::all_fields());

/// I(G)^(2) as the intersection of P_F^2 over the maximal independent sets,
/// in variables 1..max label. Throws std::invalid_argument for the graph
/// with no vertices.
MonomialIdeal symbolic_square(const Graph& g);

struct TakayamaEntry {
  int i = 0;
  DegreeVector a;
  std::int64_t dimension = 0;
  bool operator==(const TakayamaEntry&) const = default;
};

/// dim_k H^i_m(S/I)_a for the requested cohomological degrees and multidegrees.
struct TakayamaTable {
  FieldSpec field;
  std::vector<TakayamaEntry> entries;

  /// Throws std::out_of_range when (i, a) was not computed.
  [[nodiscard]] std::int64_t at(int i, const DegreeVector& a) const;
};

/// Entries from the degree complex formula: betti_{i-|G_a|-1}(Delta_a(I))
/// when G_a is a face of the radical complex and a_j < rho_j for all j, 0
/// otherwise. Unmixed Components-form ideals at a in N^n use the facet
/// description of Delta_a; everything else goes through the generators.
/// Throws std::invalid_argument for FieldSpec::all_fields().
TakayamaTable takayama_table(const MonomialIdeal& ideal, const std::vector<DegreeVector>& degrees, int i_min,
                             int i_max, FieldSpec field);

struct Main2Support {
  bool holds = true;
  std::optional<TakayamaEntry> violation;
};

/// For symbolic2_gcm graphs: over a in {0,1}^n and i < alpha(G), every
/// nonzero local cohomology entry of S/I(G)^(2) sits at 0, some e_u, or
/// e_u + e_v with uv an edge. Throws std::invalid_argument if g is not
/// symbolic2_gcm or the field is AllFields.
Main2Support verify_main2_support(const Graph& g, FieldSpec field);

/// Stable JSON keys of the report, in output order.
inline const std::vector<std::string>& report_property_keys() {
  static const std::vector<std::string> keys{
      "delta_cm",          "delta_buchsbaum",     "unmixed",           "special_cm",
      "special_cm_edges_only", "symbolic2_cm",    "ordinary2_cm",      "symbolic2_buchsbaum",
      "ordinary2_buchsbaum",   "symbolic2_gcm",   "ordinary2_gcm"};
  return keys;
}

struct ClassificationReport {
  Graph graph;
  FieldSpec field;
  std::map<std::string, Verdict> properties;
  std::vector<std::string> notes;

  /// Throws std::out_of_range for an unknown key.
  [[nodiscard]] const Verdict& at(const std::string& key) const { return properties.at(key); }
  /// Implications that every correct report satisfies; returns the violated ones.
  [[nodiscard]] std::vector<std::string> implication_violations() const;

  bool operator==(const ClassificationReport&) const = default;
};

struct ClassifyOptions {
  FieldSpec field = FieldSpec::all_fields();
  RouteSelection routes = RouteSelection::All;
  bool allow_isolated = false;
};

/// Every property in report_property_keys(). Throws IsolatedVerticesError
/// unless allowed, RouteDisagreement if the routes differ.
ClassificationReport classify(const Graph& g, const ClassifyOptions& options = {});

}  // namespace edgepow
