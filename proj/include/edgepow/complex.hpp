#pragma once

#include <span>
#include <string>
#include <vector>

#include "edgepow/graph.hpp"
#include "edgepow/vertex_set.hpp"

namespace edgepow {

/// Simplicial complex stored by its facets.
///
/// Two degenerate values are kept apart: VOID has no faces at all,
/// IRRELEVANT has only the empty face (facet list {{}}). Facets are an
/// antichain kept in lexicographic order, so two complexes with the same
/// faces compare equal facet-wise.
class SimplicialComplex {
 public:
  /// VOID on an empty ground set.
  SimplicialComplex() = default;
  /// Complex generated by `generators` (any faces; only the maximal ones are
  /// kept). Throws std::invalid_argument if a generator leaves `ground`.
  SimplicialComplex(VertexSet ground, std::vector<VertexSet> generators);
  /// Ground set taken to be the union of the generators.
  static SimplicialComplex generated_by(std::vector<VertexSet> generators);

  static SimplicialComplex void_complex(VertexSet ground = {}) { return SimplicialComplex(ground, {}); }
  static SimplicialComplex irrelevant(VertexSet ground = {}) { return SimplicialComplex(ground, {VertexSet{}}); }
  static SimplicialComplex simplex(VertexSet face) { return SimplicialComplex(face, {face}); }

  [[nodiscard]] VertexSet ground() const { return ground_; }
  [[nodiscard]] const std::vector<VertexSet>& facets() const { return facets_; }
  [[nodiscard]] bool is_void() const { return facets_.empty(); }
  [[nodiscard]] bool is_irrelevant() const { return facets_.size() == 1 && facets_.front().empty(); }
  /// Vertices lying in some face.
  [[nodiscard]] VertexSet vertices() const;
  [[nodiscard]] bool contains_face(VertexSet f) const;

  /// Maximum facet size minus one; -1 for IRRELEVANT. Throws std::logic_error on VOID.
  [[nodiscard]] int dim() const;
  /// All facets have the same size (VOID and IRRELEVANT are pure).
  [[nodiscard]] bool is_pure() const;

  /// Faces with exactly k vertices in lexicographic order.
  [[nodiscard]] std::vector<VertexSet> faces_of_size(int k) const;
  /// Every face (the empty face included) in lexicographic order.
  [[nodiscard]] std::vector<VertexSet> faces() const;
  /// Faces with at most k vertices, lexicographic order.
  [[nodiscard]] std::vector<VertexSet> faces_up_to_size(int k) const;

  [[nodiscard]] SimplicialComplex with_ground(VertexSet ground) const {
    return SimplicialComplex(ground, facets_);
  }

  /// Compares ground sets and faces.
  bool operator==(const SimplicialComplex&) const = default;
  /// Compares faces only.
  [[nodiscard]] bool same_faces(const SimplicialComplex& other) const { return facets_ == other.facets_; }

  /// "[{1,3},{2,4}]", "VOID" or "IRRELEVANT".
  [[nodiscard]] std::string to_string() const;

 private:
  VertexSet ground_;
  std::vector<VertexSet> facets_;
};

/// Faces are the independent sets of g; ground = V(g).
SimplicialComplex independence_complex(const Graph& g);

/// lk F = {G : G u F in D, G n F = {}}; VOID when F is not a face.
SimplicialComplex link(const SimplicialComplex& d, VertexSet f);
/// st F = {G : G u F in D}; VOID when F is not a face.
SimplicialComplex star(const SimplicialComplex& d, VertexSet f);

/// {F u L}; throws std::invalid_argument when the ground sets overlap.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Face-set union; ground sets merge.
SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b);
/// Face-set intersection; ground sets merge.
SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b);

/// Subcomplex generated by the facets F with |F n V| >= |V| - 1; VOID if
/// none qualify. Throws std::invalid_argument if d is not pure.
SimplicialComplex delta_v(const SimplicialComplex& d, VertexSet v);

/// Union over i in V of st(V \ {i}); VOID for V = {}.
SimplicialComplex star_union(const SimplicialComplex& d, VertexSet v);

/// Some vertex lies in every facet.
bool is_cone(const SimplicialComplex& d);

/// Every edge {u,v} of d is contractible: F u {u}, F u {v} in d implies F u {u,v} in d.
bool is_contractible_complex(const SimplicialComplex& d);

}  // namespace edgepow
