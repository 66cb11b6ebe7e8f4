#pragma once

#include <optional>
#include <string>

#include "edgepow/complex.hpp"
#include "edgepow/field_spec.hpp"

namespace edgepow {

/// Outcome of a Reisner-type check. On failure either `pure` is false (and
/// `face` is a facet of too small a size) or `face` is a face whose link has
/// nonvanishing homology in degree `degree`.
struct ReisnerCheck {
  bool holds = true;
  bool pure = true;
  std::optional<VertexSet> face;
  int degree = 0;

  explicit operator bool() const { return holds; }
  [[nodiscard]] std::string describe() const;
};

/// Stanley-Reisner ring of d is Cohen-Macaulay over the field(s): for every
/// face F (the empty face included), H_j(lk F) = 0 for all j < dim d - |F|.
/// VOID and IRRELEVANT are Cohen-Macaulay.
ReisnerCheck check_cm(const SimplicialComplex& d, FieldSpec field = FieldSpec::all_fields());
bool is_cm(const SimplicialComplex& d, FieldSpec field = FieldSpec::all_fields());

/// Buchsbaum: d is pure and every vertex link is Cohen-Macaulay. VOID is
/// Buchsbaum.
ReisnerCheck check_buchsbaum(const SimplicialComplex& d, FieldSpec field = FieldSpec::all_fields());
bool is_buchsbaum(const SimplicialComplex& d, FieldSpec field = FieldSpec::all_fields());

/// Buchsbaum from the definition: pure, and the vanishing for every
/// nonempty face.
bool is_buchsbaum_direct(const SimplicialComplex& d, FieldSpec field = FieldSpec::all_fields());

/// Generalized Cohen-Macaulay; coincides with Buchsbaum for Stanley-Reisner rings.
inline bool is_gcm_complex(const SimplicialComplex& d, FieldSpec field = FieldSpec::all_fields()) {
  return is_buchsbaum(d, field);
}

/// H_j(d) = 0 for all j < t over the field(s), with cheap exits for cones
/// and connectivity before falling back to Smith normal form.
bool link_homology_vanishes(const SimplicialComplex& d, int t, FieldSpec field);

}  // namespace edgepow
