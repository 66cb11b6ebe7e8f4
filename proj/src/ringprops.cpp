#include "edgepow/ringprops.hpp"

#include "edgepow/homology.hpp"

namespace edgepow {

namespace {

bool is_connected(const SimplicialComplex& d) {
  const auto& facets = d.facets();
  if (facets.empty()) return false;
  VertexSet reached = facets.front();
  bool grew = true;
  while (grew) {
    grew = false;
    for (VertexSet f : facets)
      if (f.intersects(reached) && !f.subset_of(reached)) {
        reached |= f;
        grew = true;
      }
  }
  return reached == d.vertices();
}

int first_nonvanishing_degree(const SimplicialComplex& d, int t, FieldSpec field) {
  const HomologyProfile h = reduced_homology(d, t - 1);
  for (int j = -1; j < t; ++j)
    if (!homology_vanishes_below(h, j + 1, field)) return j;
  return t;
}

ReisnerCheck impure_witness(const SimplicialComplex& d) {
  ReisnerCheck r;
  r.holds = false;
  r.pure = false;
  const int top = d.dim() + 1;
  for (VertexSet f : d.facets())
    if (f.size() < top) {
      r.face = f;
      break;
    }
  r.degree = -1;
  return r;
}

// Vanishing of H_j(lk F) for j < dim d - |F| over faces of size in [min_size, dim d - 1].
ReisnerCheck check_links(const SimplicialComplex& d, int min_size, FieldSpec field) {
  const int top = d.dim();
  for (int k = top - 1; k >= min_size; --k) {
    for (VertexSet f : d.faces_of_size(k)) {
      const SimplicialComplex lk = link(d, f);
      const int t = top - k;
      if (!link_homology_vanishes(lk, t, field)) {
        ReisnerCheck r;
        r.holds = false;
        r.face = f;
        r.degree = first_nonvanishing_degree(lk, t, field);
        return r;
      }
    }
  }
  return ReisnerCheck{};
}

}  // namespace

std::string ReisnerCheck::describe() const {
  if (holds) return "holds";
  if (!pure) return "not pure: facet " + (face ? face->to_string() : std::string("?")) + " is too small";
  return "link of " + (face ? face->to_string() : std::string("?")) + " has homology in degree " +
         std::to_string(degree);
}

bool link_homology_vanishes(const SimplicialComplex& d, int t, FieldSpec field) {
  if (t <= -1 || d.is_void()) return true;
  if (d.is_irrelevant()) return false;
  if (is_cone(d)) return true;
  if (t >= 1 && !is_connected(d)) return false;
  if (t <= 1) return true;
  return homology_vanishes_below(reduced_homology(d, t - 1), t, field);
}

ReisnerCheck check_cm(const SimplicialComplex& d, FieldSpec field) {
  if (d.is_void() || d.is_irrelevant()) return ReisnerCheck{};
  if (!d.is_pure()) return impure_witness(d);
  return check_links(d, 0, field);
}

bool is_cm(const SimplicialComplex& d, FieldSpec field) { return check_cm(d, field).holds; }

ReisnerCheck check_buchsbaum(const SimplicialComplex& d, FieldSpec field) {
  if (d.is_void()) return ReisnerCheck{};
  if (!d.is_pure()) return impure_witness(d);
  for (int v : d.vertices()) {
    ReisnerCheck inner = check_cm(link(d, VertexSet{v}), field);
    if (!inner.holds) {
      inner.face = inner.face.value_or(VertexSet{}).with(v);
      return inner;
    }
  }
  return ReisnerCheck{};
}

bool is_buchsbaum(const SimplicialComplex& d, FieldSpec field) { return check_buchsbaum(d, field).holds; }

bool is_buchsbaum_direct(const SimplicialComplex& d, FieldSpec field) {
  if (d.is_void()) return true;
  if (!d.is_pure()) return false;
  return check_links(d, 1, field).holds;
}

}  // namespace edgepow
