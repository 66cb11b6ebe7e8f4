#include "edgepow/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgepow {

namespace {

// Keep only inclusion-maximal sets, then order lexicographically.
std::vector<VertexSet> maximal_elements(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(),
            [](VertexSet a, VertexSet b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    const bool covered = std::any_of(kept.begin(), kept.end(), [&](VertexSet k) { return s.subset_of(k); });
    if (!covered) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), LexLess{});
  return kept;
}

// k-element subsets of `s`, appended to out.
void append_subsets_of_size(VertexSet s, int k, std::vector<VertexSet>& out) {
  if (k < 0 || k > s.size()) return;
  if (k == 0) {
    out.push_back(VertexSet{});
    return;
  }
  const std::vector<int> elems = s.to_vector();
  const int n = static_cast<int>(elems.size());
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    VertexSet sub;
    for (int i : idx) sub.insert(elems[static_cast<std::size_t>(i)]);
    out.push_back(sub);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(VertexSet ground, std::vector<VertexSet> generators)
    : ground_(ground) {
  for (VertexSet g : generators)
    if (!g.subset_of(ground))
      throw std::invalid_argument("face " + g.to_string() + " is not contained in the ground set " +
                                  ground.to_string());
  facets_ = maximal_elements(std::move(generators));
}

SimplicialComplex SimplicialComplex::generated_by(std::vector<VertexSet> generators) {
  VertexSet ground;
  for (VertexSet g : generators) ground |= g;
  return SimplicialComplex(ground, std::move(generators));
}

VertexSet SimplicialComplex::vertices() const {
  VertexSet out;
  for (VertexSet f : facets_) out |= f;
  return out;
}

bool SimplicialComplex::contains_face(VertexSet f) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet g) { return f.subset_of(g); });
}

int SimplicialComplex::dim() const {
  if (is_void()) throw std::logic_error("dimension of the void complex is undefined");
  int best = 0;
  for (VertexSet f : facets_) best = std::max(best, f.size());
  return best - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](VertexSet f) { return f.size() == facets_.front().size(); });
}

std::vector<VertexSet> SimplicialComplex::faces_of_size(int k) const {
  std::vector<VertexSet> out;
  for (VertexSet f : facets_) append_subsets_of_size(f, k, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

std::vector<VertexSet> SimplicialComplex::faces_up_to_size(int k) const {
  std::vector<VertexSet> out;
  for (VertexSet f : facets_)
    for (int j = 0; j <= std::min(k, f.size()); ++j) append_subsets_of_size(f, j, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  return faces_up_to_size(VertexSet::kMaxLabel);
}

std::string SimplicialComplex::to_string() const {
  if (is_void()) return "VOID";
  if (is_irrelevant()) return "IRRELEVANT";
  std::string out = "[";
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i > 0) out += ',';
    out += facets_[i].to_string();
  }
  return out + "]";
}

SimplicialComplex independence_complex(const Graph& g) {
  return SimplicialComplex(g.vertices(), maximal_independent_sets(g));
}

SimplicialComplex star(const SimplicialComplex& d, VertexSet f) {
  std::vector<VertexSet> kept;
  for (VertexSet g : d.facets())
    if (f.subset_of(g)) kept.push_back(g);
  return SimplicialComplex(d.ground(), std::move(kept));
}

SimplicialComplex link(const SimplicialComplex& d, VertexSet f) {
  std::vector<VertexSet> kept;
  for (VertexSet g : d.facets())
    if (f.subset_of(g)) kept.push_back(g - f);
  return SimplicialComplex(d.ground(), std::move(kept));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.ground().intersects(b.ground()))
    throw std::invalid_argument("join: ground sets " + a.ground().to_string() + " and " +
                                b.ground().to_string() + " overlap");
  std::vector<VertexSet> gens;
  for (VertexSet f : a.facets())
    for (VertexSet l : b.facets()) gens.push_back(f | l);
  return SimplicialComplex(a.ground() | b.ground(), std::move(gens));
}

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<VertexSet> gens = a.facets();
  gens.insert(gens.end(), b.facets().begin(), b.facets().end());
  return SimplicialComplex(a.ground() | b.ground(), std::move(gens));
}

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<VertexSet> gens;
  for (VertexSet f : a.facets())
    for (VertexSet g : b.facets()) gens.push_back(f & g);
  return SimplicialComplex(a.ground() | b.ground(), std::move(gens));
}

SimplicialComplex delta_v(const SimplicialComplex& d, VertexSet v) {
  if (!d.is_pure()) throw std::invalid_argument("delta_v: complex is not pure");
  std::vector<VertexSet> kept;
  for (VertexSet f : d.facets())
    if ((f & v).size() >= v.size() - 1) kept.push_back(f);
  return SimplicialComplex(d.ground(), std::move(kept));
}

SimplicialComplex star_union(const SimplicialComplex& d, VertexSet v) {
  SimplicialComplex out = SimplicialComplex::void_complex(d.ground());
  for (int i : v) out = union_of(out, star(d, v.without(i)));
  return out;
}

bool is_cone(const SimplicialComplex& d) {
  if (d.facets().empty()) return false;
  VertexSet common = d.facets().front();
  for (VertexSet f : d.facets()) common &= f;
  return !common.empty();
}

bool is_contractible_complex(const SimplicialComplex& d) {
  const auto faces = d.faces();
  for (VertexSet e : d.faces_of_size(2)) {
    const int u = e.min();
    const int v = e.max();
    for (VertexSet f : faces)
      if (d.contains_face(f.with(u)) && d.contains_face(f.with(v)) && !d.contains_face(f | e))
        return false;
  }
  return true;
}

}  // namespace edgepow
