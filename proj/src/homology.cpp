#include "edgepow/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgepow {

namespace {

const HomologyGroup kZeroGroup{};

IntMatrix boundary_between(const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper) {
  IntMatrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
  for (std::size_t c = 0; c < upper.size(); ++c) {
    int k = 0;
    for (int v : upper[c]) {
      const VertexSet face = upper[c].without(v);
      const auto it = std::lower_bound(lower.begin(), lower.end(), face, LexLess{});
      m.at(static_cast<int>(it - lower.begin()), static_cast<int>(c)) = (k % 2 == 0) ? 1 : -1;
      ++k;
    }
  }
  return m;
}

}  // namespace

const HomologyGroup& HomologyProfile::group(int j) const {
  const int k = j + 1;
  if (k < 0 || k >= static_cast<int>(groups_.size())) return kZeroGroup;
  return groups_[static_cast<std::size_t>(k)];
}

bool HomologyProfile::is_zero() const {
  return std::all_of(groups_.begin(), groups_.end(), [](const HomologyGroup& g) { return g.is_zero(); });
}

std::int64_t HomologyProfile::torsion_count(int j, int p) const {
  std::int64_t count = 0;
  for (const BigInt& t : torsion(j))
    if (t % p == 0) ++count;
  return count;
}

bool BettiNumbers::all_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](std::int64_t v) { return v == 0; });
}

IntMatrix boundary_matrix(const SimplicialComplex& d, int j) {
  if (d.is_void()) throw std::invalid_argument("boundary_matrix: complex is VOID");
  if (j < 0) return IntMatrix(0, static_cast<int>(d.faces_of_size(0).size()));
  return boundary_between(d.faces_of_size(j), d.faces_of_size(j + 1));
}

HomologyProfile reduced_homology(const SimplicialComplex& d, std::optional<int> max_degree) {
  if (d.is_void()) return HomologyProfile{};
  const int top = max_degree ? std::min(*max_degree, d.dim()) : d.dim();
  if (top < -1) return HomologyProfile{};

  // faces[k] = faces with k vertices, k = 0..top+2
  std::vector<std::vector<VertexSet>> faces;
  for (int k = 0; k <= top + 2; ++k) faces.push_back(d.faces_of_size(k));

  // rank and torsion of the boundary out of degree j, j = 0..top+1
  std::vector<std::int64_t> rank(static_cast<std::size_t>(top + 3), 0);
  std::vector<std::vector<BigInt>> torsion(static_cast<std::size_t>(top + 3));
  for (int j = 0; j <= top + 1; ++j) {
    const auto& lower = faces[static_cast<std::size_t>(j)];
    const auto& upper = faces[static_cast<std::size_t>(j + 1)];
    if (lower.empty() || upper.empty()) continue;
    const auto factors = smith_normal_form(boundary_between(lower, upper));
    rank[static_cast<std::size_t>(j + 1)] = static_cast<std::int64_t>(factors.size());
    for (const BigInt& f : factors)
      if (f > 1) torsion[static_cast<std::size_t>(j + 1)].push_back(f);
  }

  // degree j lives at index j+1 in faces/rank/torsion
  std::vector<HomologyGroup> groups;
  for (int j = -1; j <= top; ++j) {
    const auto k = static_cast<std::size_t>(j + 1);
    HomologyGroup g;
    g.free_rank = static_cast<std::int64_t>(faces[k].size()) - rank[k] - rank[k + 1];
    g.torsion = torsion[k + 1];
    groups.push_back(std::move(g));
  }
  return HomologyProfile(std::move(groups));
}

BettiNumbers betti(const HomologyProfile& h, FieldSpec field) {
  if (field.kind() == FieldSpec::Kind::AllFields)
    throw std::invalid_argument("betti: choose a single characteristic, not all fields");
  std::vector<std::int64_t> values;
  for (int j = -1; j <= h.max_degree(); ++j) {
    std::int64_t b = h.free_rank(j);
    if (field.kind() == FieldSpec::Kind::CharP) b += h.torsion_count(j, field.prime()) + h.torsion_count(j - 1, field.prime());
    values.push_back(b);
  }
  return BettiNumbers(std::move(values));
}

BettiNumbers betti(const SimplicialComplex& d, FieldSpec field) {
  return betti(reduced_homology(d), field);
}

bool homology_vanishes_below(const HomologyProfile& h, int t, FieldSpec field) {
  for (int j = -1; j < t; ++j) {
    switch (field.kind()) {
      case FieldSpec::Kind::AllFields:
        if (!h.group(j).is_zero()) return false;
        break;
      case FieldSpec::Kind::Char0:
        if (h.free_rank(j) != 0) return false;
        break;
      case FieldSpec::Kind::CharP:
        if (h.free_rank(j) + h.torsion_count(j, field.prime()) + h.torsion_count(j - 1, field.prime()) != 0)
          return false;
        break;
    }
  }
  return true;
}

}  // namespace edgepow
