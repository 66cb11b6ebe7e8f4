#include "edgepow/ideals.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace edgepow {

namespace {

constexpr int kMaxSubsetVariables = 24;

VertexSet all_variables(int n) { return VertexSet::range(1, n); }

bool divides(const ExponentVector& b, const ExponentVector& a) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (b[j] > a[j]) return false;
  return true;
}

int sum_outside(const std::vector<int>& a, VertexSet f) {
  int s = 0;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!f.contains(static_cast<int>(j) + 1)) s += a[j];
  return s;
}

// Advances a through {0..cap}^n in lexicographic order, last coordinate
// fastest. Returns false after the last point.
bool next_in_box(std::vector<int>& a, int cap) {
  for (std::size_t j = a.size(); j-- > 0;) {
    if (a[j] < cap) {
      ++a[j];
      return true;
    }
    a[j] = 0;
  }
  return false;
}

void check_subset_width(int n, const char* what) {
  if (n > kMaxSubsetVariables)
    throw std::invalid_argument(std::string(what) + ": too many variables for subset enumeration");
}

}  // namespace

DegreeVector DegreeVector::indicator(int n, VertexSet s) {
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  for (int v : s) {
    if (v > n) throw std::invalid_argument("DegreeVector::indicator: label beyond n");
    a[static_cast<std::size_t>(v - 1)] = 1;
  }
  return DegreeVector(std::move(a));
}

VertexSet DegreeVector::negative_support() const {
  VertexSet s;
  for (std::size_t j = 0; j < a_.size(); ++j)
    if (a_[j] < 0) s.insert(static_cast<int>(j) + 1);
  return s;
}

VertexSet DegreeVector::positive_support() const {
  VertexSet s;
  for (std::size_t j = 0; j < a_.size(); ++j)
    if (a_[j] > 0) s.insert(static_cast<int>(j) + 1);
  return s;
}

std::string DegreeVector::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < a_.size(); ++j) {
    if (j > 0) out += ',';
    out += std::to_string(a_[j]);
  }
  return out + ")";
}

struct MonomialIdeal::RhoCache {
  std::once_flag once;
  std::vector<int> value;
};

MonomialIdeal MonomialIdeal::from_components(int n, std::vector<Component> components) {
  if (n < 0 || n > VertexSet::kMaxLabel) throw std::invalid_argument("MonomialIdeal: bad variable count");
  const VertexSet ground = all_variables(n);
  for (const Component& c : components) {
    if (!c.facet.subset_of(ground)) throw std::invalid_argument("MonomialIdeal: facet " + c.facet.to_string() + " leaves 1..n");
    if (c.exponent < 1) throw std::invalid_argument("MonomialIdeal: component exponent must be at least 1");
  }
  for (std::size_t i = 0; i < components.size(); ++i)
    for (std::size_t j = 0; j < components.size(); ++j)
      if (i != j && components[i].facet.subset_of(components[j].facet))
        throw std::invalid_argument("MonomialIdeal: facets " + components[i].facet.to_string() + " and " +
                                    components[j].facet.to_string() + " are not an antichain");
  std::sort(components.begin(), components.end(),
            [](const Component& x, const Component& y) { return lex_less(x.facet, y.facet); });
  MonomialIdeal ideal;
  ideal.n_ = n;
  ideal.form_ = Form::Components;
  ideal.components_ = std::move(components);
  ideal.rho_cache_ = std::make_shared<RhoCache>();
  return ideal;
}

MonomialIdeal MonomialIdeal::from_generators(int n, std::vector<ExponentVector> generators) {
  if (n < 0 || n > VertexSet::kMaxLabel) throw std::invalid_argument("MonomialIdeal: bad variable count");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("MonomialIdeal: generator length differs from n");
    if (std::any_of(g.begin(), g.end(), [](int e) { return e < 0; }))
      throw std::invalid_argument("MonomialIdeal: negative exponent in generator");
  }
  MonomialIdeal ideal;
  ideal.n_ = n;
  ideal.form_ = Form::Generators;
  ideal.generators_ = minimalize(std::move(generators));
  ideal.rho_cache_ = std::make_shared<RhoCache>();
  return ideal;
}

const std::vector<Component>& MonomialIdeal::components() const {
  if (form_ != Form::Components) throw std::logic_error("MonomialIdeal: not in components form");
  return components_;
}

const std::vector<ExponentVector>& MonomialIdeal::generators() const {
  if (form_ != Form::Generators) throw std::logic_error("MonomialIdeal: not in generators form");
  return generators_;
}

const std::vector<int>& MonomialIdeal::rho() const {
  std::call_once(rho_cache_->once, [this] {
    const std::vector<ExponentVector>* gens = &generators_;
    MonomialIdeal expanded;
    if (form_ == Form::Components) {
      expanded = minimal_generators_of_components(*this, max_exponent());
      gens = &expanded.generators_;
    }
    std::vector<int> rho(static_cast<std::size_t>(n_), 0);
    for (const auto& g : *gens)
      for (std::size_t j = 0; j < g.size(); ++j) rho[j] = std::max(rho[j], g[j]);
    rho_cache_->value = std::move(rho);
  });
  return rho_cache_->value;
}

int MonomialIdeal::max_exponent() const {
  int m = 0;
  for (const Component& c : components_) m = std::max(m, c.exponent);
  for (const auto& g : generators_)
    for (int e : g) m = std::max(m, e);
  return m;
}

bool MonomialIdeal::is_unmixed() const {
  const auto& cs = components();
  return std::all_of(cs.begin(), cs.end(), [&](const Component& c) { return c.facet.size() == cs.front().facet.size(); });
}

SimplicialComplex MonomialIdeal::radical_complex() const {
  const VertexSet ground = all_variables(n_);
  if (form_ == Form::Components) {
    std::vector<VertexSet> facets;
    for (const Component& c : components_) facets.push_back(c.facet);
    return SimplicialComplex(ground, std::move(facets));
  }
  check_subset_width(n_, "radical_complex");
  std::vector<VertexSet> supports;
  for (const auto& g : generators_) {
    VertexSet s;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g[j] > 0) s.insert(static_cast<int>(j) + 1);
    supports.push_back(s);
  }
  std::vector<VertexSet> faces;
  const std::uint64_t full = ground.bits();
  for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
    const VertexSet f(sub);
    if (std::none_of(supports.begin(), supports.end(), [&](VertexSet s) { return s.subset_of(f); }))
      faces.push_back(f);
    if (sub == 0) break;
  }
  return SimplicialComplex(ground, std::move(faces));
}

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> monomials) {
  std::sort(monomials.begin(), monomials.end());
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < monomials.size() && minimal; ++j)
      if (j != i && divides(monomials[j], monomials[i])) minimal = false;
    if (minimal) out.push_back(monomials[i]);
  }
  return out;
}

MonomialIdeal symbolic_power(const SimplicialComplex& d, int m) {
  if (d.is_void() || d.is_irrelevant()) throw std::invalid_argument("symbolic_power: complex must have a nonempty facet");
  if (m < 1) throw std::invalid_argument("symbolic_power: exponent must be at least 1");
  std::vector<Component> components;
  for (VertexSet f : d.facets()) components.push_back({f, m});
  return MonomialIdeal::from_components(d.ground().max(), std::move(components));
}

bool membership(const MonomialIdeal& ideal, const DegreeVector& a) {
  if (a.size() != ideal.variable_count()) throw std::invalid_argument("membership: degree has wrong length");
  if (!a.is_nonnegative()) throw std::invalid_argument("membership: negative exponent");
  if (ideal.form() == MonomialIdeal::Form::Components) {
    const auto& cs = ideal.components();
    return std::all_of(cs.begin(), cs.end(),
                       [&](const Component& c) { return sum_outside(a.values(), c.facet) >= c.exponent; });
  }
  const auto& gens = ideal.generators();
  return std::any_of(gens.begin(), gens.end(), [&](const ExponentVector& b) { return divides(b, a.values()); });
}

MonomialIdeal ordinary_power_generators(const Graph& g, int m) {
  const std::vector<Edge> edges = g.edges();
  if (edges.empty()) throw std::invalid_argument("ordinary_power_generators: graph has no edges");
  if (m < 1) throw std::invalid_argument("ordinary_power_generators: exponent must be at least 1");
  const int n = g.vertices().max();
  std::vector<ExponentVector> products;
  ExponentVector current(static_cast<std::size_t>(n), 0);
  // multisets of m edges, indices nondecreasing
  auto recurse = [&](auto&& self, std::size_t from, int left) -> void {
    if (left == 0) {
      products.push_back(current);
      return;
    }
    for (std::size_t e = from; e < edges.size(); ++e) {
      ++current[static_cast<std::size_t>(edges[e].u - 1)];
      ++current[static_cast<std::size_t>(edges[e].v - 1)];
      self(self, e, left - 1);
      --current[static_cast<std::size_t>(edges[e].u - 1)];
      --current[static_cast<std::size_t>(edges[e].v - 1)];
    }
  };
  recurse(recurse, 0, m);
  return MonomialIdeal::from_generators(n, std::move(products));
}

MonomialIdeal minimal_generators_of_components(const MonomialIdeal& ideal, int cap) {
  const auto& cs = ideal.components();
  const int n = ideal.variable_count();
  if (cap < 0) throw std::invalid_argument("minimal_generators_of_components: negative cap");
  const std::size_t radix = static_cast<std::size_t>(cap) + 1;
  std::size_t total = 1;
  for (int j = 0; j < n; ++j) {
    if (total > (std::size_t{1} << 26) / radix)
      throw std::invalid_argument("minimal_generators_of_components: search box too large");
    total *= radix;
  }

  // components whose sum involves coordinate j (those with j+1 outside F)
  std::vector<std::vector<std::size_t>> touching(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < cs.size(); ++c)
    for (int j = 0; j < n; ++j)
      if (!cs[c].facet.contains(j + 1)) touching[static_cast<std::size_t>(j)].push_back(c);

  std::vector<int> sums(cs.size(), 0);
  std::size_t satisfied = 0;
  auto shift = [&](std::size_t j, int delta) {
    for (std::size_t c : touching[j]) {
      const bool before = sums[c] >= cs[c].exponent;
      sums[c] += delta;
      const bool after = sums[c] >= cs[c].exponent;
      if (before != after) {
        if (after) ++satisfied;
        else --satisfied;
      }
    }
  };

  // member[idx] for idx = sum_j a_j * radix^(n-1-j)
  std::vector<std::uint8_t> member(total, 0);
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    member[idx] = satisfied == cs.size() ? 1 : 0;
    for (std::size_t j = a.size(); j-- > 0;) {
      if (a[j] < cap) {
        ++a[j];
        shift(j, 1);
        break;
      }
      shift(j, -cap);
      a[j] = 0;
    }
  }

  std::vector<std::size_t> stride(static_cast<std::size_t>(n), 1);
  for (std::size_t j = stride.size(); j-- > 1;) stride[j - 1] = stride[j] * radix;

  std::vector<ExponentVector> gens;
  std::fill(a.begin(), a.end(), 0);
  for (std::size_t idx = 0; idx < total; ++idx, next_in_box(a, cap)) {
    if (!member[idx]) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < a.size() && minimal; ++j)
      if (a[j] > 0 && member[idx - stride[j]]) minimal = false;
    if (minimal) gens.push_back(a);
  }
  return MonomialIdeal::from_generators(n, std::move(gens));
}

SimplicialComplex degree_complex(const MonomialIdeal& ideal, const DegreeVector& a) {
  const int n = ideal.variable_count();
  if (a.size() != n) throw std::invalid_argument("degree_complex: degree has wrong length");
  const VertexSet ground = all_variables(n);

  if (ideal.form() == MonomialIdeal::Form::Components) {
    if (!ideal.is_unmixed()) throw std::invalid_argument("degree_complex: components are mixed");
    if (!a.is_nonnegative()) throw std::invalid_argument("degree_complex: components form needs a nonnegative degree");
    std::vector<VertexSet> facets;
    for (const Component& c : ideal.components())
      if (sum_outside(a.values(), c.facet) < c.exponent) facets.push_back(c.facet);
    return SimplicialComplex(ground, std::move(facets));
  }

  check_subset_width(n, "degree_complex");
  const VertexSet neg = a.negative_support();
  const auto& gens = ideal.generators();
  auto qualifies = [&](VertexSet f) {
    for (const auto& b : gens) {
      bool escapes = false;
      for (std::size_t i = 0; i < b.size() && !escapes; ++i)
        if (!f.contains(static_cast<int>(i) + 1) && a.values()[i] < b[i]) escapes = true;
      if (!escapes) return false;
    }
    return true;
  };
  std::vector<VertexSet> faces;
  const std::uint64_t free_bits = (ground - neg).bits();
  for (std::uint64_t sub = free_bits;; sub = (sub - 1) & free_bits) {
    const VertexSet f = VertexSet(sub) | neg;
    if (qualifies(f)) faces.push_back(f - neg);
    if (sub == 0) break;
  }
  return SimplicialComplex(ground, std::move(faces));
}

DegreeVector truncate_to_box(const DegreeVector& a, int cap) {
  std::vector<int> out = a.values();
  for (int& x : out) x = std::min(x, cap);
  return DegreeVector(std::move(out));
}

LGammaResult l_gamma_empty(const MonomialIdeal& ideal, std::span<const VertexSet> gamma_facets) {
  const auto& cs = ideal.components();
  std::vector<bool> in_gamma(cs.size(), false);
  for (VertexSet g : gamma_facets) {
    const auto it = std::find_if(cs.begin(), cs.end(), [&](const Component& c) { return c.facet == g; });
    if (it == cs.end()) throw std::invalid_argument("l_gamma_empty: " + g.to_string() + " is not a facet of the ideal");
    in_gamma[static_cast<std::size_t>(it - cs.begin())] = true;
  }
  const int cap = ideal.max_exponent();
  std::vector<int> a(static_cast<std::size_t>(ideal.variable_count()), 0);
  do {
    bool ok = true;
    for (std::size_t c = 0; c < cs.size() && ok; ++c) {
      const bool inside = sum_outside(a, cs[c].facet) >= cs[c].exponent;
      ok = inside != in_gamma[c];
    }
    if (ok) return LGammaResult{false, DegreeVector(a)};
  } while (next_in_box(a, cap));
  return LGammaResult{};
}

}  // namespace edgepow
