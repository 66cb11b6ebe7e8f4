#include "edgepow/example_ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "edgepow/ringprops.hpp"

namespace edgepow {

namespace {

constexpr int kVariables = 6;

std::vector<VertexSet> subset_of_facets(unsigned mask) {
  const auto facets = example_facets();
  std::vector<VertexSet> out;
  for (unsigned k = 0; k < 4; ++k)
    if ((mask >> k) & 1U) out.push_back(facets[k]);
  return out;
}

std::string gamma_to_string(const std::vector<VertexSet>& gamma) {
  return SimplicialComplex::generated_by(gamma).to_string();
}

bool all_present(const MonomialIdeal& ideal, const std::vector<VertexSet>& gamma) {
  const auto& cs = ideal.components();
  return std::all_of(gamma.begin(), gamma.end(), [&](VertexSet g) {
    return std::any_of(cs.begin(), cs.end(), [&](const Component& c) { return c.facet == g; });
  });
}

// Absent facets mean I_F = S, which every monomial lies in, so such a Gamma
// is never a degree complex.
LGammaResult decide(const MonomialIdeal& ideal, const std::vector<VertexSet>& gamma) {
  if (!all_present(ideal, gamma)) return LGammaResult{};
  return l_gamma_empty(ideal, gamma);
}

bool same_gamma(std::vector<VertexSet> x, std::vector<VertexSet> y) {
  std::sort(x.begin(), x.end(), LexLess{});
  std::sort(y.begin(), y.end(), LexLess{});
  return x == y;
}

bool contains_gamma(const std::vector<std::vector<VertexSet>>& list, const std::vector<VertexSet>& g) {
  return std::any_of(list.begin(), list.end(), [&](const auto& x) { return same_gamma(x, g); });
}

}  // namespace

std::array<VertexSet, 4> example_facets() {
  return {VertexSet{1, 2, 3}, VertexSet{2, 3, 4}, VertexSet{3, 4, 5}, VertexSet{4, 5, 6}};
}

MonomialIdeal example_ideal(int a, int b, int c, int d) {
  const std::array<int, 4> m{a, b, c, d};
  if (std::any_of(m.begin(), m.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("example_ideal: exponents must be nonnegative");
  if (std::all_of(m.begin(), m.end(), [](int x) { return x == 0; }))
    throw std::invalid_argument("example_ideal: exponents must not all be zero");
  const auto facets = example_facets();
  std::vector<Component> components;
  for (std::size_t k = 0; k < 4; ++k)
    if (m[k] > 0) components.push_back({facets[k], m[k]});
  return MonomialIdeal::from_components(kVariables, std::move(components));
}

std::vector<std::vector<VertexSet>> example_listed_gammas() {
  const auto f = example_facets();
  return {{f[0], f[2]}, {f[0], f[3]}, {f[1], f[3]}, {f[0], f[1], f[3]}, {f[0], f[2], f[3]}};
}

std::array<bool, 3> example_systems(int a, int b, int c, int d) {
  const bool d1 = a - 1 >= 0 && c - 1 >= 0 && a - b + c - 2 >= 0;
  const bool d2 = a - 1 >= 0 && d - 1 >= 0 && a - b + d - 2 >= 0 && a - c + d - 2 >= 0;
  const bool d3 = b - 1 >= 0 && d - 1 >= 0 && b - c + d - 2 >= 0;
  return {d1, d2, d3};
}

std::vector<LinearConstraint> example_gamma_system(int a, int b, int c, int d, const std::vector<VertexSet>& gamma) {
  const std::array<int, 4> m{a, b, c, d};
  const auto facets = example_facets();
  std::vector<LinearConstraint> system;
  for (std::size_t k = 0; k < 4; ++k) {
    LinearConstraint lc;
    lc.coefficients.assign(kVariables, 0);
    for (int j = 1; j <= kVariables; ++j)
      if (!facets[k].contains(j)) lc.coefficients[static_cast<std::size_t>(j - 1)] = 1;
    const bool in_gamma = std::find(gamma.begin(), gamma.end(), facets[k]) != gamma.end();
    lc.relation = in_gamma ? Relation::Less : Relation::GreaterEqual;
    lc.bound = m[k];
    system.push_back(std::move(lc));
  }
  return system;
}

ExampleIdealDecision example_ideal_decision(int a, int b, int c, int d) {
  const MonomialIdeal ideal = example_ideal(a, b, c, d);
  ExampleIdealDecision out;
  out.exponents = {a, b, c, d};
  out.systems = example_systems(a, b, c, d);
  out.gcm_by_systems = !out.systems[0] && !out.systems[1] && !out.systems[2];
  for (int k = 0; k < 3; ++k)
    if (out.systems[static_cast<std::size_t>(k)]) {
      out.witness_system = k + 1;
      break;
    }

  auto cross_check = [&](const std::vector<VertexSet>& gamma, const LGammaResult& r) {
    const auto system = example_gamma_system(a, b, c, d, gamma);
    const bool feasible = fourier_motzkin_feasible(system, kVariables);
    ++out.fm_checks;
    if (feasible == r.empty)
      out.fm_disagreements.push_back(gamma_to_string(gamma) + ": enumeration says " +
                                     (r.empty ? "empty" : "nonempty") + ", elimination says " +
                                     (feasible ? "feasible" : "infeasible"));
  };

  out.gcm_by_enumeration = true;
  const auto listed = example_listed_gammas();
  for (const auto& gamma : listed) {
    const LGammaResult r = decide(ideal, gamma);
    cross_check(gamma, r);
    if (!r.empty && out.gcm_by_enumeration) {
      out.gcm_by_enumeration = false;
      out.witness_gamma = gamma;
      out.witness_point = r.witness;
    }
  }

  out.cm = true;
  out.gcm_rederived = true;
  for (unsigned mask = 1; mask < 16; ++mask) {
    const auto gamma = subset_of_facets(mask);
    const SimplicialComplex g = SimplicialComplex::generated_by(gamma);
    const bool buchsbaum = is_buchsbaum(g);
    const bool cohen_macaulay = is_cm(g);
    if (!buchsbaum) out.rederived_gammas.push_back(gamma);
    if (buchsbaum && cohen_macaulay) continue;
    const LGammaResult r = decide(ideal, gamma);
    cross_check(gamma, r);
    if (r.empty) continue;
    out.cm = false;
    if (!buchsbaum) out.gcm_rederived = false;
  }

  for (const auto& gamma : listed)
    if (!contains_gamma(out.rederived_gammas, gamma)) out.listed_not_rederived.push_back(gamma);
  for (const auto& gamma : out.rederived_gammas)
    if (!contains_gamma(listed, gamma)) out.rederived_not_listed.push_back(gamma);
  return out;
}

}  // namespace edgepow
