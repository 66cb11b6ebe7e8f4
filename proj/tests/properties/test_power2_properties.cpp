#include <doctest.h>

#include "edgepow/ideals.hpp"
#include "edgepow/power2.hpp"
#include "edgepow/ringprops.hpp"

using namespace edgepow;

namespace {
template <class F>
void graphs_without_isolated(int max_n, F f) {
  for (int n = 1; n <= max_n; ++n)
    for_each_graph(n, false, [&](const Graph& g) {
      if (g.isolated_vertices().empty()) f(g);
    });
}
}  // namespace

TEST_CASE("implication chain") {
  graphs_without_isolated(6, [](const Graph& g) {
    const ClassificationReport r = classify(g);
    INFO(g.describe());
    REQUIRE(r.implication_violations().empty());
    if (r.at("ordinary2_cm").value) REQUIRE(r.at("symbolic2_cm").value);
    for (const char* x : {"symbolic2", "ordinary2"}) {
      const std::string s(x);
      if (r.at(s + "_cm").value) REQUIRE(r.at(s + "_buchsbaum").value);
      if (r.at(s + "_buchsbaum").value) REQUIRE(r.at(s + "_gcm").value);
    }
  });
}

TEST_CASE("buchsbaum is cm of delta together with gcm") {
  graphs_without_isolated(6, [](const Graph& g) {
    REQUIRE(symbolic2_buchsbaum(g).value == (is_cm(independence_complex(g)) && symbolic2_gcm(g).value));
  });
}

TEST_CASE("route agreement over several fields") {
  for (FieldSpec f : {FieldSpec::all_fields(), FieldSpec::characteristic(2), FieldSpec::char0(), FieldSpec::characteristic(3)})
    graphs_without_isolated(6, [&](const Graph& g) { REQUIRE(symbolic2_cm_routes(g, f).agree()); });
}

TEST_CASE("every false verdict carries a witness") {
  graphs_without_isolated(5, [](const Graph& g) {
    const ClassificationReport r = classify(g);
    for (const auto& [key, v] : r.properties) {
      INFO(key);
      if (!v.value) REQUIRE_FALSE(v.witness.clause.empty());
      REQUIRE_FALSE(v.routes.empty());
    }
  });
}

TEST_CASE("degree complexes pick out L_Gamma on 0/1 degrees up to seven vertices") {
  graphs_without_isolated(7, [](const Graph& g) {
    if (!is_unmixed(g) || g.edge_count() == 0) return;
    const MonomialIdeal i2 = symbolic_square(g);
    const int n = i2.variable_count();
    const auto& rho = i2.rho();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      std::vector<int> a(static_cast<std::size_t>(n));
      bool below = true;
      for (int j = 0; j < n; ++j) {
        a[static_cast<std::size_t>(j)] = static_cast<int>((bits >> j) & 1U);
        below = below && a[static_cast<std::size_t>(j)] < rho[static_cast<std::size_t>(j)];
      }
      if (!below) continue;
      const DegreeVector d(a);
      const SimplicialComplex gamma = degree_complex(i2, d);
      // a in L_Gamma: inside exactly the components off Gamma
      for (const Component& c : i2.components()) {
        int sum = 0;
        for (int v : VertexSet::range(1, n) - c.facet) sum += d.at(v);
        const bool in_gamma = std::find(gamma.facets().begin(), gamma.facets().end(), c.facet) != gamma.facets().end();
        REQUIRE(in_gamma == (sum < c.exponent));
      }
      if (!gamma.is_void()) REQUIRE_FALSE(l_gamma_empty(i2, gamma.facets()).empty);
    }
  });
}

TEST_CASE("membership is monotone on symbolic squares") {
  graphs_without_isolated(5, [](const Graph& g) {
    const MonomialIdeal i2 = symbolic_square(g);
    const int n = i2.variable_count();
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    while (true) {
      if (membership(i2, DegreeVector(a)))
        for (int j = 0; j < n; ++j) {
          auto b = a;
          ++b[static_cast<std::size_t>(j)];
          REQUIRE(membership(i2, DegreeVector(b)));
        }
      int j = n - 1;
      while (j >= 0 && a[static_cast<std::size_t>(j)] == 2) a[static_cast<std::size_t>(j--)] = 0;
      if (j < 0) break;
      ++a[static_cast<std::size_t>(j)];
    }
  });
}
