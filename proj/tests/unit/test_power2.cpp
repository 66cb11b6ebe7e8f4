#include <doctest.h>

#include "edgepow/patterns.hpp"
#include "edgepow/power2.hpp"
#include "edgepow/ringprops.hpp"
#include "oracles.hpp"

using namespace edgepow;

namespace {
const Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
const Graph p4(4, {{1, 2}, {2, 3}, {3, 4}});
const Graph k3(3, {{1, 2}, {2, 3}, {1, 3}});
const Graph two_edges(4, {{1, 2}, {3, 4}});
const Graph cherry(3, {{1, 2}, {1, 3}});
const FieldSpec q = FieldSpec::char0();
const FieldSpec f2 = FieldSpec::characteristic(2);

// Local cohomology of S/I^(2) straight from the generic degree-complex
// formula, with the degree complex taken from localized membership and the
// homology from rank computations.
struct LocalCohomologyOracle {
  const Graph& g;
  MonomialIdeal ideal = symbolic_square(g);
  int n = ideal.variable_count();
  std::vector<VertexSet> mis = oracle::maximal_independent_sets(g);

  std::int64_t dim(int i, const std::vector<int>& a, int p) const {
    VertexSet ga;
    for (int j = 1; j <= n; ++j)
      if (a[static_cast<std::size_t>(j - 1)] < 0) ga.insert(j);
    bool face = false;
    for (VertexSet f : mis) face = face || ga.subset_of(f);
    if (!face) return 0;
    for (int j = 0; j < n; ++j)
      if (a[static_cast<std::size_t>(j)] >= ideal.rho()[static_cast<std::size_t>(j)]) return 0;
    std::vector<VertexSet> faces;
    for (VertexSet f : oracle::subsets(VertexSet::range(1, n) - ga)) {
      const VertexSet w = f | ga;
      std::vector<int> lifted(static_cast<std::size_t>(n));
      for (int j = 1; j <= n; ++j) lifted[static_cast<std::size_t>(j - 1)] = w.contains(j) ? 3 : a[static_cast<std::size_t>(j - 1)];
      if (!oracle::in_symbolic_square(g, lifted)) faces.push_back(f);
    }
    const SimplicialComplex delta(VertexSet::range(1, n), faces);
    const auto b = oracle::betti(delta, p);
    const int k = i - ga.size() - 1 + 1;
    return k >= 0 && k < static_cast<int>(b.size()) ? b[static_cast<std::size_t>(k)] : 0;
  }

  // every a in {-1, .., rho_j - 1}^n
  template <class F>
  void for_each_degree(F f) const {
    std::vector<int> a(static_cast<std::size_t>(n), -1);
    while (true) {
      f(a);
      int j = n - 1;
      while (j >= 0 && a[static_cast<std::size_t>(j)] >= ideal.rho()[static_cast<std::size_t>(j)] - 1) a[static_cast<std::size_t>(j--)] = -1;
      if (j < 0) return;
      ++a[static_cast<std::size_t>(j)];
    }
  }

  // below the dimension: CM means no nonzero entry; gCM means every nonzero entry has G_a empty
  std::pair<bool, bool> cm_and_gcm(int p) const {
    const int d = alpha(g);
    bool cm = true, gcm = true;
    for_each_degree([&](const std::vector<int>& a) {
      for (int i = 0; i < d; ++i) {
        if (dim(i, a, p) == 0) continue;
        cm = false;
        if (std::any_of(a.begin(), a.end(), [](int x) { return x < 0; })) gcm = false;
      }
    });
    return {cm, gcm};
  }
};
}  // namespace

TEST_CASE("special cohen-macaulay") {
  CHECK(is_special_cm(two_edges));
  CHECK_FALSE(is_special_cm(c4));
  CHECK(is_special_cm(k3));
  CHECK(is_special_cm(Graph()));
  CHECK(is_special_cm(Graph(3)));
  const Verdict v = special_cm(p4);
  CHECK_FALSE(v.value);
  CHECK(v.witness.clause == "alpha-drop");
  CHECK(v.witness.kind == Witness::Kind::Edge);
}

TEST_CASE("symbolic and ordinary cohen-macaulay") {
  CHECK(symbolic2_cm(two_edges).value);
  CHECK_FALSE(symbolic2_cm(p4).value);
  CHECK(symbolic2_cm(k3).value);
  CHECK(ordinary2_cm(two_edges).value);
  CHECK_FALSE(ordinary2_cm(k3).value);
  CHECK(ordinary2_cm(k3).witness.clause == "triangle");
  CHECK_FALSE(ordinary2_cm(c4).value);
  const auto r = symbolic2_cm_routes(c4);
  CHECK(r.agree());
  CHECK(symbolic2_cm(c4, FieldSpec::all_fields(), RouteSelection::Fast).routes == std::vector<std::string>{"special-cm"});
}

TEST_CASE("generalized cohen-macaulay and buchsbaum") {
  CHECK(symbolic2_gcm(c4).value);
  for (int m = 2; m <= 4; ++m) CHECK(symbolic2_gcm(complete_bipartite(m, m)).value);
  CHECK_FALSE(symbolic2_gcm(cherry).value);
  CHECK(symbolic2_gcm(cherry).witness.clause == "not-unmixed");
  CHECK(symbolic2_buchsbaum(p4).value);
  CHECK_FALSE(symbolic2_buchsbaum(c4).value);
  CHECK(ordinary2_gcm(c4).value);
  CHECK(ordinary2_buchsbaum(p4).value);
}

TEST_CASE("takayama table of the square") {
  const MonomialIdeal i2 = symbolic_square(c4);
  const std::vector<DegreeVector> degrees{DegreeVector::zero(4), DegreeVector{1, 1, 0, 0}, DegreeVector{1, 0, 1, 0}};
  for (FieldSpec f : {q, f2}) {
    const TakayamaTable t = takayama_table(i2, degrees, 0, 2, f);
    CHECK(t.at(1, DegreeVector::zero(4)) == 1);
    CHECK(t.at(1, DegreeVector{1, 1, 0, 0}) == 1);
    CHECK(t.at(0, DegreeVector::zero(4)) == 0);
    CHECK_THROWS_AS((void)t.at(3, DegreeVector::zero(4)), std::out_of_range);
  }
  CHECK_THROWS_AS(takayama_table(i2, degrees, 0, 2, FieldSpec::all_fields()), std::invalid_argument);
}

TEST_CASE("takayama table matches the generic formula") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, false)) {
      if (g.edge_count() == 0 || n > 4) continue;
      const LocalCohomologyOracle o{g};
      std::vector<DegreeVector> degrees;
      std::vector<std::vector<int>> raw;
      o.for_each_degree([&](const std::vector<int>& a) {
        degrees.emplace_back(a);
        raw.push_back(a);
      });
      for (int p : {0, 2}) {
        const TakayamaTable t = takayama_table(o.ideal, degrees, 0, alpha(g), p == 0 ? q : f2);
        for (std::size_t k = 0; k < degrees.size(); ++k)
          for (int i = 0; i <= alpha(g); ++i) {
            CAPTURE(g.describe());
            CAPTURE(degrees[k].to_string());
            CAPTURE(i);
            CHECK(t.at(i, degrees[k]) == o.dim(i, raw[k], p));
          }
      }
    }
}

TEST_CASE("cm and gcm verdicts match local cohomology") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, false)) {
      if (g.edge_count() == 0 || !g.isolated_vertices().empty()) continue;
      const LocalCohomologyOracle o{g};
      for (int p : {0, 2}) {
        const FieldSpec f = p == 0 ? q : f2;
        const auto [cm, gcm] = o.cm_and_gcm(p);
        CAPTURE(g.describe());
        CHECK(symbolic2_cm(g, f).value == cm);
        CHECK(symbolic2_gcm(g, f).value == gcm);
      }
    }
}

TEST_CASE("main2 support") {
  CHECK(verify_main2_support(c4, q).holds);
  CHECK(verify_main2_support(p4, f2).holds);
  CHECK_THROWS_AS(verify_main2_support(cherry, q), std::invalid_argument);
  CHECK_THROWS_AS(verify_main2_support(c4, FieldSpec::all_fields()), std::invalid_argument);
}

TEST_CASE("classify") {
  const ClassificationReport c = classify(c4);
  CHECK(c.at("symbolic2_gcm").value);
  CHECK_FALSE(c.at("symbolic2_buchsbaum").value);
  CHECK(c.implication_violations().empty());
  const ClassificationReport p = classify(p4);
  CHECK(p.at("symbolic2_buchsbaum").value);
  CHECK_FALSE(p.at("symbolic2_cm").value);
  const ClassificationReport d = classify(two_edges);
  CHECK(d.at("symbolic2_cm").value);
  CHECK(d.at("ordinary2_cm").value);
  CHECK(c.properties.size() == report_property_keys().size());
  CHECK_THROWS_AS(classify(Graph(3, {{1, 2}})), IsolatedVerticesError);
  ClassifyOptions allow;
  allow.allow_isolated = true;
  CHECK_NOTHROW(classify(Graph(3, {{1, 2}}), allow));
}
