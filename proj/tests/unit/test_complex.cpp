#include <doctest.h>

#include <random>

#include "edgepow/complex.hpp"
#include "edgepow/patterns.hpp"
#include "oracles.hpp"

using namespace edgepow;

namespace {
using Facets = std::vector<VertexSet>;
const Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
const SimplicialComplex dc4 = independence_complex(c4);
SimplicialComplex cx(Facets f) { return SimplicialComplex::generated_by(std::move(f)); }
}  // namespace

TEST_CASE("independence complex") {
  CHECK(dc4.facets() == Facets{{1, 3}, {2, 4}});
  CHECK(dc4.ground() == VertexSet{1, 2, 3, 4});
  CHECK(independence_complex(Graph(3)).facets() == Facets{{1, 2, 3}});
  CHECK(independence_complex(Graph()).is_irrelevant());
}

TEST_CASE("dimension and purity") {
  CHECK(dc4.dim() == 1);
  CHECK(dc4.is_pure());
  const auto mixed = cx({{1}, {2, 3}});
  CHECK(mixed.dim() == 1);
  CHECK_FALSE(mixed.is_pure());
  CHECK(SimplicialComplex::irrelevant().dim() == -1);
  CHECK(SimplicialComplex::irrelevant().is_pure());
  CHECK_THROWS_AS((void)SimplicialComplex::void_complex().dim(), std::logic_error);
}

TEST_CASE("VOID and IRRELEVANT differ") {
  CHECK(SimplicialComplex::void_complex() != SimplicialComplex::irrelevant());
  CHECK(SimplicialComplex::void_complex().is_void());
  CHECK_FALSE(SimplicialComplex::irrelevant().is_void());
  CHECK(SimplicialComplex::irrelevant().contains_face(VertexSet{}));
  CHECK_FALSE(SimplicialComplex::void_complex().contains_face(VertexSet{}));
}

TEST_CASE("link and star") {
  CHECK(link(dc4, {1}).facets() == Facets{{3}});
  CHECK(star(dc4, {1}).facets() == Facets{{1, 3}});
  CHECK(link(dc4, {}).same_faces(dc4));
  CHECK(star(dc4, {}).same_faces(dc4));
  CHECK(link(dc4, {1, 2}).is_void());
  CHECK(star(dc4, {1, 2}).is_void());
  CHECK(link(dc4, {1, 3}).is_irrelevant());
}

TEST_CASE("join") {
  CHECK(join(SimplicialComplex::simplex({1}), cx({{2}, {3}})).facets() == Facets{{1, 2}, {1, 3}});
  CHECK(join(SimplicialComplex::irrelevant(), dc4).same_faces(dc4));
  CHECK(join(SimplicialComplex::void_complex(), dc4).is_void());
  CHECK(join(SimplicialComplex::simplex({1, 2}), SimplicialComplex::simplex({3})).facets() == Facets{{1, 2, 3}});
  CHECK_THROWS_AS(join(SimplicialComplex::simplex({1, 2}), SimplicialComplex::simplex({2})), std::invalid_argument);
}

TEST_CASE("union and intersection") {
  CHECK(union_of(star(dc4, {1}), star(dc4, {2})).facets() == Facets{{1, 3}, {2, 4}});
  CHECK(intersection(dc4, dc4) == dc4);
  CHECK(intersection(cx({{1, 2}}), cx({{2, 3}})).facets() == Facets{{2}});
  CHECK(intersection(cx({{1}}), cx({{2}})).is_irrelevant());
}

TEST_CASE("delta_v") {
  CHECK(delta_v(dc4, {1, 2}).facets() == Facets{{1, 3}, {2, 4}});
  CHECK(delta_v(dc4, {}).same_faces(dc4));
  CHECK(delta_v(dc4, {1, 2, 3, 4}).is_void());
  CHECK_THROWS_AS(delta_v(cx({{1}, {2, 3}}), {1}), std::invalid_argument);
}

TEST_CASE("star_union") {
  CHECK(star_union(dc4, {1, 2}).facets() == Facets{{1, 3}, {2, 4}});
  CHECK(star_union(dc4, {3}).same_faces(dc4));
  CHECK(star_union(dc4, {1, 3}).facets() == Facets{{1, 3}});
  CHECK(star_union(dc4, {}).is_void());
}

TEST_CASE("cones and contractible complexes") {
  CHECK(is_cone(join(SimplicialComplex::simplex({1}), cx({{2}, {3}}))));
  CHECK_FALSE(is_cone(dc4));
  CHECK_FALSE(is_contractible_complex(cx({{1, 2}, {2, 3}, {1, 3}})));
  for (int n = 1; n <= 5; ++n)
    for_each_graph(n, false, [](const Graph& g) { CHECK(is_contractible_complex(independence_complex(g))); });
}

TEST_CASE("facets stay an antichain in lex order") {
  std::mt19937_64 rng(7);
  auto antichain = [](const SimplicialComplex& d) {
    for (std::size_t i = 0; i < d.facets().size(); ++i)
      for (std::size_t j = 0; j < d.facets().size(); ++j)
        if (i != j && d.facets()[i].subset_of(d.facets()[j])) return false;
    for (std::size_t i = 1; i < d.facets().size(); ++i)
      if (!lex_less(d.facets()[i - 1], d.facets()[i])) return false;
    return true;
  };
  for (int t = 0; t < 300; ++t) {
    const auto a = oracle::random_complex(rng, 6, 5);
    const auto b = oracle::random_complex(rng, 6, 5);
    const VertexSet f = a.facets().front() & VertexSet{1, 2, 3};
    CHECK(antichain(a));
    CHECK(antichain(link(a, f)));
    CHECK(antichain(star(a, f)));
    CHECK(antichain(union_of(a, b)));
    CHECK(antichain(intersection(a, b)));
    CHECK(antichain(star_union(a, VertexSet{1, 2})));
  }
}

TEST_CASE("link and star match the definitions") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto d = oracle::random_complex(rng, 6, 4);
    for (VertexSet f : oracle::faces(d)) {
      CHECK(link(d, f).same_faces(oracle::link(d, f)));
      // star = <F> * link
      CHECK(star(d, f).same_faces(join(SimplicialComplex::simplex(f), link(d, f).with_ground(d.ground() - f))));
    }
  }
}
