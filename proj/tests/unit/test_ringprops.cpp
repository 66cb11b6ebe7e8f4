#include <doctest.h>

#include <random>

#include "edgepow/ringprops.hpp"
#include "oracles.hpp"

using namespace edgepow;

namespace {
using Facets = std::vector<VertexSet>;
SimplicialComplex cx(Facets f) { return SimplicialComplex::generated_by(std::move(f)); }
const SimplicialComplex dc4 = cx({{1, 3}, {2, 4}});
const SimplicialComplex dp4 = cx({{1, 3}, {1, 4}, {2, 4}});
const FieldSpec all = FieldSpec::all_fields();
const FieldSpec q = FieldSpec::char0();
const FieldSpec f2 = FieldSpec::characteristic(2);

bool oracle_all_fields(const SimplicialComplex& d, bool buchsbaum) {
  for (int p : {0, 2, 3, 5})
    if (!(buchsbaum ? oracle::buchsbaum(d, p) : oracle::cm(d, p))) return false;
  return true;
}
}  // namespace

TEST_CASE("cohen-macaulay examples") {
  CHECK(is_cm(SimplicialComplex::simplex({1, 2, 3})));
  CHECK_FALSE(is_cm(dc4));
  CHECK(is_cm(dp4));
  CHECK(is_cm(SimplicialComplex::void_complex()));
  CHECK(is_cm(SimplicialComplex::irrelevant()));
  const ReisnerCheck r = check_cm(dc4);
  CHECK_FALSE(r.holds);
  REQUIRE(r.face);
  CHECK(r.face->empty());
  CHECK(r.degree == 0);
  CHECK_FALSE(r.describe().empty());
}

TEST_CASE("buchsbaum examples") {
  CHECK(is_buchsbaum(dc4));
  CHECK(is_buchsbaum(dp4));
  CHECK_FALSE(is_buchsbaum(cx({{1}, {2, 3}})));
  CHECK_FALSE(check_buchsbaum(cx({{1}, {2, 3}})).pure);
  CHECK(is_buchsbaum(SimplicialComplex::void_complex()));
  CHECK(is_gcm_complex(dc4));
  CHECK_FALSE(is_gcm_complex(cx({{1, 2}, {3}})));
}

TEST_CASE("projective plane splits by characteristic") {
  const auto p = oracle::rp2();
  // vertex links are 5-cycles, so Buchsbaum over every field; only the empty
  // face sees the Z/2 in degree 1
  CHECK(is_gcm_complex(p, all));
  CHECK(is_gcm_complex(p, f2));
  CHECK(is_gcm_complex(p, q));
  CHECK(oracle::buchsbaum(p, 2));
  CHECK(is_cm(p, q));
  CHECK_FALSE(is_cm(p, all));
  CHECK(is_cm(p, FieldSpec::characteristic(3)));
}

TEST_CASE("reisner checks agree with the brute-force definition") {
  std::mt19937_64 rng(17);
  std::vector<SimplicialComplex> corpus{oracle::rp2(), dc4, dp4};
  for (int t = 0; t < 250; ++t) corpus.push_back(oracle::random_complex(rng, 6, 5));
  // pure complexes are rare among random ones; CM ones rarer
  for (int t = 0; t < 150; ++t) {
    const auto g = oracle::random_graph(rng, 6, 0.4);
    corpus.push_back(independence_complex(g));
  }
  for (const auto& d : corpus) {
    CAPTURE(d.to_string());
    CHECK(is_cm(d, q) == oracle::cm(d, 0));
    CHECK(is_cm(d, f2) == oracle::cm(d, 2));
    CHECK(is_buchsbaum(d, q) == oracle::buchsbaum(d, 0));
    CHECK(is_buchsbaum(d, f2) == oracle::buchsbaum(d, 2));
    CHECK(is_cm(d, all) == oracle_all_fields(d, false));
    CHECK(is_buchsbaum(d, all) == oracle_all_fields(d, true));
    CHECK(is_buchsbaum(d, all) == is_buchsbaum_direct(d, all));
  }
}

TEST_CASE("link_homology_vanishes") {
  CHECK(link_homology_vanishes(SimplicialComplex::simplex({1, 2}), 5, all));
  CHECK_FALSE(link_homology_vanishes(dc4, 1, all));
  CHECK(link_homology_vanishes(dc4, 0, all));
  CHECK(link_homology_vanishes(oracle::rp2(), 2, q));
  CHECK_FALSE(link_homology_vanishes(oracle::rp2(), 2, f2));
  CHECK_FALSE(link_homology_vanishes(SimplicialComplex::irrelevant(), 0, all));
}
