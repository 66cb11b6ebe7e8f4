#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "edgepow/fourier_motzkin.hpp"
#include "edgepow/ideals.hpp"

namespace edgepow {

/// The four facets {1,2,3}, {2,3,4}, {3,4,5}, {4,5,6} carrying the exponents
/// a, b, c, d of the six-variable example ideal.
std::array<VertexSet, 4> example_facets();

/// (x4,x5,x6)^a n (x1,x5,x6)^b n (x1,x2,x6)^c n (x1,x2,x3)^d with the
/// zero-exponent components dropped. Throws std::invalid_argument on a
/// negative or all-zero input.
MonomialIdeal example_ideal(int a, int b, int c, int d);

/// The facet sets Gamma quoted as the complete list of non-Buchsbaum
/// subcomplexes: {123,345}, {123,456}, {234,456}, {123,234,456}, {123,345,456}.
std::vector<std::vector<VertexSet>> example_listed_gammas();

/// The three closed-form systems; systems()[k] is true when (a,b,c,d)
/// satisfies system k+1.
std::array<bool, 3> example_systems(int a, int b, int c, int d);

/// Literal constraint system for L_Gamma over all four facets (a zero
/// exponent contributes "sum < 0" for facets in Gamma, "sum >= 0" otherwise).
std::vector<LinearConstraint> example_gamma_system(int a, int b, int c, int d, const std::vector<VertexSet>& gamma);

struct ExampleIdealDecision {
  std::array<int, 4> exponents{};
  std::array<bool, 3> systems{};
  /// No system is satisfied.
  bool gcm_by_systems = false;
  /// L_Gamma empty for every listed Gamma.
  bool gcm_by_enumeration = false;
  /// L_Gamma empty for every non-Cohen-Macaulay Gamma among the facets of the ideal.
  bool cm = false;
  /// L_Gamma empty for every non-Buchsbaum Gamma among the facets of the ideal.
  bool gcm_rederived = false;

  /// Non-Buchsbaum facet subsets of the full four-facet list, found by filtering.
  std::vector<std::vector<VertexSet>> rederived_gammas;
  /// Listed but Buchsbaum, and non-Buchsbaum but not listed.
  std::vector<std::vector<VertexSet>> listed_not_rederived;
  std::vector<std::vector<VertexSet>> rederived_not_listed;

  /// First satisfied system (1-based) when gcm_by_systems is false.
  std::optional<int> witness_system;
  /// First listed Gamma with L_Gamma nonempty, and its lexicographically first point.
  std::optional<std::vector<VertexSet>> witness_gamma;
  std::optional<DegreeVector> witness_point;

  /// Gammas whose Fourier-Motzkin verdict differs from enumeration.
  std::vector<std::string> fm_disagreements;
  std::size_t fm_checks = 0;
};

/// Decides the example by every route. Throws like example_ideal.
ExampleIdealDecision example_ideal_decision(int a, int b, int c, int d);

}  // namespace edgepow
