#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edgepow/complex.hpp"
#include "edgepow/graph.hpp"

namespace edgepow {

/// Exponent vector of a monomial; entry 0 belongs to x_1.
using ExponentVector = std::vector<int>;

/// Multidegree a in Z^n; entry 0 belongs to x_1.
class DegreeVector {
 public:
  DegreeVector() = default;
  explicit DegreeVector(std::vector<int> a) : a_(std::move(a)) {}
  DegreeVector(std::initializer_list<int> a) : a_(a) {}
  static DegreeVector zero(int n) { return DegreeVector(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  /// Indicator vector of s in Z^n (e_u + e_v for s = {u,v}).
  static DegreeVector indicator(int n, VertexSet s);

  [[nodiscard]] int size() const { return static_cast<int>(a_.size()); }
  /// Coordinate of variable j, 1-based.
  [[nodiscard]] int at(int j) const { return a_[static_cast<std::size_t>(j - 1)]; }
  [[nodiscard]] const std::vector<int>& values() const { return a_; }
  /// G_a = {j : a_j < 0}.
  [[nodiscard]] VertexSet negative_support() const;
  /// {j : a_j > 0}.
  [[nodiscard]] VertexSet positive_support() const;
  [[nodiscard]] bool is_nonnegative() const { return negative_support().empty(); }
  [[nodiscard]] std::string to_string() const;

  bool operator==(const DegreeVector&) const = default;
  auto operator<=>(const DegreeVector&) const = default;

 private:
  std::vector<int> a_;
};

/// P_F-primary component P_F^m with P_F = (x_j : j not in F).
struct Component {
  VertexSet facet;
  int exponent = 1;
  bool operator==(const Component&) const = default;
};

/// Monomial ideal in one of two forms:
///  - Components: the intersection of P_F^{m_F} over an antichain of facets F
///    (taken to be the full irredundant primary decomposition);
///  - Generators: an antichain of exponent vectors.
/// The rho vector (largest exponent of each variable over the minimal
/// generators) is computed on first use and shared between copies.
class MonomialIdeal {
 public:
  enum class Form { Components, Generators };

  /// Throws std::invalid_argument unless the facets form an antichain in
  /// 1..n and every exponent is at least 1.
  static MonomialIdeal from_components(int n, std::vector<Component> components);
  /// Minimalizes the list; throws std::invalid_argument on wrong lengths or
  /// negative entries.
  static MonomialIdeal from_generators(int n, std::vector<ExponentVector> generators);

  [[nodiscard]] int variable_count() const { return n_; }
  [[nodiscard]] Form form() const { return form_; }
  /// Throws std::logic_error in Generators form.
  [[nodiscard]] const std::vector<Component>& components() const;
  /// Throws std::logic_error in Components form.
  [[nodiscard]] const std::vector<ExponentVector>& generators() const;

  /// rho_j for j = 1..n, stored 0-based.
  [[nodiscard]] const std::vector<int>& rho() const;
  /// Largest m_F (Components form) or largest exponent (Generators form).
  [[nodiscard]] int max_exponent() const;
  /// Components form: every facet has the same size.
  [[nodiscard]] bool is_unmixed() const;
  /// The complex whose Stanley-Reisner ideal is the radical, on ground 1..n.
  [[nodiscard]] SimplicialComplex radical_complex() const;

  bool operator==(const MonomialIdeal& other) const {
    return n_ == other.n_ && form_ == other.form_ && components_ == other.components_ &&
           generators_ == other.generators_;
  }

 private:
  struct RhoCache;
  MonomialIdeal() = default;

  int n_ = 0;
  Form form_ = Form::Generators;
  std::vector<Component> components_;
  std::vector<ExponentVector> generators_;
  std::shared_ptr<RhoCache> rho_cache_;
};

/// Drops divisible and repeated vectors; result in lexicographic order.
std::vector<ExponentVector> minimalize(std::vector<ExponentVector> monomials);

/// m-th symbolic power: the intersection of P_F^m over the facets of d, in
/// n = max(ground) variables. Throws std::invalid_argument on VOID,
/// IRRELEVANT, or m < 1.
MonomialIdeal symbolic_power(const SimplicialComplex& d, int m);

/// x^a in I. Throws std::invalid_argument on a negative entry or wrong length.
bool membership(const MonomialIdeal& ideal, const DegreeVector& a);

/// I(G)^m by products of m edge monomials, minimalized, in n = max label
/// variables. Throws std::invalid_argument if g has no edges.
MonomialIdeal ordinary_power_generators(const Graph& g, int m = 2);

/// Minimal elements of {a in {0..cap}^n : x^a in I}; equal to the minimal
/// generators whenever every minimal generator has coordinates <= cap
/// (cap = max m_F always suffices, since lowering a coordinate above m_F to
/// m_F keeps every component sum that contains it at least m_F).
MonomialIdeal minimal_generators_of_components(const MonomialIdeal& ideal, int cap);

/// Degree complex of I at a.
/// Components form (unmixed, a in N^n): facets F with x^a not in I_F.
/// Generators form (any a in Z^n): faces F \ G_a with G_a <= F such that every
/// minimal generator x^b has some i outside F with a_i < b_i.
/// Throws std::invalid_argument on mixed components or, in Components form,
/// negative degrees.
SimplicialComplex degree_complex(const MonomialIdeal& ideal, const DegreeVector& a);

/// Result of deciding whether L_Gamma(I) is empty.
struct LGammaResult {
  bool empty = true;
  /// Lexicographically first a in the search box when nonempty.
  std::optional<DegreeVector> witness;
};

/// L_Gamma(I) = {a in N^n : x^a in I_F for F not in Gamma, x^a not in I_G for G in Gamma}.
/// Decided by enumerating {0..M}^n with M = max m_F: any solution truncated
/// coordinatewise at M is still a solution (sums that must stay small only
/// shrink, and a sum that must reach m_F <= M still does once one of its
/// coordinates sits at M). Throws std::invalid_argument unless the facets of
/// gamma are facets of I's components.
LGammaResult l_gamma_empty(const MonomialIdeal& ideal, std::span<const VertexSet> gamma_facets);

/// Truncation used by l_gamma_empty: min(a_j, cap) coordinatewise.
DegreeVector truncate_to_box(const DegreeVector& a, int cap);

}  // namespace edgepow
