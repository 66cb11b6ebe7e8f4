#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edgepow/complex.hpp"
#include "edgepow/field_spec.hpp"
#include "edgepow/smith_normal_form.hpp"

namespace edgepow {

/// One reduced integral homology group: Z^free_rank plus the cyclic
/// torsion factors (each > 1, each dividing the next).
struct HomologyGroup {
  std::int64_t free_rank = 0;
  std::vector<BigInt> torsion;

  [[nodiscard]] bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
};

/// Reduced integral homology in degrees -1..max_degree(). Degrees outside
/// the stored range are zero.
class HomologyProfile {
 public:
  HomologyProfile() = default;
  /// groups[0] is degree -1.
  explicit HomologyProfile(std::vector<HomologyGroup> groups) : groups_(std::move(groups)) {}

  [[nodiscard]] int max_degree() const { return static_cast<int>(groups_.size()) - 2; }
  [[nodiscard]] const HomologyGroup& group(int j) const;
  [[nodiscard]] std::int64_t free_rank(int j) const { return group(j).free_rank; }
  [[nodiscard]] const std::vector<BigInt>& torsion(int j) const { return group(j).torsion; }
  /// Every stored group vanishes.
  [[nodiscard]] bool is_zero() const;
  /// Number of torsion factors of H_j divisible by p.
  [[nodiscard]] std::int64_t torsion_count(int j, int p) const;

  bool operator==(const HomologyProfile&) const = default;

 private:
  std::vector<HomologyGroup> groups_;
};

/// dim_k of the reduced homology groups over one field, indexed by degree.
class BettiNumbers {
 public:
  BettiNumbers() = default;
  explicit BettiNumbers(std::vector<std::int64_t> from_minus_one) : values_(std::move(from_minus_one)) {}

  [[nodiscard]] int max_degree() const { return static_cast<int>(values_.size()) - 2; }
  /// Zero outside the stored range.
  [[nodiscard]] std::int64_t operator[](int j) const {
    const int k = j + 1;
    return k >= 0 && k < static_cast<int>(values_.size()) ? values_[static_cast<std::size_t>(k)] : 0;
  }
  [[nodiscard]] bool all_zero() const;
  bool operator==(const BettiNumbers&) const = default;

 private:
  std::vector<std::int64_t> values_;
};

/// Matrix of the boundary map from the j-dimensional to the
/// (j-1)-dimensional faces, both ordered lexicographically, oriented by
/// sorted vertex order. The empty face spans degree -1, so boundary_matrix(d, 0)
/// is the augmentation row. Throws std::invalid_argument on VOID.
IntMatrix boundary_matrix(const SimplicialComplex& d, int j);

/// Reduced integral homology via Smith normal form. VOID gives an empty
/// profile; IRRELEVANT has Z in degree -1. With max_degree set, only degrees
/// -1..max_degree are computed.
HomologyProfile reduced_homology(const SimplicialComplex& d, std::optional<int> max_degree = std::nullopt);

/// Universal coefficients: for characteristic p,
/// dim H_j = free_rank(j) + #{torsion of H_j divisible by p} + #{torsion of H_{j-1} divisible by p}.
/// Throws std::invalid_argument for FieldSpec::all_fields().
BettiNumbers betti(const HomologyProfile& h, FieldSpec field);
BettiNumbers betti(const SimplicialComplex& d, FieldSpec field);

/// H_j(d; k) = 0 for every j < t (j >= -1) over the given field(s); for
/// AllFields this means the integral groups vanish.
bool homology_vanishes_below(const HomologyProfile& h, int t, FieldSpec field);

}  // namespace edgepow
