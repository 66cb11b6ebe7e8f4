#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace edgepow {

/// Coefficient field for homological vanishing questions: every field at
/// once (decided through integral homology), characteristic zero, or a
/// fixed prime characteristic.
class FieldSpec {
 public:
  enum class Kind { AllFields, Char0, CharP };

  /// Defaults to AllFields.
  constexpr FieldSpec() = default;

  static constexpr FieldSpec all_fields() { return FieldSpec(Kind::AllFields, 0); }
  static constexpr FieldSpec char0() { return FieldSpec(Kind::Char0, 0); }
  /// Throws std::invalid_argument unless p is prime.
  static FieldSpec characteristic(int p);
  /// "all", "0", or a prime such as "2".
  static FieldSpec parse(std::string_view text);

  [[nodiscard]] constexpr Kind kind() const { return kind_; }
  /// The prime p for CharP, 0 otherwise.
  [[nodiscard]] constexpr int prime() const { return p_; }
  [[nodiscard]] std::string to_string() const;

  constexpr bool operator==(const FieldSpec&) const = default;
  constexpr auto operator<=>(const FieldSpec&) const = default;

 private:
  constexpr FieldSpec(Kind kind, int p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::AllFields;
  int p_ = 0;
};

bool is_prime(int p);

}  // namespace edgepow
