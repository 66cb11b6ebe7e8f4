#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace edgepow {

enum class Relation { GreaterEqual, Greater, LessEqual, Less };

/// sum_i coefficients[i] * y_i  (relation)  bound.
struct LinearConstraint {
  std::vector<std::int64_t> coefficients;
  Relation relation = Relation::GreaterEqual;
  std::int64_t bound = 0;

  [[nodiscard]] std::string to_string() const;
};

enum class FeasibilityMode {
  /// Plain Fourier-Motzkin over the rationals; strictness is tracked.
  Rational,
  /// Every derived constraint is tightened as valid for integer points
  /// (strict a.y > b becomes a.y >= b + 1, then divide by the coefficient
  /// gcd and round the bound up). Infeasible here implies no integer point.
  IntegerRounded,
};

/// Feasibility of the system together with y_i >= 0 for every variable, by
/// eliminating variables one at a time. Throws std::invalid_argument if a
/// constraint has the wrong number of coefficients, std::overflow_error if
/// a combination leaves 64-bit range.
bool fourier_motzkin_feasible(std::span<const LinearConstraint> constraints, int variables,
                              FeasibilityMode mode = FeasibilityMode::IntegerRounded);

}  // namespace edgepow
