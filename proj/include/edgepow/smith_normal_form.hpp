#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace edgepow {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {}

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }
  [[nodiscard]] std::int64_t& at(int r, int c) { return data_[index(r, c)]; }
  [[nodiscard]] std::int64_t at(int r, int c) const { return data_[index(r, c)]; }
  [[nodiscard]] const std::vector<std::int64_t>& data() const { return data_; }

  bool operator==(const IntMatrix&) const = default;

 private:
  [[nodiscard]] std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Nonzero invariant factors d_1 | d_2 | ... | d_r of m (all positive);
/// r is the rank of m.
///
/// Elimination runs in checked 64-bit arithmetic with the entry of least
/// absolute value as pivot and restarts in arbitrary precision if an
/// intermediate value would overflow, so the result is always exact.
std::vector<BigInt> smith_normal_form(const IntMatrix& m);

}  // namespace edgepow
