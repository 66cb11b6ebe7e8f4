#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgepow {

/// A set of vertex labels in 1..63 stored as a bitmask (bit v <-> label v).
///
/// Every combinatorial object in the library (graphs, faces, facets,
/// supports of degree vectors) is built on this type, so it is a plain
/// value type with cheap copies and bit-parallel set algebra.
class VertexSet {
 public:
  static constexpr int kMaxLabel = 63;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits & kValidMask) {}
  VertexSet(std::initializer_list<int> labels) {
    for (int v : labels) insert(v);
  }
  explicit VertexSet(std::span<const int> labels) {
    for (int v : labels) insert(v);
  }

  /// {lo, lo+1, ..., hi}; empty when hi < lo.
  static VertexSet range(int lo, int hi) {
    VertexSet s;
    for (int v = lo; v <= hi; ++v) s.insert(v);
    return s;
  }

  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }
  [[nodiscard]] constexpr bool contains(int v) const {
    return v >= 1 && v <= kMaxLabel && ((bits_ >> v) & 1U) != 0;
  }
  [[nodiscard]] constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  [[nodiscard]] constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  /// Smallest label; 0 for the empty set.
  [[nodiscard]] constexpr int min() const {
    return bits_ == 0 ? 0 : std::countr_zero(bits_);
  }
  /// Largest label; 0 for the empty set.
  [[nodiscard]] constexpr int max() const {
    return bits_ == 0 ? 0 : 63 - std::countl_zero(bits_);
  }

  void insert(int v) {
    check_label(v);
    bits_ |= std::uint64_t{1} << v;
  }
  void erase(int v) {
    if (v >= 1 && v <= kMaxLabel) bits_ &= ~(std::uint64_t{1} << v);
  }
  [[nodiscard]] VertexSet with(int v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  [[nodiscard]] VertexSet without(int v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;
  /// Numeric order on the bitmask; use lex_less for the reporting order.
  constexpr auto operator<=>(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  [[nodiscard]] constexpr iterator begin() const { return iterator(bits_); }
  [[nodiscard]] constexpr iterator end() const { return iterator(0); }

  [[nodiscard]] std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
  }
  /// "{1,3,4}"
  [[nodiscard]] std::string to_string() const;

 private:
  static constexpr std::uint64_t kValidMask = ~std::uint64_t{1};
  static void check_label(int v) {
    if (v < 1 || v > kMaxLabel)
      throw std::out_of_range("vertex label " + std::to_string(v) +
                              " outside 1.." + std::to_string(kMaxLabel));
  }

  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted element lists ({1} < {1,3} < {1,4} < {2}).
constexpr bool lex_less(VertexSet a, VertexSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int m = std::countr_zero(diff);
  // Both sets agree below m. The one holding m is smaller unless the other
  // has no element above m (then the other is a proper prefix).
  const std::uint64_t above = ~((std::uint64_t{2} << m) - 1);
  if ((b.bits() >> m) & 1U) return (a.bits() & above) == 0;
  return (b.bits() & above) != 0;
}

struct LexLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

std::ostream& operator<<(std::ostream& os, VertexSet s);

}  // namespace edgepow
