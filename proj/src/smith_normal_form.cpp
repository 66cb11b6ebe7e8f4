#include "edgepow/smith_normal_form.hpp"

#include <optional>

namespace edgepow {

namespace {

struct Overflow {};

// Arithmetic policies: Checked64 throws Overflow instead of wrapping.
struct Checked64 {
  using Int = std::int64_t;
  static Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Int abs(Int a) {
    if (a == INT64_MIN) throw Overflow{};
    return a < 0 ? -a : a;
  }
};

struct Arbitrary {
  using Int = BigInt;
  static Int mul(const Int& a, const Int& b) { return a * b; }
  static Int sub(const Int& a, const Int& b) { return a - b; }
  static Int add(const Int& a, const Int& b) { return a + b; }
  static Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }
};

template <class Ops>
class Reducer {
 public:
  using Int = typename Ops::Int;

  Reducer(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    a_.reserve(m.data().size());
    for (std::int64_t v : m.data()) a_.emplace_back(v);
  }

  std::vector<BigInt> run() {
    std::vector<BigInt> factors;
    const int limit = rows_ < cols_ ? rows_ : cols_;
    for (int t = 0; t < limit; ++t) {
      if (!move_min_to(t)) break;
      while (!clear_cross(t)) {
      }
      factors.emplace_back(Ops::abs(at(t, t)));
    }
    return factors;
  }

 private:
  Int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)]; }

  void swap_rows(int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
  }
  void swap_cols(int c1, int c2) {
    if (c1 == c2) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, c1), at(r, c2));
  }

  // Brings the nonzero entry of least absolute value in the trailing block to (t,t).
  bool move_min_to(int t) {
    std::optional<Int> best;
    int br = -1;
    int bc = -1;
    for (int r = t; r < rows_; ++r)
      for (int c = t; c < cols_; ++c) {
        const Int& v = at(r, c);
        if (v == 0) continue;
        Int av = Ops::abs(v);
        if (!best || av < *best) {
          best = av;
          br = r;
          bc = c;
          if (av == 1) goto found;
        }
      }
    if (!best) return false;
  found:
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  // One reduction sweep of row t and column t. Returns true once both are
  // zero off the pivot and the pivot divides the trailing block.
  bool clear_cross(int t) {
    bool clean = true;
    for (int r = t + 1; r < rows_; ++r) {
      if (at(r, t) == 0) continue;
      const Int q = at(r, t) / at(t, t);
      if (q != 0)
        for (int c = t; c < cols_; ++c)
          if (at(t, c) != 0) at(r, c) = Ops::sub(at(r, c), Ops::mul(q, at(t, c)));
      if (at(r, t) != 0) clean = false;
    }
    for (int c = t + 1; c < cols_; ++c) {
      if (at(t, c) == 0) continue;
      const Int q = at(t, c) / at(t, t);
      if (q != 0)
        for (int r = t; r < rows_; ++r)
          if (at(r, t) != 0) at(r, c) = Ops::sub(at(r, c), Ops::mul(q, at(r, t)));
      if (at(t, c) != 0) clean = false;
    }
    if (!clean) {
      // A remainder smaller than the pivot survived; make it the pivot.
      int br = t;
      int bc = t;
      Int best = Ops::abs(at(t, t));
      for (int r = t + 1; r < rows_; ++r)
        if (at(r, t) != 0 && Ops::abs(at(r, t)) < best) {
          best = Ops::abs(at(r, t));
          br = r;
          bc = t;
        }
      for (int c = t + 1; c < cols_; ++c)
        if (at(t, c) != 0 && Ops::abs(at(t, c)) < best) {
          best = Ops::abs(at(t, c));
          br = t;
          bc = c;
        }
      swap_rows(t, br);
      swap_cols(t, bc);
      return false;
    }
    const Int pivot = at(t, t);
    for (int r = t + 1; r < rows_; ++r)
      for (int c = t + 1; c < cols_; ++c)
        if (at(r, c) % pivot != 0) {
          for (int k = t; k < cols_; ++k) at(t, k) = Ops::add(at(t, k), at(r, k));
          return false;
        }
    return true;
  }

  int rows_;
  int cols_;
  std::vector<Int> a_;
};

}  // namespace

std::vector<BigInt> smith_normal_form(const IntMatrix& m) {
  try {
    return Reducer<Checked64>(m).run();
  } catch (const Overflow&) {
    return Reducer<Arbitrary>(m).run();
  }
}

}  // namespace edgepow
