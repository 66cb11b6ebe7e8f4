#include "edgepow/fourier_motzkin.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace edgepow {

namespace {

// c.y >= b, or c.y > b when strict
struct Row {
  std::vector<std::int64_t> c;
  std::int64_t b = 0;
  bool strict = false;
  auto operator<=>(const Row&) const = default;
};

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("fourier_motzkin_feasible: coefficient overflow");
  return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("fourier_motzkin_feasible: coefficient overflow");
  return r;
}

std::int64_t floor_div(std::int64_t x, std::int64_t d) {
  std::int64_t q = x / d;
  if ((x % d != 0) && ((x < 0) != (d < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t x, std::int64_t d) { return -floor_div(-x, d); }

void normalize(Row& r, FeasibilityMode mode) {
  std::int64_t g = 0;
  for (std::int64_t x : r.c) g = std::gcd(g, x);
  if (mode == FeasibilityMode::IntegerRounded) {
    if (r.strict) {
      r.b = checked_add(r.b, 1);
      r.strict = false;
    }
    if (g > 1) {
      for (std::int64_t& x : r.c) x /= g;
      r.b = ceil_div(r.b, g);
    }
    return;
  }
  // exact division only, so the bound stays integral
  if (g > 1 && r.b % g == 0) {
    for (std::int64_t& x : r.c) x /= g;
    r.b /= g;
  }
}

bool all_zero(const Row& r) {
  return std::all_of(r.c.begin(), r.c.end(), [](std::int64_t x) { return x == 0; });
}

// 0 >= b or 0 > b
bool trivially_satisfied(const Row& r) { return r.strict ? r.b < 0 : r.b <= 0; }

}  // namespace

std::string LinearConstraint::to_string() const {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const std::int64_t c = coefficients[i];
    if (c == 0) continue;
    if (!first) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "y" + std::to_string(i + 1);
    first = false;
  }
  if (first) out = "0";
  switch (relation) {
    case Relation::GreaterEqual: out += " >= "; break;
    case Relation::Greater: out += " > "; break;
    case Relation::LessEqual: out += " <= "; break;
    case Relation::Less: out += " < "; break;
  }
  return out + std::to_string(bound);
}

bool fourier_motzkin_feasible(std::span<const LinearConstraint> constraints, int variables, FeasibilityMode mode) {
  if (variables < 0) throw std::invalid_argument("fourier_motzkin_feasible: negative variable count");
  const auto nv = static_cast<std::size_t>(variables);
  std::vector<Row> rows;
  for (const LinearConstraint& lc : constraints) {
    if (lc.coefficients.size() != nv)
      throw std::invalid_argument("fourier_motzkin_feasible: constraint has wrong number of coefficients");
    Row r{lc.coefficients, lc.bound, lc.relation == Relation::Greater || lc.relation == Relation::Less};
    if (lc.relation == Relation::LessEqual || lc.relation == Relation::Less) {
      for (std::int64_t& x : r.c) x = checked_mul(x, -1);
      r.b = checked_mul(r.b, -1);
    }
    rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < nv; ++i) {
    Row r{std::vector<std::int64_t>(nv, 0), 0, false};
    r.c[i] = 1;
    rows.push_back(std::move(r));
  }

  auto tidy = [&](std::vector<Row>& rs) -> bool {
    std::vector<Row> kept;
    for (Row& r : rs) {
      normalize(r, mode);
      if (all_zero(r)) {
        if (!trivially_satisfied(r)) return false;
        continue;
      }
      kept.push_back(std::move(r));
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    rs = std::move(kept);
    return true;
  };

  if (!tidy(rows)) return false;
  for (std::size_t k = 0; k < nv; ++k) {
    std::vector<Row> pos;
    std::vector<Row> neg;
    std::vector<Row> next;
    for (Row& r : rows) {
      if (r.c[k] > 0) pos.push_back(std::move(r));
      else if (r.c[k] < 0) neg.push_back(std::move(r));
      else next.push_back(std::move(r));
    }
    for (const Row& p : pos)
      for (const Row& q : neg) {
        const std::int64_t wp = -q.c[k];
        const std::int64_t wq = p.c[k];
        Row r{std::vector<std::int64_t>(nv, 0), 0, p.strict || q.strict};
        for (std::size_t i = 0; i < nv; ++i) r.c[i] = checked_add(checked_mul(wp, p.c[i]), checked_mul(wq, q.c[i]));
        r.c[k] = 0;
        r.b = checked_add(checked_mul(wp, p.b), checked_mul(wq, q.b));
        next.push_back(std::move(r));
      }
    rows = std::move(next);
    if (!tidy(rows)) return false;
  }
  return true;
}

}  // namespace edgepow
