#include "edgepow/field_spec.hpp"

#include <charconv>
#include <stdexcept>

namespace edgepow {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::characteristic(int p) {
  if (p == 0) return char0();
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec(Kind::CharP, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "all") return all_fields();
  int p = -1;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("field must be 'all', '0' or a prime, got '" + std::string(text) + "'");
  return characteristic(p);
}

std::string FieldSpec::to_string() const {
  switch (kind_) {
    case Kind::AllFields: return "all";
    case Kind::Char0: return "0";
    case Kind::CharP: return std::to_string(p_);
  }
  return "?";
}

}  // namespace edgepow
