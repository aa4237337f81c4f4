#include "magma/variant.hpp"

#include <vector>

#include "magma/arith.hpp"

namespace magma {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::correct:
      return "correct";
    case Variant::harrison_gcd:
      return "harrison-gcd";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view s) {
  if (s == "correct") return Variant::correct;
  if (s == "harrison-gcd") return Variant::harrison_gcd;
  return std::nullopt;
}

std::uint64_t box_chain_count(std::span<const std::uint64_t> lengths, Variant variant) {
  std::vector<std::int64_t> xs(lengths.begin(), lengths.end());
  if (variant == Variant::harrison_gcd) {
    if (xs.empty()) throw std::invalid_argument("harrison-gcd variant is undefined for k = 0");
    return gcd_list(xs);
  }
  std::uint64_t volume = 1;
  for (auto r : lengths) volume = checked_mul(volume, r);
  return volume / lcm_list(xs);
}

}  // namespace magma
