#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>

namespace magma {

/// Which exponent a box of side lengths r_1 x ... x r_k contributes.
///   correct:      (r_1 ... r_k / lcm(r_1..r_k)) * j_{r_1} ... j_{r_k}
///   harrison_gcd: gcd(r_1..r_k) * j_{r_1} ... j_{r_k}
/// The gcd form is the historically published one. It agrees with the
/// correct form only for k = 2; it is kept so the discrepancy can be
/// reproduced and detected.
enum class Variant { correct, harrison_gcd };

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view s);

/// Raised when a count whose Burnside sum must be integral is not.
class NonIntegralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a request exceeds a configured enumeration guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Chain count of one box for the given variant, before multiplying by the
/// j_{r_i}. `lengths` is the box's side lengths; k = 0 is the empty box.
/// Throws std::invalid_argument for harrison_gcd with k = 0.
std::uint64_t box_chain_count(std::span<const std::uint64_t> lengths, Variant variant);

}  // namespace magma
