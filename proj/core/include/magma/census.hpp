#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "magma/arith.hpp"
#include "magma/cycle_type.hpp"
#include "magma/variant.hpp"

namespace magma {

enum class Method { partition, permutation };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view s);

struct CensusQuery {
  std::uint32_t n = 0;
  std::uint32_t k = 2;
  Variant variant = Variant::correct;
  Method method = Method::partition;
};

struct CensusResult {
  CensusQuery query;
  BigCount count;
  std::uint64_t terms_evaluated = 0;  // cycle types or permutations summed
  std::chrono::nanoseconds elapsed{0};
};

struct CensusOptions {
  unsigned jobs = 1;
  std::uint32_t permutation_guard = 8;  // largest n the permutation sum accepts
};

/// Number of k-ary operation tables on [n] for which every permutation of
/// type j is an automorphism:
///   prod over (r_1..r_k) in support(j)^k of
///     (sum_{d | lcm(r)} d j_d) ^ ((r_1...r_k / lcm(r)) j_{r_1}...j_{r_k}).
/// An empty ground set gives the empty product 1 for k >= 1, and 0 for k = 0
/// (a constant needs an element to name).
BigCount fixed_point_count(const CycleType& j, std::uint32_t k);

/// Same product with gcd(r_1..r_k) in place of r_1...r_k / lcm(r). Wrong
/// for k >= 3 (and for k = 1, where gcd(r) = r but the true chain count is 1).
/// Throws std::invalid_argument for k = 0.
BigCount fixed_point_count_harrison(const CycleType& j, std::uint32_t k);

BigCount fixed_point_count(const CycleType& j, std::uint32_t k, Variant variant);

/// Isomorphism classes of k-ary operations on an n-set, as the exact sum
/// over cycle types j of fixed_point_count(j, k) / prod i^{j_i} j_i!.
/// The sum over cycle types is split across options.jobs workers.
/// Throws NonIntegralError if the sum is not an integer.
CensusResult count_k_magmas(std::uint32_t n, std::uint32_t k, Variant variant = Variant::correct,
                            const CensusOptions& options = {});

/// (1/n!) * sum over all n! permutations. Throws GuardError when n exceeds
/// options.permutation_guard.
CensusResult count_via_permutation_sum(std::uint32_t n, std::uint32_t k,
                                       Variant variant = Variant::correct,
                                       const CensusOptions& options = {});

/// Same count through the induced cycle index and per-monomial substitution.
BigCount count_via_cycle_index(std::uint32_t n, std::uint32_t k, Variant variant = Variant::correct);

/// Dispatches on query.method.
CensusResult run_query(const CensusQuery& query, const CensusOptions& options = {});

/// count_k_magmas for n = n_lo..n_hi at fixed k.
std::vector<CensusResult> sequence(std::uint32_t k, std::uint32_t n_lo, std::uint32_t n_hi,
                                   Variant variant = Variant::correct, const CensusOptions& options = {});

/// count_k_magmas for k = k_lo..k_hi at fixed n.
std::vector<CensusResult> arity_sequence(std::uint32_t n, std::uint32_t k_lo, std::uint32_t k_hi,
                                         Variant variant = Variant::correct,
                                         const CensusOptions& options = {});

}  // namespace magma
