#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "magma/arith.hpp"

namespace magma {

/// Cycle structure j = (j_1, ..., j_n) of a permutation of an n-element set,
/// where j_i counts the i-cycles. Satisfies sum_i i * j_i = n.
///
/// Ordering is the enumeration order used everywhere in this library: write
/// each type as its partition with parts in descending order and compare
/// those sequences lexicographically. For n = 3 this gives
/// [1,1,1] < [2,1] < [3], i.e. identity first and the n-cycle last.
class CycleType {
 public:
  /// The empty type (n = 0).
  CycleType() = default;

  /// `counts[i - 1]` is j_i; counts.size() must equal n.
  CycleType(std::size_t n, std::vector<std::uint32_t> counts);

  /// Builds the type from a list of cycle lengths in any order.
  static CycleType from_parts(std::span<const std::uint32_t> parts);

  std::size_t n() const { return counts_.size(); }

  /// j_i for i >= 1; zero for i > n.
  std::uint32_t count(std::uint64_t i) const {
    return (i >= 1 && i <= counts_.size()) ? counts_[i - 1] : 0;
  }
  std::span<const std::uint32_t> counts() const { return counts_; }

  /// Cycle lengths that occur, ascending.
  std::vector<std::uint32_t> support() const;

  std::vector<std::uint32_t> parts_descending() const;

  /// "(j_1,...,j_n)"; "()" for n = 0.
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend std::strong_ordering operator<=>(const CycleType& a, const CycleType& b);

 private:
  std::vector<std::uint32_t> counts_;
};

/// Every cycle type of n, each exactly once, in CycleType order.
std::vector<CycleType> enumerate_cycle_types(std::size_t n);

/// Streaming form of enumerate_cycle_types.
void for_each_cycle_type(std::size_t n, const std::function<void(const CycleType&)>& visit);

/// prod_i i^{j_i} j_i!, the size of the centralizer of any permutation of type j.
BigInt centralizer_order(const CycleType& j);

/// Number of permutations of type j: n! / prod_i i^{j_i} j_i!.
BigCount cycle_type_count(const CycleType& j);

/// Visits every ordered k-tuple (r_1, ..., r_k) of cycle lengths drawn from
/// support(j), in lexicographic order. k = 0 visits the empty tuple once;
/// an empty support with k >= 1 visits nothing.
void for_each_support_tuple(const CycleType& j, std::uint32_t k,
                            const std::function<void(std::span<const std::uint64_t>)>& visit);

}  // namespace magma
