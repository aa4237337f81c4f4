#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "magma/arith.hpp"
#include "magma/cycle_type.hpp"
#include "magma/variant.hpp"

namespace magma {

/// Sparse exponent map: indeterminate index i >= 1 -> positive exponent of t_i.
using Exponents = std::map<std::uint64_t, std::uint64_t>;

/// A monomial tagged with the cycle type of S_n it came from. Two monomials
/// with the same exponents but different origins are distinct terms.
struct Monomial {
  CycleType origin;
  Exponents exponents;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct Term {
  ExactRational coefficient;
  Monomial monomial;

  friend bool operator==(const Term& a, const Term& b) {
    return a.coefficient == b.coefficient && a.monomial == b.monomial;
  }
};

/// Cycle index of S_n for its natural action (power == nullopt) or for the
/// coordinatewise action on k-tuples (power == k). One term per cycle type,
/// in CycleType order.
class CycleIndexPoly {
 public:
  CycleIndexPoly(std::size_t n, std::optional<std::uint32_t> power, std::vector<Term> terms);

  std::size_t n() const { return n_; }
  std::optional<std::uint32_t> power() const { return power_; }
  bool is_natural() const { return !power_.has_value(); }
  const std::vector<Term>& terms() const { return terms_; }

  friend bool operator==(const CycleIndexPoly&, const CycleIndexPoly&) = default;

 private:
  std::size_t n_;
  std::optional<std::uint32_t> power_;
  std::vector<Term> terms_;
};

/// Z_n = sum over cycle types j of t_1^{j_1} ... t_n^{j_n} / prod i^{j_i} j_i!.
CycleIndexPoly cycle_index_direct(std::size_t n);

/// Z_n via Z_0 = 1, Z_n = (1/n) sum_{i=1..n} t_i Z_{n-i}. Memoized for the
/// life of the process; safe to call from several threads.
CycleIndexPoly cycle_index_recursive(std::size_t n);

/// Cycle index of the induced action on [n]^k. Each ordered k-tuple of
/// cycle lengths (r_1..r_k) from the origin's support contributes
/// t_{lcm(r)} raised to box_chain_count(r) * j_{r_1} ... j_{r_k}.
/// `variant` selects the chain-count rule; harrison_gcd is not a cycle
/// index of anything and exists only to evaluate that formula.
CycleIndexPoly induce(const CycleIndexPoly& z, std::uint32_t k, Variant variant = Variant::correct);

/// Value substituted for t_index within the term of the given origin.
using Substitution = std::function<BigCount(const CycleType& origin, std::uint64_t index)>;

/// sum_terms coefficient * prod f(origin, i)^{e_i}, evaluated exactly.
/// Throws NonIntegralError if the total is not an integer.
BigCount substitute_per_monomial(const CycleIndexPoly& z, const Substitution& f);

/// The substitution that turns an induced index into a fixed-table count:
/// t_i -> sum_{d | i} d * j_d with j taken from the term's origin.
BigCount divisor_weighted_fixed_points(const CycleType& origin, std::uint64_t index);

/// Largest indeterminate index with a positive exponent; 0 for constants.
std::uint64_t max_indeterminate_index(const CycleIndexPoly& z);

ExactRational coefficient_sum(const CycleIndexPoly& z);

/// "1/6*t1^3 + 1/2*t1*t2 + 1/3*t3". Integer coefficients print without a
/// denominator, a coefficient of exactly 1 is dropped in front of a
/// non-empty monomial, and the exponent 1 is never printed.
std::string render(const CycleIndexPoly& z);

}  // namespace magma
