#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "magma/cycle_type.hpp"

namespace magma {

/// Element labels are 0-based internally; display is 1-based.
using Element = std::uint32_t;

/// A permutation of {0, ..., n-1}, stored as its image list.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Element> images);

  static Perm identity(std::size_t n);

  /// Builds a permutation from disjoint cycles of 0-based labels.
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<Element>>& cycles);

  /// A concrete permutation of the given type: cycles laid out on
  /// consecutive labels, shortest first.
  static Perm with_cycle_type(const CycleType& j);

  std::size_t size() const { return images_.size(); }
  Element operator()(Element x) const { return images_.at(x); }
  std::span<const Element> images() const { return images_; }

  Perm inverse() const;
  Perm pow(std::uint64_t exponent) const;

  /// Disjoint cycles (fixed points included), each starting at its least element.
  std::vector<std::vector<Element>> cycles() const;

  /// lcm of the cycle lengths.
  std::uint64_t order() const;

  /// 1-based cycle notation without fixed points, e.g. "(1 3 4)(2 5)";
  /// the identity renders as "()".
  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<Element> images_;
};

/// (p * q)(x) = p(q(x)).
Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

CycleType cycle_type_of(const Perm& p);

/// Coordinatewise image of a k-tuple. Throws std::out_of_range on a bad coordinate.
std::vector<Element> apply_tuple(const Perm& p, std::span<const Element> tuple);

/// Visits all n! permutations in lexicographic order of their image lists.
template <typename Visit>
void for_each_permutation(std::size_t n, Visit&& visit);

}  // namespace magma

#include <algorithm>
#include <numeric>

namespace magma {

template <typename Visit>
void for_each_permutation(std::size_t n, Visit&& visit) {
  std::vector<Element> images(n);
  std::iota(images.begin(), images.end(), Element{0});
  do {
    visit(Perm(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace magma
