#pragma once

// Ground truth that does not go through any closed-form count: explicit
// operation tables, the relabeling action on them, orbit enumeration, and
// fixed-table counts read off the induced permutation of table cells.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "magma/arith.hpp"
#include "magma/perm.hpp"

namespace magma {

/// n^k, the number of cells of a k-ary table on [n] (0^0 = 1).
std::uint64_t cell_count(std::uint32_t n, std::uint32_t k);

/// Mixed-radix cell index of a k-tuple over [n], most significant
/// coordinate first: (a_1, ..., a_k) -> sum a_i n^{k-i}.
std::uint64_t encode_cell(std::span<const Element> tuple, std::uint32_t n);
std::vector<Element> decode_cell(std::uint64_t index, std::uint32_t n, std::uint32_t k);

/// A k-ary operation on [n] as a flat array of n^k values, indexed by
/// encode_cell.
class OpTable {
 public:
  OpTable(std::uint32_t n, std::uint32_t k, std::vector<Element> entries);

  static OpTable constant(std::uint32_t n, std::uint32_t k, Element value);

  /// The table whose entry array, read as base-n digits (cell 0 most
  /// significant), spells `code`. Lexicographic order on entry arrays
  /// coincides with numeric order on codes.
  static OpTable from_code(std::uint32_t n, std::uint32_t k, std::uint64_t code);

  std::uint64_t code() const;

  std::uint32_t n() const { return n_; }
  std::uint32_t k() const { return k_; }
  std::span<const Element> entries() const { return entries_; }
  Element at(std::span<const Element> tuple) const { return entries_.at(encode_cell(tuple, n_)); }

  friend bool operator==(const OpTable&, const OpTable&) = default;

 private:
  std::uint32_t n_;
  std::uint32_t k_;
  std::vector<Element> entries_;
};

/// The permutation p^{xk} of cells, as a flat image array.
class CellPermutation {
 public:
  CellPermutation(const Perm& p, std::uint32_t k);

  std::uint64_t operator()(std::uint64_t cell) const { return images_[cell]; }
  std::span<const std::uint64_t> images() const { return images_; }

  /// Length of every cell cycle, in order of each cycle's least cell.
  std::vector<std::uint64_t> cycle_lengths() const;

 private:
  std::vector<std::uint64_t> images_;
};

/// Transport of structure: the table t' with t'(p(a_1), ..., p(a_k)) = p(t(a_1, ..., a_k)).
/// act(id, t) = t and act(p * q, t) = act(p, act(q, t)).
OpTable act(const Perm& p, const OpTable& t);

/// True iff p(t(a)) = t(p(a)) for every tuple a, checked tuple by tuple.
bool is_automorphism(const Perm& p, const OpTable& t);

/// Lexicographically least entry array among all n! relabelings of t.
OpTable canonical_form(const OpTable& t);

struct BruteForceOptions {
  std::uint64_t table_cap = std::uint64_t{1} << 20;  // largest n^(n^k) enumerated
  std::uint32_t permutation_guard = 8;                // largest n swept over S_n
};

/// Number of tables n^(n^k); GuardError if it exceeds `cap` (or 64 bits).
std::uint64_t table_count_within(std::uint32_t n, std::uint32_t k, std::uint64_t cap);

struct OrbitCensus {
  std::vector<std::uint64_t> canonical_codes;  // least code of each orbit, ascending
  std::vector<std::uint64_t> orbit_sizes;      // parallel to canonical_codes
};

/// Partitions all tables into orbits. Codes are swept in ascending order;
/// the first unseen code opens a new orbit, is therefore the orbit's
/// canonical form, and every relabeling of it is marked seen.
/// Throws GuardError when the table cap or permutation guard is exceeded.
OrbitCensus enumerate_orbits(std::uint32_t n, std::uint32_t k, const BruteForceOptions& options = {});

BigCount count_orbits_bruteforce(std::uint32_t n, std::uint32_t k, const BruteForceOptions& options = {});

/// Tables fixed by p, counted from the cycles of the cell permutation: a
/// cell cycle of length L admits exactly the values x with p^L(x) = x.
BigCount fixed_tables_structural(const Perm& p, std::uint32_t k);

struct OrbitStabilizer {
  std::uint64_t orbit_size = 0;
  std::uint64_t stabilizer_size = 0;
};

/// Orbit and stabilizer of t by a full sweep of S_n.
OrbitStabilizer orbit_and_stabilizer(const OpTable& t);

/// |orbit(t)| * |stabilizer(t)| == n!.
bool orbit_stabilizer_check(const OpTable& t);

/// Default seed for randomized checks.
inline constexpr std::uint64_t kDefaultSeed = 0x6d61676d61ULL;

Perm random_perm(std::size_t n, std::mt19937_64& rng);
OpTable random_table(std::uint32_t n, std::uint32_t k, std::mt19937_64& rng);

/// A uniformly random table fixed by p: each cell cycle of length L gets a
/// random start value x with p^L(x) = x, propagated along the cycle.
/// Throws std::invalid_argument when no fixed table exists.
OpTable random_fixed_table(const Perm& p, std::uint32_t k, std::mt19937_64& rng);

}  // namespace magma
