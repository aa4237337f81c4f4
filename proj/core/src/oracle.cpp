#include "magma/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "magma/variant.hpp"

namespace magma {

std::uint64_t cell_count(std::uint32_t n, std::uint32_t k) { return checked_pow(n, k); }

std::uint64_t encode_cell(std::span<const Element> tuple, std::uint32_t n) {
  std::uint64_t index = 0;
  for (auto a : tuple) {
    if (a >= n) throw std::out_of_range("cell coordinate outside the ground set");
    index = index * n + a;
  }
  return index;
}

std::vector<Element> decode_cell(std::uint64_t index, std::uint32_t n, std::uint32_t k) {
  std::vector<Element> tuple(k, 0);
  for (std::size_t i = k; i-- > 0;) {
    tuple[i] = static_cast<Element>(index % n);
    index /= n;
  }
  return tuple;
}

OpTable::OpTable(std::uint32_t n, std::uint32_t k, std::vector<Element> entries)
    : n_(n), k_(k), entries_(std::move(entries)) {
  if (entries_.size() != cell_count(n, k)) throw std::invalid_argument("table must have n^k entries");
  for (auto e : entries_) {
    if (e >= n) throw std::invalid_argument("table entry outside the ground set");
  }
}

OpTable OpTable::constant(std::uint32_t n, std::uint32_t k, Element value) {
  return OpTable(n, k, std::vector<Element>(cell_count(n, k), value));
}

OpTable OpTable::from_code(std::uint32_t n, std::uint32_t k, std::uint64_t code) {
  std::vector<Element> entries(cell_count(n, k));
  for (std::size_t i = entries.size(); i-- > 0;) {
    entries[i] = static_cast<Element>(code % n);
    code /= n;
  }
  if (code != 0) throw std::invalid_argument("table code out of range");
  return OpTable(n, k, std::move(entries));
}

std::uint64_t OpTable::code() const {
  std::uint64_t c = 0;
  for (auto e : entries_) c = checked_mul(c, n_) + e;
  return c;
}

CellPermutation::CellPermutation(const Perm& p, std::uint32_t k) {
  const auto n = static_cast<std::uint32_t>(p.size());
  const std::uint64_t cells = cell_count(n, k);
  images_.resize(cells);
  for (std::uint64_t c = 0; c < cells; ++c) {
    images_[c] = encode_cell(apply_tuple(p, decode_cell(c, n, k)), n);
  }
}

std::vector<std::uint64_t> CellPermutation::cycle_lengths() const {
  std::vector<std::uint64_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint64_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::uint64_t c = start; !seen[c]; c = images_[c]) {
      seen[c] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

namespace {

OpTable act_with(const Perm& p, const CellPermutation& cells, const OpTable& t) {
  std::vector<Element> out(t.entries().size());
  for (std::uint64_t a = 0; a < out.size(); ++a) out[cells(a)] = p(t.entries()[a]);
  return OpTable(t.n(), t.k(), std::move(out));
}

void require_matching(const Perm& p, const OpTable& t) {
  if (p.size() != t.n()) throw std::invalid_argument("permutation and table differ in ground set size");
}

}  // namespace

OpTable act(const Perm& p, const OpTable& t) {
  require_matching(p, t);
  return act_with(p, CellPermutation(p, t.k()), t);
}

bool is_automorphism(const Perm& p, const OpTable& t) {
  require_matching(p, t);
  const std::uint64_t cells = cell_count(t.n(), t.k());
  for (std::uint64_t c = 0; c < cells; ++c) {
    const auto a = decode_cell(c, t.n(), t.k());
    if (p(t.at(a)) != t.at(apply_tuple(p, a))) return false;
  }
  return true;
}

OpTable canonical_form(const OpTable& t) {
  OpTable best = t;
  for_each_permutation(t.n(), [&](const Perm& p) {
    OpTable image = act(p, t);
    if (std::lexicographical_compare(image.entries().begin(), image.entries().end(),
                                     best.entries().begin(), best.entries().end())) {
      best = std::move(image);
    }
  });
  return best;
}

std::uint64_t table_count_within(std::uint32_t n, std::uint32_t k, std::uint64_t cap) {
  std::uint64_t tables = 0;
  try {
    tables = checked_pow(n, cell_count(n, k));
  } catch (const std::overflow_error&) {
    throw GuardError("n^(n^k) exceeds 64 bits for n = " + std::to_string(n) + ", k = " + std::to_string(k));
  }
  if (tables > cap) {
    throw GuardError(std::to_string(tables) + " tables for n = " + std::to_string(n) +
                     ", k = " + std::to_string(k) + " exceed the cap of " + std::to_string(cap));
  }
  return tables;
}

OrbitCensus enumerate_orbits(std::uint32_t n, std::uint32_t k, const BruteForceOptions& options) {
  const std::uint64_t tables = table_count_within(n, k, options.table_cap);
  if (n > options.permutation_guard) {
    throw GuardError("orbit sweep needs n <= " + std::to_string(options.permutation_guard));
  }
  std::vector<Perm> group;
  std::vector<CellPermutation> cell_perms;
  for_each_permutation(n, [&](const Perm& p) {
    group.push_back(p);
    cell_perms.emplace_back(p, k);
  });

  OrbitCensus census;
  std::vector<bool> seen(tables, false);
  for (std::uint64_t code = 0; code < tables; ++code) {
    if (seen[code]) continue;
    const OpTable t = OpTable::from_code(n, k, code);
    std::uint64_t size = 0;
    for (std::size_t g = 0; g < group.size(); ++g) {
      const std::uint64_t image = act_with(group[g], cell_perms[g], t).code();
      if (!seen[image]) {
        seen[image] = true;
        ++size;
      }
    }
    census.canonical_codes.push_back(code);
    census.orbit_sizes.push_back(size);
  }
  return census;
}

BigCount count_orbits_bruteforce(std::uint32_t n, std::uint32_t k, const BruteForceOptions& options) {
  return BigCount(static_cast<unsigned long>(enumerate_orbits(n, k, options).canonical_codes.size()));
}

BigCount fixed_tables_structural(const Perm& p, std::uint32_t k) {
  const CellPermutation cells(p, k);
  BigCount product = 1;
  for (auto length : cells.cycle_lengths()) {
    const Perm q = p.pow(length);
    unsigned long admissible = 0;
    for (Element x = 0; x < p.size(); ++x) admissible += (q(x) == x);
    product *= BigCount(admissible);
  }
  return product;
}

OrbitStabilizer orbit_and_stabilizer(const OpTable& t) {
  std::set<std::vector<Element>> orbit;
  OrbitStabilizer r;
  for_each_permutation(t.n(), [&](const Perm& p) {
    OpTable image = act(p, t);
    if (image == t) ++r.stabilizer_size;
    orbit.emplace(image.entries().begin(), image.entries().end());
  });
  r.orbit_size = orbit.size();
  return r;
}

bool orbit_stabilizer_check(const OpTable& t) {
  const auto r = orbit_and_stabilizer(t);
  return BigInt(static_cast<unsigned long>(r.orbit_size)) * BigInt(static_cast<unsigned long>(r.stabilizer_size)) ==
         factorial(t.n());
}

Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Element> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Element>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Perm(std::move(images));
}

OpTable random_table(std::uint32_t n, std::uint32_t k, std::mt19937_64& rng) {
  if (n == 0) return OpTable(0, k, std::vector<Element>(cell_count(0, k), 0));
  std::uniform_int_distribution<Element> value(0, n - 1);
  std::vector<Element> entries(cell_count(n, k));
  for (auto& e : entries) e = value(rng);
  return OpTable(n, k, std::move(entries));
}

OpTable random_fixed_table(const Perm& p, std::uint32_t k, std::mt19937_64& rng) {
  const auto n = static_cast<std::uint32_t>(p.size());
  const CellPermutation cells(p, k);
  std::vector<Element> entries(cells.images().size());
  std::vector<bool> assigned(entries.size(), false);
  for (std::uint64_t start = 0; start < entries.size(); ++start) {
    if (assigned[start]) continue;
    std::uint64_t length = 1;
    for (std::uint64_t c = cells(start); c != start; c = cells(c)) ++length;
    const Perm q = p.pow(length);
    std::vector<Element> admissible;
    for (Element x = 0; x < n; ++x) {
      if (q(x) == x) admissible.push_back(x);
    }
    if (admissible.empty()) throw std::invalid_argument("permutation fixes no table");
    std::uniform_int_distribution<std::size_t> pick(0, admissible.size() - 1);
    Element value = admissible[pick(rng)];
    std::uint64_t c = start;
    do {
      entries[c] = value;
      assigned[c] = true;
      value = p(value);
      c = cells(c);
    } while (c != start);
  }
  return OpTable(n, k, std::move(entries));
}

}  // namespace magma
