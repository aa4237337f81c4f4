#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magma/variant.hpp"

namespace magma::verify {

struct SuiteConfig {
  std::uint64_t table_cap = std::uint64_t{1} << 20;
  std::uint32_t permutation_guard = 8;
  std::optional<std::uint32_t> n_max;  // suite-specific default when unset
  std::optional<std::uint32_t> k_max;
  Variant variant = Variant::correct;  // closed form checked by the structural suite
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct SuiteReport {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  std::string summary;         // one line
  std::string counterexample;  // first failure, empty when passed
};

/// Names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// (n, k) pairs whose tables the brute-force oracle can enumerate: n up to
/// the permutation guard, n^(n^k) within the cap, and k <= k_small for n <= 1
/// (where the table count never grows).
std::vector<std::pair<std::uint32_t, std::uint32_t>> enumerable_configurations(
    std::uint64_t table_cap, std::uint32_t permutation_guard, std::uint32_t k_small = 6);

SuiteReport burnside(const SuiteConfig& config);
SuiteReport structural(const SuiteConfig& config);
SuiteReport cross_method(const SuiteConfig& config);
SuiteReport variant(const SuiteConfig& config);
SuiteReport cycle_index(const SuiteConfig& config);
SuiteReport action(const SuiteConfig& config);

/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace magma::verify
