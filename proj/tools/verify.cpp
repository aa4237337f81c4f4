#include "verify.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "magma/census.hpp"
#include "magma/cycle_index.hpp"
#include "magma/oracle.hpp"
#include "magma/perm.hpp"

namespace magma::verify {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"burnside", "structural", "cross-method",
                                                 "variant",  "cycle-index", "action"};
  return names;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> enumerable_configurations(
    std::uint64_t table_cap, std::uint32_t permutation_guard, std::uint32_t k_small) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t n = 0; n <= permutation_guard; ++n) {
    for (std::uint32_t k = 0;; ++k) {
      if (n <= 1 && k > k_small) break;
      try {
        table_count_within(n, k, table_cap);
      } catch (const GuardError&) {
        break;
      }
      out.emplace_back(n, k);
    }
  }
  return out;
}

namespace {

std::string nk(std::uint32_t n, std::uint32_t k) {
  return "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

void fail(SuiteReport& r, const std::string& what) {
  if (r.passed) r.counterexample = what;
  r.passed = false;
}

}  // namespace

SuiteReport burnside(const SuiteConfig& config) {
  SuiteReport r;
  r.name = "burnside";
  const CensusOptions census{config.jobs, config.permutation_guard};
  const BruteForceOptions brute{config.table_cap, config.permutation_guard};
  for (auto [n, k] : enumerable_configurations(config.table_cap, config.permutation_guard)) {
    const BigCount orbits = count_orbits_bruteforce(n, k, brute);
    BigInt fixed_sum = 0;
    for_each_permutation(n, [&](const Perm& p) { fixed_sum += fixed_tables_structural(p, k).value(); });
    const ExactRational averaged = make_rational(fixed_sum, factorial(n));
    const BigCount formula = count_k_magmas(n, k, Variant::correct, census).count;
    ++r.checks;
    if (averaged != ExactRational(orbits.value()) || formula != orbits) {
      fail(r, nk(n, k) + ": orbits " + orbits.str() + ", structural average " + averaged.get_str() +
                  ", formula " + formula.str());
      break;
    }
  }
  r.summary = std::to_string(r.checks) + " enumerable configurations";
  return r;
}

SuiteReport structural(const SuiteConfig& config) {
  SuiteReport r;
  r.name = "structural";
  const std::uint32_t n_max = config.n_max.value_or(8);
  const std::uint32_t k_max = config.k_max.value_or(3);
  const std::uint32_t k_min = config.variant == Variant::harrison_gcd ? 1 : 0;
  for (std::uint32_t k = k_min; k <= k_max && r.passed; ++k) {
    for (std::uint32_t n = 0; n <= n_max && r.passed; ++n) {
      for (const auto& j : enumerate_cycle_types(n)) {
        const BigCount structural = fixed_tables_structural(Perm::with_cycle_type(j), k);
        const BigCount closed = fixed_point_count(j, k, config.variant);
        ++r.checks;
        if (structural != closed) {
          fail(r, nk(n, k) + " j=" + j.to_string() + ": structural " + structural.str() + ", " +
                      std::string(to_string(config.variant)) + " closed form " + closed.str());
          break;
        }
      }
    }
  }
  r.summary = std::to_string(r.checks) + " cycle types checked against the " +
              std::string(to_string(config.variant)) + " closed form";
  return r;
}

SuiteReport cross_method(const SuiteConfig& config) {
  SuiteReport r;
  r.name = "cross-method";
  const std::uint32_t n_max = std::min(config.n_max.value_or(6), config.permutation_guard);
  const std::uint32_t k_max = config.k_max.value_or(3);
  const CensusOptions census{config.jobs, config.permutation_guard};
  for (Variant v : {Variant::correct, Variant::harrison_gcd}) {
    for (std::uint32_t k = (v == Variant::harrison_gcd ? 1 : 0); k <= k_max; ++k) {
      for (std::uint32_t n = 0; n <= n_max; ++n) {
        const BigCount partition = count_k_magmas(n, k, v, census).count;
        const BigCount permutation = count_via_permutation_sum(n, k, v, census).count;
        const BigCount index = count_via_cycle_index(n, k, v);
        ++r.checks;
        if (partition != permutation || partition != index) {
          fail(r, nk(n, k) + " " + std::string(to_string(v)) + ": partition " + partition.str() +
                      ", permutation " + permutation.str() + ", cycle index " + index.str());
        }
      }
    }
  }
  r.summary = std::to_string(r.checks) + " (n,k,variant) triples agree on all three paths";
  return r;
}

SuiteReport variant(const SuiteConfig& config) {
  SuiteReport r;
  r.name = "variant";
  const std::uint32_t n_max = config.n_max.value_or(7);
  const std::uint32_t k_max = std::max<std::uint32_t>(config.k_max.value_or(3), 3);
  std::optional<std::tuple<std::uint32_t, std::uint32_t, BigCount, BigCount>> first;
  for (std::uint32_t k = 2; k <= k_max && !first; ++k) {
    for (std::uint32_t n = 0; n <= n_max; ++n) {
      const BigCount correct = count_k_magmas(n, k, Variant::correct).count;
      const BigCount harrison = count_k_magmas(n, k, Variant::harrison_gcd).count;
      ++r.checks;
      if (correct != harrison) {
        first.emplace(n, k, harrison, correct);
        break;
      }
    }
  }
  if (!first) {
    fail(r, "no disagreement found for k in [2," + std::to_string(k_max) + "]");
    r.summary = "variants never disagree";
    return r;
  }
  const auto& [n, k, harrison, correct] = *first;
  std::ostringstream os;
  os << "first disagreement at " << nk(n, k) << ": harrison-gcd " << harrison << ", correct " << correct;
  r.summary = os.str();
  if (k == 2) fail(r, "variants disagree at k = 2, " + r.summary);
  return r;
}

SuiteReport cycle_index(const SuiteConfig& config) {
  SuiteReport r;
  r.name = "cycle-index";
  const std::uint32_t n_max = config.n_max.value_or(25);
  for (std::uint32_t n = 0; n <= n_max && r.passed; ++n) {
    const auto direct = cycle_index_direct(n);
    ++r.checks;
    if (cycle_index_recursive(n) != direct) fail(r, "recursive and direct Z_" + std::to_string(n) + " differ");
    if (coefficient_sum(direct) != 1) fail(r, "coefficients of Z_" + std::to_string(n) + " do not sum to 1");
  }
  for (std::uint32_t n = 0; n <= std::min<std::uint32_t>(n_max, 9) && r.passed; ++n) {
    const std::uint64_t top = max_indeterminate_index(induce(cycle_index_direct(n), 2));
    ++r.checks;
    const bool ok = (n > 4 || top <= n) && (n < 4 || top <= std::uint64_t{n} * n / 4);
    if (!ok) fail(r, "Z_" + std::to_string(n) + "^[2] uses t" + std::to_string(top));
  }
  const auto one = [](const CycleType&, std::uint64_t) { return BigCount(1); };
  for (std::uint32_t n = 0; n <= std::min<std::uint32_t>(n_max, 8) && r.passed; ++n) {
    for (std::uint32_t k = 0; k <= config.k_max.value_or(3); ++k) {
      ++r.checks;
      if (substitute_per_monomial(induce(cycle_index_direct(n), k), one) != BigCount(1)) {
        fail(r, "Z_" + std::to_string(n) + "^[" + std::to_string(k) + "] at t = 1 is not 1");
      }
    }
  }
  r.summary = std::to_string(r.checks) + " cycle-index identities";
  return r;
}

SuiteReport action(const SuiteConfig& config) {
  SuiteReport r;
  r.name = "action";
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::uint32_t> small_n(1, 4), small_k(0, 3);
  for (int i = 0; i < 500 && r.passed; ++i) {
    const auto n = small_n(rng), k = small_k(rng);
    const Perm p = random_perm(n, rng), q = random_perm(n, rng);
    const OpTable t = random_table(n, k, rng);
    ++r.checks;
    if (act(Perm::identity(n), t) != t) fail(r, "identity moved a table at " + nk(n, k));
    if (act(p * q, t) != act(p, act(q, t))) fail(r, "composition law broken for p=" + p.to_string() + " q=" + q.to_string());
  }
  for (int i = 0; i < 500 && r.passed; ++i) {
    const auto n = small_n(rng), k = small_k(rng);
    const Perm p = random_perm(n, rng);
    // Half the samples are p-invariant so both outcomes occur. For k = 0 a
    // derangement fixes nothing; those fall back to a random table.
    const bool fixable = k > 0 || cycle_type_of(p).count(1) > 0;
    const OpTable t = (i % 2 == 0 && fixable) ? random_fixed_table(p, k, rng) : random_table(n, k, rng);
    ++r.checks;
    if (is_automorphism(p, t) != (act(p, t) == t)) fail(r, "automorphism test disagrees with act at " + nk(n, k));
  }
  for (int i = 0; i < 100 && r.passed; ++i) {
    const auto n = small_n(rng), k = small_k(rng);
    ++r.checks;
    if (!orbit_stabilizer_check(random_table(n, k, rng))) fail(r, "orbit-stabilizer fails at " + nk(n, k));
  }
  r.summary = std::to_string(r.checks) + " seeded action checks (seed " + std::to_string(config.seed) + ")";
  return r;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  if (name == "burnside") return burnside(config);
  if (name == "structural") return structural(config);
  if (name == "cross-method") return cross_method(config);
  if (name == "variant") return variant(config);
  if (name == "cycle-index") return cycle_index(config);
  if (name == "action") return action(config);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace magma::verify
