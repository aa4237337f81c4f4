#include "magma/census.hpp"

#include <map>
#include <stdexcept>
#include <thread>

#include "magma/cycle_index.hpp"
#include "magma/perm.hpp"

namespace magma {

std::string_view to_string(Method m) {
  return m == Method::partition ? "partition" : "permutation";
}

std::optional<Method> parse_method(std::string_view s) {
  if (s == "partition") return Method::partition;
  if (s == "permutation") return Method::permutation;
  return std::nullopt;
}

namespace {

// sum_{d | L} d j_d; divisors beyond n have j_d = 0.
std::uint64_t chain_value_choices(const CycleType& j, std::uint64_t lcm) {
  std::uint64_t sum = 0;
  for (auto d : divisors(lcm)) {
    if (d > j.n()) break;
    sum += d * j.count(d);
  }
  return sum;
}

}  // namespace

BigCount fixed_point_count(const CycleType& j, std::uint32_t k, Variant variant) {
  checked_pow(j.n(), k);
  std::map<std::uint64_t, std::uint64_t> choices;  // lcm -> divisor sum
  BigCount product = 1;
  for_each_support_tuple(j, k, [&](std::span<const std::uint64_t> r) {
    std::vector<std::int64_t> rs(r.begin(), r.end());
    const std::uint64_t lcm = lcm_list(rs);
    auto it = choices.find(lcm);
    if (it == choices.end()) it = choices.emplace(lcm, chain_value_choices(j, lcm)).first;
    std::uint64_t exponent = box_chain_count(r, variant);
    for (auto ri : r) exponent = checked_mul(exponent, j.count(ri));
    product *= power(BigCount(it->second), exponent);
  });
  return product;
}

BigCount fixed_point_count(const CycleType& j, std::uint32_t k) {
  return fixed_point_count(j, k, Variant::correct);
}

BigCount fixed_point_count_harrison(const CycleType& j, std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("harrison-gcd variant is undefined for k = 0");
  return fixed_point_count(j, k, Variant::harrison_gcd);
}

namespace {

BigCount require_integral(const ExactRational& total, const char* what) {
  if (total.get_den() != 1) {
    throw NonIntegralError(std::string(what) + " is not integral: " + total.get_str());
  }
  return BigCount(total.get_num());
}

unsigned clamp_jobs(unsigned jobs, std::size_t work) {
  if (jobs == 0) jobs = 1;
  return static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(work, 1)));
}

void validate_variant(Variant variant, std::uint32_t k) {
  if (variant == Variant::harrison_gcd && k == 0) {
    throw std::invalid_argument("harrison-gcd variant is undefined for k = 0");
  }
}

}  // namespace

CensusResult count_k_magmas(std::uint32_t n, std::uint32_t k, Variant variant, const CensusOptions& options) {
  validate_variant(variant, k);
  const auto start = std::chrono::steady_clock::now();
  const auto types = enumerate_cycle_types(n);
  const unsigned workers = clamp_jobs(options.jobs, types.size());

  // Worker w takes types w, w + workers, ...; exact addition makes the
  // combined total independent of the split.
  std::vector<ExactRational> partial(workers, ExactRational(0));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < types.size(); i += workers) {
        const BigInt fixed = fixed_point_count(types[i], k, variant).value();
        partial[w] += make_rational(fixed, centralizer_order(types[i]));
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  ExactRational total = 0;
  for (const auto& p : partial) total += p;

  CensusResult result;
  result.query = {n, k, variant, Method::partition};
  result.count = require_integral(total, "cycle-type sum");
  result.terms_evaluated = types.size();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

CensusResult count_via_permutation_sum(std::uint32_t n, std::uint32_t k, Variant variant,
                                       const CensusOptions& options) {
  validate_variant(variant, k);
  if (n > options.permutation_guard) {
    throw GuardError("permutation sum needs n <= " + std::to_string(options.permutation_guard) +
                     ", got n = " + std::to_string(n));
  }
  const auto start = std::chrono::steady_clock::now();
  BigInt sum = 0;
  std::uint64_t visited = 0;
  for_each_permutation(n, [&](const Perm& sigma) {
    sum += fixed_point_count(cycle_type_of(sigma), k, variant).value();
    ++visited;
  });

  CensusResult result;
  result.query = {n, k, variant, Method::permutation};
  result.count = require_integral(make_rational(sum, factorial(n)), "permutation sum");
  result.terms_evaluated = visited;
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

BigCount count_via_cycle_index(std::uint32_t n, std::uint32_t k, Variant variant) {
  validate_variant(variant, k);
  return substitute_per_monomial(induce(cycle_index_recursive(n), k, variant),
                                 divisor_weighted_fixed_points);
}

CensusResult run_query(const CensusQuery& query, const CensusOptions& options) {
  if (query.method == Method::permutation) {
    return count_via_permutation_sum(query.n, query.k, query.variant, options);
  }
  return count_k_magmas(query.n, query.k, query.variant, options);
}

std::vector<CensusResult> sequence(std::uint32_t k, std::uint32_t n_lo, std::uint32_t n_hi, Variant variant,
                                   const CensusOptions& options) {
  if (n_lo > n_hi) throw std::invalid_argument("sequence range is empty");
  std::vector<CensusResult> out;
  for (std::uint32_t n = n_lo; n <= n_hi; ++n) out.push_back(count_k_magmas(n, k, variant, options));
  return out;
}

std::vector<CensusResult> arity_sequence(std::uint32_t n, std::uint32_t k_lo, std::uint32_t k_hi,
                                         Variant variant, const CensusOptions& options) {
  if (k_lo > k_hi) throw std::invalid_argument("sequence range is empty");
  std::vector<CensusResult> out;
  for (std::uint32_t k = k_lo; k <= k_hi; ++k) out.push_back(count_k_magmas(n, k, variant, options));
  return out;
}

}  // namespace magma
