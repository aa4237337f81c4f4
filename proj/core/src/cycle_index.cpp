#include "magma/cycle_index.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace magma {

CycleIndexPoly::CycleIndexPoly(std::size_t n, std::optional<std::uint32_t> power, std::vector<Term> terms)
    : n_(n), power_(power), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.monomial.origin.n() != n_) throw std::invalid_argument("term origin has the wrong degree");
    if (sgn(t.coefficient) <= 0) throw std::invalid_argument("cycle index coefficients are positive");
  }
}

namespace {

Exponents natural_exponents(const CycleType& j) {
  Exponents e;
  for (auto r : j.support()) e[r] = j.count(r);
  return e;
}

}  // namespace

CycleIndexPoly cycle_index_direct(std::size_t n) {
  std::vector<Term> terms;
  for_each_cycle_type(n, [&](const CycleType& j) {
    terms.push_back({make_rational(1, centralizer_order(j)), {j, natural_exponents(j)}});
  });
  return CycleIndexPoly(n, std::nullopt, std::move(terms));
}

namespace {

// Z_0..Z_m, each as an origin-keyed map so the recursion can merge the
// contributions t_i * Z_{n-i} that land on the same cycle type.
struct RecursionMemo {
  std::mutex mutex;
  std::vector<std::map<CycleType, Term>> table;
};

RecursionMemo& recursion_memo() {
  static RecursionMemo memo;
  return memo;
}

CycleType extend_with_cycle(const CycleType& j, std::size_t n, std::uint64_t length) {
  std::vector<std::uint32_t> counts(n, 0);
  for (std::uint64_t i = 1; i <= j.n(); ++i) counts[i - 1] = j.count(i);
  ++counts[length - 1];
  return CycleType(n, std::move(counts));
}

}  // namespace

CycleIndexPoly cycle_index_recursive(std::size_t n) {
  auto& memo = recursion_memo();
  std::lock_guard lock(memo.mutex);
  auto& table = memo.table;
  if (table.empty()) {
    Term one{ExactRational(1), {CycleType(), {}}};
    table.push_back({{CycleType(), one}});
  }
  for (std::size_t m = table.size(); m <= n; ++m) {
    std::map<CycleType, Term> zm;
    const ExactRational inv_m = make_rational(1, static_cast<unsigned long>(m));
    for (std::uint64_t i = 1; i <= m; ++i) {
      for (const auto& [origin, term] : table[m - i]) {
        CycleType target = extend_with_cycle(origin, m, i);
        Exponents exps = term.monomial.exponents;
        ++exps[i];
        ExactRational c = term.coefficient * inv_m;
        auto it = zm.find(target);
        if (it == zm.end()) {
          zm.emplace(target, Term{c, {target, std::move(exps)}});
        } else {
          if (it->second.monomial.exponents != exps) {
            throw std::logic_error("recursion produced two monomials for " + target.to_string());
          }
          it->second.coefficient += c;
        }
      }
    }
    table.push_back(std::move(zm));
  }
  std::vector<Term> terms;
  terms.reserve(table[n].size());
  for (const auto& [origin, term] : table[n]) terms.push_back(term);
  return CycleIndexPoly(n, std::nullopt, std::move(terms));
}

CycleIndexPoly induce(const CycleIndexPoly& z, std::uint32_t k, Variant variant) {
  if (!z.is_natural()) throw std::invalid_argument("induce expects a natural-action cycle index");
  // Every exponent is bounded by the number of cells n^k.
  checked_pow(z.n(), k);
  std::vector<Term> terms;
  terms.reserve(z.terms().size());
  for (const auto& term : z.terms()) {
    const CycleType& j = term.monomial.origin;
    Exponents exps;
    for_each_support_tuple(j, k, [&](std::span<const std::uint64_t> r) {
      std::uint64_t e = box_chain_count(r, variant);
      for (auto ri : r) e = checked_mul(e, j.count(ri));
      std::vector<std::int64_t> rs(r.begin(), r.end());
      exps[lcm_list(rs)] += e;
    });
    terms.push_back({term.coefficient, {j, std::move(exps)}});
  }
  return CycleIndexPoly(z.n(), k, std::move(terms));
}

BigCount substitute_per_monomial(const CycleIndexPoly& z, const Substitution& f) {
  ExactRational total = 0;
  for (const auto& term : z.terms()) {
    BigCount product = 1;
    for (const auto& [index, exponent] : term.monomial.exponents) {
      product *= power(f(term.monomial.origin, index), exponent);
    }
    total += term.coefficient * ExactRational(product.value());
  }
  if (total.get_den() != 1) {
    throw NonIntegralError("per-monomial substitution is not integral: " + total.get_str());
  }
  return BigCount(total.get_num());
}

BigCount divisor_weighted_fixed_points(const CycleType& origin, std::uint64_t index) {
  std::uint64_t sum = 0;
  for (auto d : divisors(index)) {
    if (d > origin.n()) break;
    sum += d * origin.count(d);
  }
  return BigCount(sum);
}

std::uint64_t max_indeterminate_index(const CycleIndexPoly& z) {
  if (z.terms().empty()) throw std::invalid_argument("empty cycle index");
  std::uint64_t best = 0;
  for (const auto& t : z.terms()) {
    if (!t.monomial.exponents.empty()) best = std::max(best, t.monomial.exponents.rbegin()->first);
  }
  return best;
}

ExactRational coefficient_sum(const CycleIndexPoly& z) {
  ExactRational s = 0;
  for (const auto& t : z.terms()) s += t.coefficient;
  return s;
}

std::string render(const CycleIndexPoly& z) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : z.terms()) {
    if (!first) os << " + ";
    first = false;
    std::ostringstream mono;
    bool first_factor = true;
    for (const auto& [index, exponent] : t.monomial.exponents) {
      if (!first_factor) mono << '*';
      first_factor = false;
      mono << 't' << index;
      if (exponent != 1) mono << '^' << exponent;
    }
    const std::string m = mono.str();
    const std::string c = t.coefficient.get_den() == 1 ? t.coefficient.get_num().get_str()
                                                       : t.coefficient.get_str();
    if (m.empty()) {
      os << c;
    } else if (t.coefficient == 1) {
      os << m;
    } else {
      os << c << '*' << m;
    }
  }
  return os.str();
}

}  // namespace magma
