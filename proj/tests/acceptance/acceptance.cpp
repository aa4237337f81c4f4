// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "magma/census.hpp"
#include "magma/cycle_index.hpp"
#include "magma/oracle.hpp"
#include "verify.hpp"

namespace {

using namespace magma;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;
};

void require(Outcome& o, bool condition, const std::string& what) {
  if (!condition && o.passed) {
    o.passed = false;
    o.detail = what;
  }
}

std::string nk(std::uint32_t n, std::uint32_t k) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

// 1. Brute-force orbit counts equal the cycle-type formula wherever the
//    tables can be enumerated (n^(n^k) <= 2^20). Budget 60 s.
Outcome oracle_equivalence() {
  Outcome o;
  const std::uint64_t cap = std::uint64_t{1} << 20;
  const auto configs = verify::enumerable_configurations(cap, 8);
  const std::set<std::pair<std::uint32_t, std::uint32_t>> have(configs.begin(), configs.end());
  for (std::uint32_t n = 0; n <= 7; ++n) require(o, have.count({n, 1}) == 1, "sweep misses " + nk(n, 1));
  for (std::uint32_t n = 0; n <= 3; ++n) require(o, have.count({n, 2}) == 1, "sweep misses " + nk(n, 2));
  for (std::uint32_t k = 0; k <= 4; ++k) require(o, have.count({2, k}) == 1, "sweep misses " + nk(2, k));
  for (auto [n, k] : configs) {
    const BigCount orbits = count_orbits_bruteforce(n, k, {cap, 8});
    const BigCount formula = count_k_magmas(n, k).count;
    require(o, orbits == formula, nk(n, k) + ": brute force " + orbits.str() + " vs formula " + formula.str());
  }
  if (o.passed) o.detail = std::to_string(configs.size()) + " configurations";
  return o;
}

// 2. Cell-cycle fixed-table counts equal the closed form for n <= 8, k <= 3,
//    and the gcd exponent is caught at k = 3. Budget 30 s.
Outcome structural_equivalence() {
  Outcome o;
  std::size_t checked = 0;
  for (std::uint32_t n = 0; n <= 8; ++n) {
    for (std::uint32_t k = 0; k <= 3; ++k) {
      for (const auto& j : enumerate_cycle_types(n)) {
        const BigCount structural = fixed_tables_structural(Perm::with_cycle_type(j), k);
        require(o, structural == fixed_point_count(j, k),
                nk(n, k) + " j=" + j.to_string() + ": structural " + structural.str());
        ++checked;
      }
    }
  }
  std::string caught;
  for (std::uint32_t n = 0; n <= 8 && caught.empty(); ++n) {
    for (const auto& j : enumerate_cycle_types(n)) {
      const BigCount structural = fixed_tables_structural(Perm::with_cycle_type(j), 3);
      const BigCount harrison = fixed_point_count_harrison(j, 3);
      if (structural != harrison) {
        caught = "gcd variant rejected at " + nk(n, 3) + " j=" + j.to_string() + " (" + structural.str() +
                 " vs " + harrison.str() + ")";
        break;
      }
    }
  }
  require(o, !caught.empty(), "structural check did not catch the gcd variant at k = 3");
  if (o.passed) o.detail = std::to_string(checked) + " cycle types; " + caught;
  return o;
}

// 3. Frozen values.
Outcome pinned_values() {
  Outcome o;
  auto expect = [&](std::uint32_t n, std::uint32_t k, Variant v, const std::string& want) {
    const std::string got = count_k_magmas(n, k, v).count.str();
    require(o, got == want,
            nk(n, k) + " " + std::string(to_string(v)) + ": got " + got + ", expected " + want);
  };
  expect(2, 2, Variant::correct, "10");
  expect(3, 2, Variant::correct, "3330");
  expect(4, 2, Variant::correct, "178981952");
  expect(2, 3, Variant::correct, "136");
  expect(2, 3, Variant::harrison_gcd, "130");
  const char* unary[] = {"1", "1", "3", "7", "19", "47", "130"};
  for (std::uint32_t n = 0; n <= 6; ++n) expect(n, 1, Variant::correct, unary[n]);
  const char* nullary[] = {"0", "1", "1", "1"};
  for (std::uint32_t n = 0; n <= 3; ++n) expect(n, 0, Variant::correct, nullary[n]);
  for (std::uint32_t k = 1; k <= 5; ++k) expect(0, k, Variant::correct, "1");
  if (o.passed) o.detail = "20 values";
  return o;
}

// 4. Recursion equals definition for n <= 25, coefficient sums are 1, and
//    Z_3, Z_3^[2] are 1/6(t1^3 + 3 t1 t2 + 2 t3) and 1/6(t1^9 + 3 t1 t2^4 + 2 t3^3). Budget 10 s.
Outcome cycle_index_fidelity() {
  Outcome o;
  for (std::size_t n = 0; n <= 25; ++n) {
    const auto direct = cycle_index_direct(n);
    require(o, cycle_index_recursive(n) == direct, "Z_" + std::to_string(n) + " recursion differs");
    require(o, coefficient_sum(direct) == 1, "Z_" + std::to_string(n) + " coefficients do not sum to 1");
  }
  // Common denominator 6; multiplicities and monomials as printed.
  const std::vector<std::pair<int, Exponents>> z3 = {{1, {{1, 3}}}, {3, {{1, 1}, {2, 1}}}, {2, {{3, 1}}}};
  const std::vector<std::pair<int, Exponents>> z3sq = {{1, {{1, 9}}}, {3, {{1, 1}, {2, 4}}}, {2, {{3, 3}}}};
  auto matches = [](const CycleIndexPoly& z, const std::vector<std::pair<int, Exponents>>& want) {
    if (z.terms().size() != want.size()) return false;
    for (std::size_t i = 0; i < want.size(); ++i) {
      if (z.terms()[i].coefficient != make_rational(want[i].first, 6)) return false;
      if (z.terms()[i].monomial.exponents != want[i].second) return false;
    }
    return true;
  };
  const auto zeta3 = cycle_index_recursive(3);
  const auto zeta3sq = induce(zeta3, 2);
  require(o, matches(zeta3, z3), "Z_3 terms differ: " + render(zeta3));
  require(o, matches(zeta3sq, z3sq), "Z_3^[2] terms differ: " + render(zeta3sq));
  require(o, render(zeta3) == "1/6*t1^3 + 1/2*t1*t2 + 1/3*t3", "Z_3 renders as " + render(zeta3));
  require(o, render(zeta3sq) == "1/6*t1^9 + 1/2*t1*t2^4 + 1/3*t3^3", "Z_3^[2] renders as " + render(zeta3sq));
  if (o.passed) o.detail = "n <= 25; " + render(zeta3) + " | " + render(zeta3sq);
  return o;
}

// 5. Highest indeterminate of Z_n^[2]: <= n for n <= 4, <= floor(n^2/4) for n >= 4.
Outcome remark_bound() {
  Outcome o;
  std::ostringstream seen;
  for (std::uint64_t n = 0; n <= 9; ++n) {
    const auto top = max_indeterminate_index(induce(cycle_index_direct(n), 2));
    seen << (n ? " " : "") << top;
    if (n <= 4) require(o, top <= n, "n=" + std::to_string(n) + " uses t" + std::to_string(top));
    if (n >= 4) require(o, top <= n * n / 4, "n=" + std::to_string(n) + " uses t" + std::to_string(top));
  }
  if (o.passed) o.detail = "max index for n=0..9: " + seen.str();
  return o;
}

// 6. Partition sum = permutation sum = cycle-index substitution, n <= 6, k <= 3.
Outcome cross_method() {
  Outcome o;
  std::size_t checked = 0;
  for (Variant v : {Variant::correct, Variant::harrison_gcd}) {
    for (std::uint32_t k = v == Variant::harrison_gcd ? 1 : 0; k <= 3; ++k) {
      for (std::uint32_t n = 0; n <= 6; ++n) {
        const BigCount a = count_k_magmas(n, k, v).count;
        const BigCount b = count_via_permutation_sum(n, k, v).count;
        const BigCount c = count_via_cycle_index(n, k, v);
        require(o, a == b && a == c,
                nk(n, k) + " " + std::string(to_string(v)) + ": " + a.str() + " / " + b.str() + " / " + c.str());
        ++checked;
      }
    }
  }
  if (o.passed) o.detail = std::to_string(checked) + " (n,k,variant) triples";
  return o;
}

// 7. Worker count does not change CLI output. The n = 5, k = 2 term has no
//    desk-scale oracle; it rests on criteria 2 and 6.
Outcome determinism() {
  Outcome o;
  auto capture = [](const char* jobs) {
    std::ostringstream out, err;
    const int code = cli::run({"sequence", "--k", "2", "--from", "0", "--to", "5", "--jobs", jobs}, out, err);
    return std::pair{code, out.str()};
  };
  const auto [code1, out1] = capture("1");
  const auto [code8, out8] = capture("8");
  require(o, code1 == 0 && code8 == 0, "sequence exited non-zero");
  require(o, out1 == out8, "outputs differ between --jobs 1 and --jobs 8");
  require(o, out1 == "1\n1\n10\n3330\n178981952\n2483527537094825\n", "unexpected row: " + out1);
  if (o.passed) o.detail = std::to_string(out1.size()) + " identical bytes";
  return o;
}

// 8. Seeded group-action, automorphism and orbit-stabilizer laws.
Outcome action_laws() {
  Outcome o;
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_int_distribution<std::uint32_t> size(1, 5), small(1, 4), arity(0, 3);
  for (int i = 0; i < 500; ++i) {
    const auto n = size(rng), k = arity(rng);
    const Perm p = random_perm(n, rng), q = random_perm(n, rng);
    const OpTable t = random_table(n, k, rng);
    require(o, act(Perm::identity(n), t) == t, "identity law fails at " + nk(n, k));
    require(o, act(p * q, t) == act(p, act(q, t)), "composition law fails at " + nk(n, k));
  }
  int fixed = 0;
  for (int i = 0; i < 500; ++i) {
    const auto n = size(rng), k = arity(rng) + (i % 2 == 0 ? 1 : 0);
    const Perm p = random_perm(n, rng);
    const OpTable t = i % 2 == 0 ? random_fixed_table(p, k, rng) : random_table(n, k, rng);
    const bool is_fixed = act(p, t) == t;
    fixed += is_fixed;
    require(o, is_automorphism(p, t) == is_fixed, "automorphism test disagrees at " + nk(n, k));
  }
  for (int i = 0; i < 100; ++i) {
    const auto n = small(rng), k = arity(rng);
    require(o, orbit_stabilizer_check(random_table(n, k, rng)), "orbit-stabilizer fails at " + nk(n, k));
  }
  if (o.passed) o.detail = "500 + 500 (" + std::to_string(fixed) + " fixed) + 100 seeded samples";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
  double budget_seconds;  // 0 = none stated
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence", oracle_equivalence, 60},
      {2, "structural fixed-point equivalence", structural_equivalence, 30},
      {3, "pinned values", pinned_values, 0},
      {4, "cycle-index fidelity", cycle_index_fidelity, 10},
      {5, "remark bound", remark_bound, 0},
      {6, "cross-method and cross-representation", cross_method, 0},
      {7, "determinism across --jobs", determinism, 0},
      {8, "group-action laws", action_laws, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      o.passed = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget)";
    }
    failures += !o.passed;
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << ": " << o.detail << " ["
              << std::fixed << std::setprecision(2) << seconds << " s]\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
