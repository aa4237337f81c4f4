#include "cli.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "magma/census.hpp"
#include "magma/cycle_index.hpp"
#include "magma/oracle.hpp"
#include "verify.hpp"

namespace magma::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonFlags {
  std::uint64_t max_cells = std::uint64_t{1} << 20;
  std::uint32_t perm_guard = 8;
  std::optional<unsigned> jobs;
  std::uint64_t seed = kDefaultSeed;
};

void add_common(CLI::App& cmd, CommonFlags& flags) {
  cmd.add_option("--max-cells", flags.max_cells, "Largest number of tables n^(n^k) to enumerate")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--perm-guard", flags.perm_guard, "Largest n for sums over all of S_n");
  cmd.add_option("--jobs", flags.jobs, "Worker threads (env MAGMA_CENSUS_JOBS)");
  cmd.add_option("--seed", flags.seed, "Seed for randomized checks");
}

unsigned resolve_jobs(const CommonFlags& flags) {
  if (flags.jobs) {
    if (*flags.jobs == 0) throw UsageError("--jobs must be at least 1");
    return *flags.jobs;
  }
  if (const char* env = std::getenv("MAGMA_CENSUS_JOBS"); env && *env) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != std::string_view(env).size() || v == 0) {
      throw UsageError("MAGMA_CENSUS_JOBS must be a positive integer");
    }
    return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Variant variant_of(const std::string& s) { return *parse_variant(s); }

Json to_json(const CensusResult& r) {
  Json j;
  j["n"] = r.query.n;
  j["k"] = r.query.k;
  j["variant"] = std::string(to_string(r.query.variant));
  j["count"] = r.count.str();
  return j;
}

void print_results(const std::vector<CensusResult>& results, const std::string& format, bool vary_k,
                   std::ostream& out) {
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : results) arr.push_back(to_json(r));
    out << arr.dump() << '\n';
    return;
  }
  for (const auto& r : results) {
    if (format == "bfile") out << (vary_k ? r.query.k : r.query.n) << ' ';
    out << r.count << '\n';
  }
}

Json to_json(const CycleIndexPoly& z) {
  Json j;
  j["n"] = z.n();
  j["power"] = z.power() ? Json(*z.power()) : Json(nullptr);
  Json terms = Json::array();
  for (const auto& t : z.terms()) {
    Json term;
    term["coefficient"] = t.coefficient.get_str();
    Json exps = Json::object();
    for (const auto& [index, exponent] : t.monomial.exponents) exps[std::to_string(index)] = exponent;
    term["exponents"] = exps;
    Json origin = Json::array();
    for (auto c : t.monomial.origin.counts()) origin.push_back(c);
    term["origin"] = origin;
    terms.push_back(term);
  }
  j["terms"] = terms;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts isomorphism classes of k-ary operations on finite sets", "magma-census"};
  app.require_subcommand(1);

  const std::vector<std::string> variants = {"correct", "harrison-gcd"};

  // count
  std::uint32_t count_n = 0, count_k = 2;
  std::string count_variant = "correct", count_method = "partition", count_format = "plain";
  CommonFlags count_flags;
  auto* count = app.add_subcommand("count", "Number of isomorphism classes of k-magmas on an n-set");
  count->add_option("--n", count_n, "Ground set size")->required();
  count->add_option("--k", count_k, "Arity")->capture_default_str();
  count->add_option("--variant", count_variant)->check(CLI::IsMember(variants))->capture_default_str();
  count->add_option("--method", count_method)
      ->check(CLI::IsMember({"partition", "permutation"}))
      ->capture_default_str();
  count->add_option("--format", count_format)->check(CLI::IsMember({"plain", "json"}))->capture_default_str();
  add_common(*count, count_flags);

  // sequence
  std::uint32_t seq_k = 2, seq_n = 0, seq_from = 0, seq_to = 0;
  std::string seq_variant = "correct", seq_format = "plain", seq_vary = "n";
  CommonFlags seq_flags;
  auto* seq = app.add_subcommand("sequence", "A row (vary n) or column (vary k) of counts");
  seq->add_option("--k", seq_k, "Arity, when varying n")->capture_default_str();
  seq->add_option("--n", seq_n, "Ground set size, when varying k");
  seq->add_option("--from", seq_from)->required();
  seq->add_option("--to", seq_to)->required();
  seq->add_option("--vary", seq_vary, "Which parameter runs over [from, to]")
      ->check(CLI::IsMember({"n", "k"}))
      ->capture_default_str();
  seq->add_option("--variant", seq_variant)->check(CLI::IsMember(variants))->capture_default_str();
  seq->add_option("--format", seq_format)
      ->check(CLI::IsMember({"plain", "json", "bfile"}))
      ->capture_default_str();
  add_common(*seq, seq_flags);

  // cycle-index
  std::uint32_t ci_n = 0;
  std::optional<std::uint32_t> ci_power;
  std::string ci_format = "plain";
  CommonFlags ci_flags;
  auto* ci = app.add_subcommand("cycle-index", "Print Z_n or the induced index Z_n^[k]");
  ci->add_option("--n", ci_n)->required();
  ci->add_option("--power", ci_power, "Induced action on k-tuples");
  ci->add_option("--format", ci_format)->check(CLI::IsMember({"plain", "json"}))->capture_default_str();
  add_common(*ci, ci_flags);

  // verify
  std::vector<std::string> suites;
  std::optional<std::uint32_t> v_n_max, v_k_max;
  std::string v_variant = "correct";
  CommonFlags v_flags;
  std::vector<std::string> suite_choices = verify::suite_names();
  suite_choices.push_back("all");
  auto* ver = app.add_subcommand("verify", "Cross-check formulas against the brute-force oracles");
  ver->add_option("--suite", suites, "Suite to run (repeatable)")->check(CLI::IsMember(suite_choices));
  ver->add_option("--n-max", v_n_max);
  ver->add_option("--k-max", v_k_max);
  ver->add_option("--variant", v_variant, "Closed form checked by the structural suite")
      ->check(CLI::IsMember(variants))
      ->capture_default_str();
  add_common(*ver, v_flags);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("magma-census");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (count->parsed()) {
      CensusQuery q{count_n, count_k, variant_of(count_variant), *parse_method(count_method)};
      const CensusOptions opts{resolve_jobs(count_flags), count_flags.perm_guard};
      const CensusResult r = run_query(q, opts);
      if (count_format == "json") {
        out << to_json(r).dump() << '\n';
      } else {
        out << r.count << '\n';
      }
    } else if (seq->parsed()) {
      if (seq_from > seq_to) throw UsageError("--from must not exceed --to");
      const CensusOptions opts{resolve_jobs(seq_flags), seq_flags.perm_guard};
      const Variant v = variant_of(seq_variant);
      const bool vary_k = seq_vary == "k";
      if (vary_k && seq->count("--n") == 0) throw UsageError("--vary k needs --n");
      const auto results = vary_k ? arity_sequence(seq_n, seq_from, seq_to, v, opts)
                                  : sequence(seq_k, seq_from, seq_to, v, opts);
      print_results(results, seq_format, vary_k, out);
    } else if (ci->parsed()) {
      CycleIndexPoly z = cycle_index_recursive(ci_n);
      if (ci_power) z = induce(z, *ci_power);
      if (ci_format == "json") {
        out << to_json(z).dump() << '\n';
      } else {
        out << render(z) << '\n';
      }
    } else if (ver->parsed()) {
      verify::SuiteConfig config;
      config.table_cap = v_flags.max_cells;
      config.permutation_guard = v_flags.perm_guard;
      config.n_max = v_n_max;
      config.k_max = v_k_max;
      config.variant = variant_of(v_variant);
      config.seed = v_flags.seed;
      config.jobs = resolve_jobs(v_flags);
      if (suites.empty() || std::find(suites.begin(), suites.end(), "all") != suites.end()) {
        suites = verify::suite_names();
      }
      bool all_passed = true;
      for (const auto& name : suites) {
        const auto report = verify::run_suite(name, config);
        out << (report.passed ? "PASS " : "FAIL ") << report.name << ": " << report.summary << '\n';
        if (!report.passed) {
          out << "  counterexample: " << report.counterexample << '\n';
          all_passed = false;
        }
      }
      return all_passed ? kSuccess : kVerificationFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return kGuardViolation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kGuardViolation;
  }
  return kSuccess;
}

}  // namespace magma::cli
