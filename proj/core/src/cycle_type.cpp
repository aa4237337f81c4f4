#include "magma/cycle_type.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace magma {

CycleType::CycleType(std::size_t n, std::vector<std::uint32_t> counts) : counts_(std::move(counts)) {
  if (counts_.size() != n) throw std::invalid_argument("cycle type length must equal n");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) total += (i + 1) * std::uint64_t{counts_[i]};
  if (total != n) throw std::invalid_argument("cycle type does not sum to n");
}

CycleType CycleType::from_parts(std::span<const std::uint32_t> parts) {
  std::size_t n = 0;
  for (auto p : parts) {
    if (p == 0) throw std::invalid_argument("cycle length must be positive");
    n += p;
  }
  std::vector<std::uint32_t> counts(n, 0);
  for (auto p : parts) ++counts[p - 1];
  return CycleType(n, std::move(counts));
}

std::vector<std::uint32_t> CycleType::support() const {
  std::vector<std::uint32_t> s;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] > 0) s.push_back(static_cast<std::uint32_t>(i + 1));
  }
  return s;
}

std::vector<std::uint32_t> CycleType::parts_descending() const {
  std::vector<std::uint32_t> parts;
  for (std::size_t i = counts_.size(); i-- > 0;) {
    parts.insert(parts.end(), counts_[i], static_cast<std::uint32_t>(i + 1));
  }
  return parts;
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < counts_.size(); ++i) os << (i ? "," : "") << counts_[i];
  os << ')';
  return os.str();
}

namespace {

// Walks the descending parts of a cycle type without materializing them.
class PartCursor {
 public:
  explicit PartCursor(const CycleType& j) : j_(j), length_(j.n()) { settle(); }
  bool done() const { return length_ == 0; }
  std::uint64_t part() const { return length_; }
  void next() {
    ++used_;
    settle();
  }

 private:
  void settle() {
    while (length_ > 0 && used_ >= j_.count(length_)) {
      --length_;
      used_ = 0;
    }
  }
  const CycleType& j_;
  std::uint64_t length_;
  std::uint32_t used_ = 0;
};

}  // namespace

std::strong_ordering operator<=>(const CycleType& a, const CycleType& b) {
  if (auto c = a.n() <=> b.n(); c != 0) return c;
  PartCursor pa(a), pb(b);
  for (; !pa.done() && !pb.done(); pa.next(), pb.next()) {
    if (auto c = pa.part() <=> pb.part(); c != 0) return c;
  }
  return !pa.done() <=> !pb.done();
}

namespace {

// Partitions with parts written descending, first part ascending at every
// level, which yields lexicographic order of the descending sequences.
void partitions(std::size_t remaining, std::size_t max_part, std::vector<std::uint32_t>& prefix,
                const std::function<void(const CycleType&)>& visit) {
  if (remaining == 0) {
    visit(CycleType::from_parts(prefix));
    return;
  }
  for (std::size_t p = 1; p <= std::min(remaining, max_part); ++p) {
    prefix.push_back(static_cast<std::uint32_t>(p));
    partitions(remaining - p, p, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_cycle_type(std::size_t n, const std::function<void(const CycleType&)>& visit) {
  std::vector<std::uint32_t> prefix;
  prefix.reserve(n);
  partitions(n, n, prefix, visit);
}

std::vector<CycleType> enumerate_cycle_types(std::size_t n) {
  std::vector<CycleType> out;
  for_each_cycle_type(n, [&](const CycleType& j) { out.push_back(j); });
  return out;
}

BigInt centralizer_order(const CycleType& j) {
  BigInt z = 1;
  for (std::uint64_t i = 1; i <= j.n(); ++i) {
    const auto ji = j.count(i);
    if (ji == 0) continue;
    BigInt ipow;
    mpz_ui_pow_ui(ipow.get_mpz_t(), i, ji);
    z *= ipow * factorial(ji);
  }
  return z;
}

BigCount cycle_type_count(const CycleType& j) {
  const BigInt num = factorial(j.n());
  const BigInt den = centralizer_order(j);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("n! not divisible by centralizer order for " + j.to_string());
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return BigCount(std::move(q));
}

void for_each_support_tuple(const CycleType& j, std::uint32_t k,
                            const std::function<void(std::span<const std::uint64_t>)>& visit) {
  const auto support = j.support();
  if (k == 0) {
    visit({});
    return;
  }
  if (support.empty()) return;
  std::vector<std::size_t> digits(k, 0);
  std::vector<std::uint64_t> tuple(k, support[0]);
  while (true) {
    visit(tuple);
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < support.size()) {
        tuple[pos] = support[digits[pos]];
        break;
      }
      digits[pos] = 0;
      tuple[pos] = support[0];
      if (pos == 0) return;
    }
  }
}

}  // namespace magma
