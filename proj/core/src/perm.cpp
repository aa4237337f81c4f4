#include "magma/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace magma {

Perm::Perm(std::vector<Element> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("image list is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<Element> images(n);
  std::iota(images.begin(), images.end(), Element{0});
  return Perm(std::move(images));
}

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<Element>>& cycles) {
  std::vector<Element> images(n);
  std::iota(images.begin(), images.end(), Element{0});
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Element x = cycle[i];
      if (x >= n || used[x]) throw std::invalid_argument("cycles are not disjoint or out of range");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(std::move(images));
}

Perm Perm::with_cycle_type(const CycleType& j) {
  std::vector<std::vector<Element>> cycles;
  Element next = 0;
  for (std::uint32_t len = 1; len <= j.n(); ++len) {
    for (std::uint32_t c = 0; c < j.count(len); ++c) {
      std::vector<Element> cycle(len);
      std::iota(cycle.begin(), cycle.end(), next);
      next += len;
      cycles.push_back(std::move(cycle));
    }
  }
  return from_cycles(j.n(), cycles);
}

Perm Perm::inverse() const {
  std::vector<Element> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[images_[x]] = static_cast<Element>(x);
  return Perm(std::move(inv));
}

Perm Perm::pow(std::uint64_t exponent) const {
  Perm result = identity(size());
  Perm base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = compose(result, base);
    base = compose(base, base);
    exponent >>= 1;
  }
  return result;
}

std::vector<std::vector<Element>> Perm::cycles() const {
  std::vector<std::vector<Element>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Element start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Element> cycle;
    for (Element x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::uint64_t Perm::order() const {
  std::uint64_t acc = 1;
  for (const auto& c : cycles()) acc = std::lcm(acc, std::uint64_t{c.size()});
  return acc;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i] + 1;
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<Element> images(p.size());
  for (Element x = 0; x < p.size(); ++x) images[x] = p(q(x));
  return Perm(std::move(images));
}

CycleType cycle_type_of(const Perm& p) {
  std::vector<std::uint32_t> counts(p.size(), 0);
  for (const auto& c : p.cycles()) ++counts[c.size() - 1];
  return CycleType(p.size(), std::move(counts));
}

std::vector<Element> apply_tuple(const Perm& p, std::span<const Element> tuple) {
  std::vector<Element> out;
  out.reserve(tuple.size());
  for (auto x : tuple) {
    if (x >= p.size()) throw std::out_of_range("tuple coordinate outside the ground set");
    out.push_back(p(x));
  }
  return out;
}

}  // namespace magma
