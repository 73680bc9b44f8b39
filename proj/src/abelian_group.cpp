#include "cubespan/abelian_group.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cubespan {

namespace mixed_radix {

std::size_t index_of(const std::vector<std::int64_t>& radices, const Residues& a) {
  if (a.size() != radices.size()) throw std::invalid_argument("residue tuple has wrong length");
  std::size_t idx = 0;
  for (std::size_t j = 0; j < radices.size(); ++j) {
    if (a[j] < 0 || a[j] >= radices[j]) throw std::out_of_range("residue out of range");
    idx = idx * static_cast<std::size_t>(radices[j]) + static_cast<std::size_t>(a[j]);
  }
  return idx;
}

Residues element_at(const std::vector<std::int64_t>& radices, std::size_t index) {
  Residues a(radices.size());
  for (std::size_t j = radices.size(); j-- > 0;) {
    const auto r = static_cast<std::size_t>(radices[j]);
    a[j] = static_cast<std::int64_t>(index % r);
    index /= r;
  }
  return a;
}

std::uint64_t size(const std::vector<std::int64_t>& radices) {
  std::uint64_t n = 1;
  for (auto r : radices) n *= static_cast<std::uint64_t>(r);
  return n;
}

}  // namespace mixed_radix

namespace {

std::int64_t mod(std::int64_t x, std::int64_t r) {
  x %= r;
  return x < 0 ? x + r : x;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> factors)
    : factors_(std::move(factors)) {
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (factors_[j] < 2)
      throw std::invalid_argument("invariant factor must be >= 2, got " + std::to_string(factors_[j]));
    if (j > 0 && factors_[j] % factors_[j - 1] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
  order_ = mixed_radix::size(factors_);
}

std::size_t FiniteAbelianGroup::even_factor_count() const {
  std::size_t s = 0;
  for (auto r : factors_) s += (r % 2 == 0);
  return s;
}

bool FiniteAbelianGroup::contains(const Residues& a) const {
  if (a.size() != factors_.size()) return false;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] < 0 || a[j] >= factors_[j]) return false;
  return true;
}

Residues FiniteAbelianGroup::add(const Residues& a, const Residues& b) const {
  Residues c(factors_.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = (a[j] + b[j]) % factors_[j];
  return c;
}

Residues FiniteAbelianGroup::negate(const Residues& a) const {
  Residues c(factors_.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = a[j] == 0 ? 0 : factors_[j] - a[j];
  return c;
}

Residues FiniteAbelianGroup::scale(const Residues& a, std::int64_t k) const {
  Residues c(factors_.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    c[j] = static_cast<std::int64_t>(
        static_cast<__int128>(a[j]) * mod(k, factors_[j]) % factors_[j]);
  return c;
}

std::int64_t FiniteAbelianGroup::element_order(const Residues& a) const {
  std::int64_t ord = 1;
  for (std::size_t j = 0; j < factors_.size(); ++j)
    ord = std::lcm(ord, factors_[j] / std::gcd(factors_[j], a[j]));
  return ord;
}

std::int64_t FiniteAbelianGroup::pairing_numerator(const Residues& a, const Residues& c) const {
  const std::int64_t e = exponent();
  __int128 total = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    const auto prod = static_cast<__int128>(a[j]) * c[j] % factors_[j];
    total += prod * (e / factors_[j]);
  }
  return static_cast<std::int64_t>(total % e);
}

Rational FiniteAbelianGroup::pairing(const Residues& a, const Residues& c) const {
  return {Integer(static_cast<long>(pairing_numerator(a, c))), Integer(static_cast<long>(exponent()))};
}

namespace {

void chains(std::int64_t remaining, std::int64_t last, std::vector<std::int64_t>& prefix,
            std::vector<FiniteAbelianGroup>& out) {
  if (remaining == 1) {
    out.emplace_back(prefix);
    return;
  }
  // Next factor is a multiple of the previous one and divides what is left.
  for (std::int64_t r = last; r <= remaining; r += last) {
    if (r < 2 || remaining % r != 0) continue;
    // Every later factor is a multiple of r, so r must divide remaining / r unless it is last.
    if (remaining != r && (remaining / r) % r != 0) continue;
    prefix.push_back(r);
    chains(remaining / r, r, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<FiniteAbelianGroup> abelian_groups_of_order(std::int64_t order) {
  if (order < 1) throw std::invalid_argument("group order must be positive");
  std::vector<FiniteAbelianGroup> out;
  std::vector<std::int64_t> prefix;
  chains(order, 1, prefix, out);
  return out;
}

std::vector<FiniteAbelianGroup> abelian_groups_up_to(std::int64_t max_order) {
  std::vector<FiniteAbelianGroup> out;
  for (std::int64_t n = 1; n <= max_order; ++n) {
    auto gs = abelian_groups_of_order(n);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  return out;
}

}  // namespace cubespan
