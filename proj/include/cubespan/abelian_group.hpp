#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cubespan/exactmath.hpp"

namespace cubespan {

/// Residue tuple (a1, ..., am) with 0 <= aj < rj.
using Residues = std::vector<std::int64_t>;

namespace mixed_radix {

/// Lexicographic rank of `a` (first component most significant).
std::size_t index_of(const std::vector<std::int64_t>& radices, const Residues& a);
Residues element_at(const std::vector<std::int64_t>& radices, std::size_t index);
std::uint64_t size(const std::vector<std::int64_t>& radices);

}  // namespace mixed_radix

/// Z/r1 + ... + Z/rm with r1 | r2 | ... | rm and every rj >= 2.
///
/// Elements, characters and elements of Hom(G, Q/Z) all share the same
/// residue-tuple representation; the pairing <a, c> = sum aj cj / rj (mod 1)
/// realises both the character e(<a, c>) and the homomorphism value.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<std::int64_t> factors);

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::uint64_t order() const { return order_; }
  /// Largest invariant factor (1 for the trivial group).
  std::int64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  /// Number of even invariant factors.
  std::size_t even_factor_count() const;

  std::size_t index_of(const Residues& a) const { return mixed_radix::index_of(factors_, a); }
  Residues element(std::size_t index) const { return mixed_radix::element_at(factors_, index); }
  bool contains(const Residues& a) const;

  Residues zero() const { return Residues(factors_.size(), 0); }
  Residues add(const Residues& a, const Residues& b) const;
  Residues negate(const Residues& a) const;
  Residues scale(const Residues& a, std::int64_t k) const;
  std::int64_t element_order(const Residues& a) const;

  /// Numerator of <a, c> over exponent(), reduced into [0, exponent()).
  std::int64_t pairing_numerator(const Residues& a, const Residues& c) const;
  /// <a, c> as an exact rational in [0, 1).
  Rational pairing(const Residues& a, const Residues& c) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<std::int64_t> factors_;
  std::uint64_t order_ = 1;
};

/// Every isomorphism type of abelian group of the given order, as invariant factors.
std::vector<FiniteAbelianGroup> abelian_groups_of_order(std::int64_t order);
std::vector<FiniteAbelianGroup> abelian_groups_up_to(std::int64_t max_order);

}  // namespace cubespan
