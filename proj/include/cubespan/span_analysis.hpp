#pragma once

// Linear functionals vanishing on Lambda ∩ [0,1)^n: the pairing/kernel
// relation system, the iota + kappa dimension count, and the involution
// certificate for point sets balanced on the hyperplane sum = |supp| / 2.
// Every formula has a brute-force counterpart computed from the cube points.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cubespan/lattice.hpp"

namespace cubespan {

/// Partitions of the non-trivial coordinates (0-based indices).
struct CoordClasses {
  /// i ~ j iff pi_i = pi_j or pi_i = -pi_j.
  std::vector<std::vector<std::size_t>> i_classes;
  /// i ~ j iff ker pi_i = ker pi_j.
  std::vector<std::vector<std::size_t>> k_classes;
  /// Per coordinate: pi_i = -pi_i (true for trivial coordinates as well).
  std::vector<bool> self_negative;
  /// Per I-class: whether its projection is its own negative.
  std::vector<bool> i_class_self_negative;
  /// Per I-class: whether it holds i, j (possibly equal) with pi_i = -pi_j.
  std::vector<bool> i_class_paired;
  /// For each K-class, the indices of the I-classes it contains.
  std::vector<std::vector<std::size_t>> k_class_members;
};

CoordClasses coordinate_classes(const QuotientGroup& qg, std::uint64_t cap = kDefaultPointCap);

struct IotaKappa {
  std::size_t iota = 0;
  std::size_t kappa = 0;
};

IotaKappa iota_kappa(const CoordClasses& classes);

std::size_t span_dimension(const QuotientGroup& qg, std::uint64_t cap = kDefaultPointCap);

/// Rows: one pairing relation per I-class whose projection is not self-negative,
/// then one kernel relation per K-class. Trivial coordinates are left free.
RationalMatrix relation_system(const QuotientGroup& qg, const CoordClasses& classes);

/// Rows are the cube points.
RationalMatrix point_matrix(const QuotientGroup& qg, std::uint64_t cap = kDefaultPointCap);

enum class VanishingMethod { Formula, BruteForce };

std::vector<RationalVector> vanishing_functionals(const QuotientGroup& qg, VanishingMethod method,
                                                  std::uint64_t cap = kDefaultPointCap);

/// Both vanishing-functional routes describe the same subspace.
bool verify_terminal_lemma(const QuotientGroup& qg, std::uint64_t cap = kDefaultPointCap);

/// h_u(phi) = sum_{pi_i = phi} u_i - sum_{pi_i = -phi} u_i, indexed like the group.
std::vector<Rational> h_u_function(const QuotientGroup& qg, const RationalVector& u);

struct AlternateIdentitySides {
  Rational direct;    ///< <u, lambda>, exact
  double via_s = 0;   ///< (|H| <h_u, S_lambda> + sum_{lambda_i != 0} u_i) / 2
};

AlternateIdentitySides alternate_identity_sides(const RationalVector& u, const CubePoint& point,
                                                const QuotientGroup& qg,
                                                std::uint64_t cap = kDefaultPointCap);

/// Both sides of the identity agree within 1e-9.
bool check_alternate_identity(const RationalVector& u, const CubePoint& point,
                              const QuotientGroup& qg, std::uint64_t cap = kDefaultPointCap);

struct SeboResult {
  bool holds = false;
  /// 0-based involution sigma with sigma = sigma^{-1}; present iff holds.
  std::optional<std::vector<std::size_t>> involution;
  /// First cube point (lexicographic element order) with sum != |supp| / 2.
  std::optional<CubePoint> witness;
};

SeboResult sebo_check(const QuotientGroup& qg, std::uint64_t cap = kDefaultPointCap);

/// lambda_i + lambda_sigma(i) integral for every group generator and every i.
bool involution_pairs_generators(const QuotientGroup& qg, const std::vector<std::size_t>& sigma);

/// 1-based cycle notation, e.g. "(1 2)(3 4)", or "id".
std::string cycle_notation(const std::vector<std::size_t>& sigma);

}  // namespace cubespan
