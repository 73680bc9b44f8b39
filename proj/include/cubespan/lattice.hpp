#pragma once

// Quotient groups Lambda / Z^n of rational lattices containing Z^n, the
// lattice points of Lambda in the half-open cube [0,1)^n, and the box-point
// description of h*-vectors of lattice simplices.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubespan/abelian_group.hpp"
#include "cubespan/exactmath.hpp"

namespace cubespan {

/// Thrown when an enumeration would exceed the configured point cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown for simplices whose homogenised vertex matrix is singular.
class DegenerateSimplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultPointCap = 1'000'000;

/// Point cap from CUBESPAN_MAX_POINTS when set to a positive integer, else the default.
std::uint64_t point_cap_from_env();

/// Lambda = Z^n + sum of Z * generator.
struct LatticeSpec {
  std::size_t n = 0;
  std::vector<RationalVector> generators;

  /// Throws std::invalid_argument when n == 0 or a generator has the wrong length.
  void validate() const;
};

/// Invariant-factor presentation of Lambda / Z^n together with the coordinate
/// projections: coordinate i of group generator j is projections[i][j] / rj (mod 1).
struct QuotientGroup {
  std::size_t n = 0;
  FiniteAbelianGroup group;
  std::vector<Residues> projections;
  /// Coordinates whose projection is identically zero.
  std::vector<std::size_t> trivial_coordinates;

  std::uint64_t order() const { return group.order(); }
  const std::vector<std::int64_t>& factors() const { return group.factors(); }
  bool is_trivial(std::size_t i) const;

  /// {pi_i(element)} as an exact rational in [0, 1).
  Rational coordinate(std::size_t i, const Residues& element) const;
  RationalVector point(const Residues& element) const;
};

struct CubePoint {
  RationalVector coords;
  Residues element;

  friend bool operator==(const CubePoint&, const CubePoint&) = default;
};

QuotientGroup build_quotient(const LatticeSpec& spec);

CubePoint make_point(const QuotientGroup& qg, const Residues& element);

/// One point per group element, in lexicographic order of the residue tuple.
std::vector<CubePoint> cube_points(const QuotientGroup& qg, std::uint64_t cap = kDefaultPointCap);

/// The unique cube point mu with lambda + Z^n = -mu + Z^n.
CubePoint negate_point(const CubePoint& p, const QuotientGroup& qg);

using Vertex = std::vector<std::int64_t>;

/// Lattice of lambda with sum_i lambda_i (v_i, 1) integral, i.e. the dual of the
/// lattice spanned by the columns of the homogenised vertex matrix. Its cube
/// points are the box points of the cone over the simplex.
LatticeSpec simplex_dual_lattice(const std::vector<Vertex>& vertices);

/// (h*_0, ..., h*_{n-1}) counted from the box points of the simplex.
std::vector<std::uint64_t> h_star(const std::vector<Vertex>& vertices,
                                  std::uint64_t cap = kDefaultPointCap);

}  // namespace cubespan
