#pragma once

// Dirichlet characters, conductors and Gauss sums; the ring R = Z/r1 + ... + Z/rm
// with its unit-group characters, and the w / v functions built from the
// periodic Bernoulli function B1 on R.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cubespan/characters.hpp"
#include "cubespan/exactmath.hpp"

namespace cubespan {

/// Character of (Z/r)^x extended by zero. Values are stored as exact angles:
/// chi(n) = e(angle[n mod r] / denominator), angle = -1 off the units.
class DirichletCharacter {
 public:
  /// The unique character mod 1.
  DirichletCharacter() : DirichletCharacter(1, 1, {0}) {}
  DirichletCharacter(std::int64_t modulus, std::int64_t denominator, std::vector<std::int64_t> angles);

  std::int64_t modulus() const { return modulus_; }
  std::int64_t denominator() const { return denominator_; }
  const std::vector<std::int64_t>& angles() const { return angles_; }

  bool supported(std::int64_t n) const { return angles_[reduce(n)] >= 0; }
  /// chi(n) as an angle in [0, 1); throws std::domain_error off the support.
  Rational angle(std::int64_t n) const;
  ComplexValue operator()(std::int64_t n) const;
  bool is_principal() const;

  friend bool operator==(const DirichletCharacter&, const DirichletCharacter&) = default;

 private:
  std::size_t reduce(std::int64_t n) const;

  std::int64_t modulus_;
  std::int64_t denominator_;
  std::vector<std::int64_t> angles_;
};

/// All phi(r) characters mod r; index order is lexicographic over the exponent
/// tuples of the unit-group generators (smallest primitive root per odd prime
/// power, 3 for 4, and -1, 5 for 2^k >= 8), so the principal character is first.
std::vector<DirichletCharacter> characters_mod(std::int64_t r);

struct PrimitiveData {
  std::int64_t conductor = 1;
  DirichletCharacter primitive;
};

PrimitiveData conductor_and_primitive(const DirichletCharacter& chi);

/// tau(chi) = sum_t chi(t) e(t / f); throws std::invalid_argument unless chi is primitive.
ComplexValue gauss_sum(const DirichletCharacter& chi);

/// R = Z/r1 + ... + Z/rm with every ri >= 1, elements in mixed-radix order.
class RingR {
 public:
  explicit RingR(std::vector<std::int64_t> factors);

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::uint64_t order() const { return mixed_radix::size(factors_); }
  std::size_t index_of(const Residues& a) const;
  Residues element(std::size_t index) const { return mixed_radix::element_at(factors_, index); }
  /// Componentwise reduction of an integer tuple into R.
  Residues reduce(const Tuple& a) const;
  Residues multiply(const Residues& a, const Residues& b) const;
  Residues negate(const Residues& a) const;
  bool is_unit(const Residues& a) const;
  std::vector<Residues> units() const;
  std::uint64_t unit_count() const;
  /// Number of even ri.
  std::size_t even_factor_count() const;

 private:
  std::vector<std::int64_t> factors_;
};

struct TupleCharacter {
  std::vector<DirichletCharacter> components;
  std::vector<DirichletCharacter> primitives;
  Tuple conductor;  ///< f = (f1, ..., fm)
  Tuple q;          ///< q = (r1 / f1, ..., rm / fm)
  bool odd = false;

  /// chi(b) = prod chi_i(b_i); zero off the units.
  ComplexValue operator()(const Residues& b) const;
  /// prod chi_i*(d_i) of the primitive components at an integer tuple.
  ComplexValue star_value(const Tuple& d) const;
};

std::vector<TupleCharacter> tuple_characters(const RingR& ring);
std::vector<TupleCharacter> odd_characters(const RingR& ring);

/// S_a(c) = B1(a1 c1 / r1 + ... + am cm / rm).
Rational s_a(const RingR& ring, const Tuple& a, const Tuple& c);

/// Functions on R are indexed like RingR::element.
FunctionOnGroup eigen_project(const RingR& ring, const TupleCharacter& chi, const FunctionOnGroup& w);
/// (c . w)(x) = w(c x).
FunctionOnGroup act(const RingR& ring, const Residues& c, const FunctionOnGroup& w);

/// w_{chi,a}(c) = sum_{b in R^x} chi(b) S_{ab}(c); a and c are reduced into R.
ComplexValue w_chi(const RingR& ring, const TupleCharacter& chi, const Tuple& a, const Tuple& c);
/// The whole function w_{chi,a}, indexed like RingR::element.
FunctionOnGroup w_function(const RingR& ring, const TupleCharacter& chi, const Tuple& a);
/// w_{chi,a} for several a at once, sharing one evaluation table.
std::vector<FunctionOnGroup> w_functions(const RingR& ring, const TupleCharacter& chi,
                                         const std::vector<Tuple>& as);

/// Truncated series for w_{chi,a}(c) in the conductor/Gauss-sum form, summed in
/// increasing k over whole periods of the coefficient sequence (at least one).
ComplexValue series_w(const RingR& ring, const TupleCharacter& chi, const Tuple& a, const Tuple& c,
                      std::int64_t terms = 100000);

/// v_{chi,a}(c) = sum_{d | a} mu(d) conj(chi*(d)) w_{chi,a/d}(c); throws unless a | q.
ComplexValue v_chi(const RingR& ring, const TupleCharacter& chi, const Tuple& a, const Tuple& c);

/// Linear extension of the divisors of q, graded by total prime-factor count,
/// with ordering[i] * ordering[N-1-i] = q.
std::vector<Tuple> divisor_ordering(const Tuple& q);

inline constexpr double kZeroTol = 1e-9;
inline constexpr double kNonzeroTol = 1e-6;

struct VMatrixReport {
  std::size_t size = 0;
  std::size_t rank = 0;
  bool zeros_ok = true;     ///< every entry with ac not dividing q is below kZeroTol
  bool nonzeros_ok = true;  ///< every entry with ac = q is above kNonzeroTol
  ComplexMatrix matrix;
  bool ok() const { return zeros_ok && nonzeros_ok && rank == size; }
};

VMatrixReport v_matrix_report(const RingR& ring, const TupleCharacter& chi);
bool v_matrix_check(const RingR& ring, const TupleCharacter& chi);

/// The d(q) functions w_{chi,a}, a | q, are linearly independent.
bool w_independence_check(const RingR& ring, const TupleCharacter& chi);

struct BasisCount {
  std::uint64_t odd_count = 0;  ///< sum over odd chi of d(q_chi)
  std::uint64_t expected = 0;   ///< (|R| - 2^s) / 2
  std::size_t s_rank = 0;       ///< rank of [S_a(c)] over C
  bool ok() const { return odd_count == expected && s_rank == expected; }
};

BasisCount basis_count(const RingR& ring);
bool basis_count_check(const RingR& ring);

}  // namespace cubespan
