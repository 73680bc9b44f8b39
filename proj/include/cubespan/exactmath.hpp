#pragma once

// Exact integer/rational linear algebra and the small multiplicative
// arithmetic toolkit shared by every other part of cubespan.

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cubespan {

using Integer = mpz_class;
using ComplexValue = std::complex<double>;
using Tuple = std::vector<std::int64_t>;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: integers promote freely
  Rational(int value) : value_(value) {}   // NOLINT
  Rational(const Integer& value) : value_(value) {}  // NOLINT
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  /// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on bad input.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Largest integer not exceeding the value.
  Integer floor() const;
  /// Fractional part {x}, the unique representative of x mod 1 in [0, 1).
  Rational frac() const;

  double to_double() const { return value_.get_d(); }
  std::string str() const { return value_.get_str(); }
  const mpq_class& raw() const { return value_; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Builds from a list of equal-length rows; `cols` is used when the list is empty.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;
using ComplexMatrix = Matrix<ComplexValue>;
using RationalVector = std::vector<Rational>;

// ---------------------------------------------------------------------------
// Smith normal form

/// U·M·V = D with U, V unimodular and D diagonal with d1 | d2 | ... (zeros last).
struct SnfDecomposition {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;
};

SnfDecomposition snf(const IntegerMatrix& m);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(const IntegerMatrix& m);
Rational determinant(const RationalMatrix& m);

// ---------------------------------------------------------------------------
// Rational linear algebra

struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RowEchelon rref(RationalMatrix m);

std::size_t rational_rank(const RationalMatrix& m);

/// Basis of {v : M v = 0}, one vector per free column of the RREF.
std::vector<RationalVector> nullspace_basis(const RationalMatrix& m);

/// Throws std::domain_error when the matrix is singular.
RationalMatrix inverse(const RationalMatrix& m);

RationalMatrix to_rational(const IntegerMatrix& m);

/// True iff both vector families (of length `dim`) span the same subspace.
bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b,
               std::size_t dim);

/// Rank over C by partial-pivot elimination; pivots with magnitude <= tol count as zero.
std::size_t complex_rank(const ComplexMatrix& m, double tol = 1e-9);

/// Default pivot threshold for every rank computed over C.
inline constexpr double kComplexRankTol = 1e-9;

// ---------------------------------------------------------------------------
// Periodic functions

/// First periodic Bernoulli function: {x} - 1/2 off the integers, 0 on them.
Rational b1(const Rational& x);

/// e(x) = exp(2 pi i x), reducing x mod 1 exactly before going to floating point.
ComplexValue unit_root(const Rational& x);
/// e(num / den) for machine integers, den > 0.
ComplexValue unit_root(std::int64_t num, std::int64_t den);

// ---------------------------------------------------------------------------
// Multiplicative arithmetic

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t k);
std::vector<std::int64_t> divisors(std::int64_t k);
std::int64_t mobius(std::int64_t k);
std::int64_t euler_phi(std::int64_t k);
std::int64_t divisor_count(std::int64_t k);
/// Number of prime factors counted with multiplicity.
int big_omega(std::int64_t k);

std::int64_t mobius(std::span<const std::int64_t> k);
std::int64_t euler_phi(std::span<const std::int64_t> k);
std::int64_t divisor_count(std::span<const std::int64_t> k);

/// All tuples d with d | q componentwise, in lexicographic order.
std::vector<Tuple> divisor_tuples(const Tuple& q);
bool divides(const Tuple& a, const Tuple& b);
Tuple componentwise_product(const Tuple& a, const Tuple& b);
Tuple componentwise_quotient(const Tuple& a, const Tuple& d);

/// An arithmetic function restricted to the divisor tuples of a fixed bound.
class DivisorFunction {
 public:
  DivisorFunction(Tuple bound, const std::function<Rational(const Tuple&)>& f);

  const Tuple& bound() const { return bound_; }
  const std::vector<Tuple>& domain() const { return domain_; }
  const Rational& at(const Tuple& d) const;
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const DivisorFunction& a, const DivisorFunction& b) {
    return a.bound_ == b.bound_ && a.values_ == b.values_;
  }

 private:
  friend DivisorFunction dirichlet_convolve(const DivisorFunction&, const DivisorFunction&);
  std::size_t index_of(const Tuple& d) const;

  Tuple bound_;
  std::vector<Tuple> domain_;
  std::vector<std::vector<std::int64_t>> component_divisors_;
  std::vector<Rational> values_;
};

/// (g * h)(a) = sum over d | a of g(d) h(a / d). Both must share the same bound.
DivisorFunction dirichlet_convolve(const DivisorFunction& g, const DivisorFunction& h);

}  // namespace cubespan
