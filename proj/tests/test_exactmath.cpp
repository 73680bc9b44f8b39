#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "cubespan/exactmath.hpp"

using namespace cubespan;

namespace {

IntegerMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Integer>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return IntegerMatrix::from_rows(r);
}

// Laplace expansion; only for the small matrices below.
Integer laplace_det(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntegerMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Integer term = m(0, j) * laplace_det(minor);
    det += (j % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

IntegerMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST(Rational, ParsesAndNormalises) {
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-2/6").str(), "-1/3");
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST(Rational, FloorAndFrac) {
  EXPECT_EQ(Rational(-1, 3).floor(), -1);
  EXPECT_EQ(Rational(-1, 3).frac(), Rational(2, 3));
  EXPECT_EQ(Rational(7, 3).frac(), Rational(1, 3));
  EXPECT_TRUE(Rational(4).frac().is_zero());
}

TEST(Snf, KnownDiagonal) {
  const auto m = int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const auto dec = snf(m);
  EXPECT_EQ(dec.D(0, 0), 2);
  EXPECT_EQ(dec.D(1, 1), 6);
  EXPECT_EQ(dec.D(2, 2), 12);
}

TEST(Snf, RandomMatricesSatisfyContract) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 5;
    const auto m = random_int_matrix(rng, rows, cols, 9);
    const auto dec = snf(m);
    EXPECT_EQ(dec.U * m * dec.V, dec.D);
    EXPECT_EQ(abs(laplace_det(dec.U)), 1);
    EXPECT_EQ(abs(laplace_det(dec.V)), 1);
    const std::size_t k = std::min(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j) EXPECT_EQ(dec.D(i, j), 0);
    for (std::size_t i = 0; i < k; ++i) EXPECT_GE(dec.D(i, i), 0);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (dec.D(i + 1, i + 1) == 0) continue;
      ASSERT_NE(dec.D(i, i), 0);
      EXPECT_EQ(dec.D(i + 1, i + 1) % dec.D(i, i), 0);
    }
  }
}

TEST(Determinant, MatchesLaplaceExpansion) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto m = random_int_matrix(rng, n, n, 6);
    EXPECT_EQ(determinant(m), laplace_det(m));
    EXPECT_EQ(determinant(to_rational(m)), Rational(laplace_det(m)));
  }
}

TEST(Nullspace, VectorsVanishAndCountMatchesRank) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + trial % 4, cols = 2 + trial % 5;
    auto m = to_rational(random_int_matrix(rng, rows, cols, 3));
    if (trial % 3 == 0)  // force a dependent row
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * Rational(2);
    const auto basis = nullspace_basis(m);
    EXPECT_EQ(basis.size() + rational_rank(m), cols);
    for (const auto& v : basis)
      for (std::size_t i = 0; i < rows; ++i) {
        Rational s;
        for (std::size_t j = 0; j < cols; ++j) s += m(i, j) * v[j];
        EXPECT_TRUE(s.is_zero());
      }
  }
}

TEST(Inverse, TimesOriginalIsIdentity) {
  const auto m = to_rational(int_matrix({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}}));
  EXPECT_EQ(inverse(m) * m, RationalMatrix::identity(3));
  EXPECT_THROW(inverse(to_rational(int_matrix({{1, 2}, {2, 4}}))), std::domain_error);
}

TEST(SameSpan, DetectsEqualAndDifferentSubspaces) {
  const std::vector<RationalVector> a{{1, 1, 0}, {0, 1, 1}};
  const std::vector<RationalVector> b{{1, 2, 1}, {1, 0, -1}};
  const std::vector<RationalVector> c{{1, 0, 0}, {0, 1, 1}};
  EXPECT_TRUE(same_span(a, b, 3));
  EXPECT_FALSE(same_span(a, c, 3));
  EXPECT_TRUE(same_span({}, {}, 3));
}

TEST(ComplexRank, RealAndComplexExamples) {
  ComplexMatrix m(2, 2);
  m(0, 0) = {1, 1};
  m(0, 1) = {0, 2};
  m(1, 0) = {2, 2};
  m(1, 1) = {0, 4};
  EXPECT_EQ(complex_rank(m), 1u);
  m(1, 1) = {1, 0};
  EXPECT_EQ(complex_rank(m), 2u);
  EXPECT_THROW(complex_rank(m, 0.0), std::invalid_argument);
}

TEST(B1, ValuesAndOddness) {
  EXPECT_EQ(b1(Rational(0)), Rational(0));
  EXPECT_EQ(b1(Rational(1, 2)), Rational(0));
  EXPECT_EQ(b1(Rational(1, 5)), Rational(-3, 10));
  EXPECT_EQ(b1(Rational(7, 6)), Rational(-1, 3));
  for (long q = 1; q <= 12; ++q)
    for (long p = -2 * q; p <= 2 * q; ++p) EXPECT_EQ(b1(Rational(-p, q)), -b1(Rational(p, q)));
}

TEST(UnitRoot, QuarterTurn) {
  const auto z = unit_root(Rational(1, 4));
  EXPECT_NEAR(z.real(), 0.0, 1e-15);
  EXPECT_NEAR(z.imag(), 1.0, 1e-15);
  EXPECT_EQ(unit_root(Rational(3)), ComplexValue(1.0, 0.0));
  EXPECT_NEAR(std::abs(unit_root(-1, 3) - unit_root(Rational(2, 3))), 0.0, 1e-15);
}

TEST(Arithmetic, MatchesBruteForce) {
  for (std::int64_t k = 1; k <= 200; ++k) {
    std::int64_t phi = 0, d = 0;
    for (std::int64_t j = 1; j <= k; ++j) {
      phi += std::gcd(j, k) == 1;
      d += k % j == 0;
    }
    EXPECT_EQ(euler_phi(k), phi) << k;
    EXPECT_EQ(divisor_count(k), d) << k;
    EXPECT_EQ(static_cast<std::int64_t>(divisors(k).size()), d);
    // sum_{d | k} mu(d) = [k = 1]
    std::int64_t mu_sum = 0;
    for (auto e : divisors(k)) mu_sum += mobius(e);
    EXPECT_EQ(mu_sum, k == 1 ? 1 : 0);
  }
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_EQ(big_omega(12), 3);
  EXPECT_THROW(euler_phi(0), std::invalid_argument);
}

TEST(DivisorTuples, LexicographicOrder) {
  const auto d = divisor_tuples({2, 3});
  const std::vector<Tuple> expected{{1, 1}, {1, 3}, {2, 1}, {2, 3}};
  EXPECT_EQ(d, expected);
  EXPECT_TRUE(divides({1, 3}, {2, 3}));
  EXPECT_FALSE(divides({2, 2}, {2, 3}));
}

TEST(DirichletConvolution, MobiusInvertsOne) {
  const Tuple q{12, 18};
  const DivisorFunction mu(q, [](const Tuple& d) { return Rational(static_cast<long>(mobius(d))); });
  const DivisorFunction one(q, [](const Tuple&) { return Rational(1); });
  const auto delta = dirichlet_convolve(mu, one);
  for (const auto& d : delta.domain()) EXPECT_EQ(delta.at(d), Rational(d == Tuple{1, 1} ? 1 : 0));
  // 1 * 1 = number of divisors
  const auto tau = dirichlet_convolve(one, one);
  for (const auto& d : tau.domain()) EXPECT_EQ(tau.at(d), Rational(static_cast<long>(divisor_count(d))));
  EXPECT_THROW(dirichlet_convolve(mu, DivisorFunction({12}, [](const Tuple&) { return Rational(1); })),
               std::invalid_argument);
}
