#include <gtest/gtest.h>

#include <random>

#include "cubespan/characters.hpp"

using namespace cubespan;

namespace {

FunctionOnGroup random_function(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d;
  FunctionOnGroup f{std::vector<ComplexValue>(n)};
  for (auto& v : f.values) v = {d(rng), d(rng)};
  return f;
}

double distance(const FunctionOnGroup& a, const FunctionOnGroup& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST(Characters, Z2Values) {
  const FiniteAbelianGroup g({2});
  const auto chars = all_characters(g);
  ASSERT_EQ(chars.size(), 2u);
  const auto v0 = character_values(g, chars[0]);
  const auto v1 = character_values(g, chars[1]);
  EXPECT_NEAR(std::abs(v0[0] - 1.0), 0, 1e-15);
  EXPECT_NEAR(std::abs(v0[1] - 1.0), 0, 1e-15);
  EXPECT_NEAR(std::abs(v1[0] - 1.0), 0, 1e-15);
  EXPECT_NEAR(std::abs(v1[1] + 1.0), 0, 1e-15);
}

TEST(Characters, Z3ValuesAreCubeRoots) {
  const FiniteAbelianGroup g({3});
  for (const auto& chi : all_characters(g))
    for (const auto& v : character_values(g, chi).values)
      EXPECT_NEAR(std::abs(v * v * v - 1.0), 0, 1e-12);
}

TEST(Characters, OrthonormalAndMultiplicative) {
  for (const auto& g : abelian_groups_up_to(36)) {
    const auto chars = all_characters(g);
    ASSERT_EQ(chars.size(), g.order());
    std::vector<FunctionOnGroup> vals;
    for (const auto& chi : chars) vals.push_back(character_values(g, chi));
    for (std::size_t i = 0; i < chars.size(); ++i)
      for (std::size_t j = 0; j < chars.size(); ++j)
        ASSERT_NEAR(std::abs(inner_product(vals[i], vals[j]) - ComplexValue(i == j ? 1.0 : 0.0)), 0, 1e-10);
    if (g.order() > 12) continue;
    for (const auto& chi : chars) {
      const auto conj = chi.conjugate(g);
      for (std::size_t a = 0; a < g.order(); ++a) {
        const auto ea = g.element(a);
        EXPECT_NEAR(std::abs(chi(g, ea) - std::conj(conj(g, ea))), 0, 1e-12);
        for (std::size_t b = 0; b < g.order(); ++b) {
          const auto eb = g.element(b);
          EXPECT_NEAR(std::abs(chi(g, g.add(ea, eb)) - chi(g, ea) * chi(g, eb)), 0, 1e-12);
        }
      }
    }
  }
}

TEST(Fourier, CharacterGivesIndicator) {
  const FiniteAbelianGroup g({2, 4});
  const auto chars = all_characters(g);
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const auto hat = fourier(character_values(g, chars[i]), g);
    for (std::size_t j = 0; j < hat.size(); ++j)
      EXPECT_NEAR(std::abs(hat[j] - ComplexValue(i == j ? 1.0 : 0.0)), 0, 1e-12);
  }
}

TEST(Fourier, DeltaIsFlat) {
  const FiniteAbelianGroup g({3, 6});
  FunctionOnGroup delta{std::vector<ComplexValue>(g.order())};
  delta[0] = 1;
  for (const auto& v : fourier(delta, g).values) EXPECT_NEAR(std::abs(v - 1.0 / 18), 0, 1e-15);
}

TEST(Fourier, ParsevalAndLinearityOnZ6) {
  const FiniteAbelianGroup g({6});
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_function(rng, 6), h = random_function(rng, 6);
    const auto fh = fourier(f, g);
    double lhs = 0, rhs = 0;
    for (std::size_t i = 0; i < 6; ++i) {
      lhs += std::norm(fh[i]);
      rhs += std::norm(f[i]) / 6;
    }
    EXPECT_NEAR(lhs, rhs, 1e-10);
    FunctionOnGroup sum{std::vector<ComplexValue>(6)};
    for (std::size_t i = 0; i < 6; ++i) sum[i] = 2.0 * f[i] + h[i];
    const auto hh = fourier(h, g);
    FunctionOnGroup expected{std::vector<ComplexValue>(6)};
    for (std::size_t i = 0; i < 6; ++i) expected[i] = 2.0 * fh[i] + hh[i];
    EXPECT_LT(distance(fourier(sum, g), expected), 1e-12);
  }
}

TEST(Subgroups, CountsForSmallGroups) {
  // Z/12 has one subgroup per divisor; Z2+Z2 has five; Z2+Z4 has eight.
  EXPECT_EQ(all_subgroups(FiniteAbelianGroup({12})).size(), 6u);
  EXPECT_EQ(all_subgroups(FiniteAbelianGroup({2, 2})).size(), 5u);
  EXPECT_EQ(all_subgroups(FiniteAbelianGroup({2, 4})).size(), 8u);
  EXPECT_EQ(all_subgroups(FiniteAbelianGroup({2, 2, 2})).size(), 16u);
}

TEST(Subgroups, FromElementsValidatesClosure) {
  const FiniteAbelianGroup g({6});
  EXPECT_THROW(Subgroup::from_elements(g, {0, 1}), std::invalid_argument);
  EXPECT_THROW(Subgroup::from_elements(g, {2, 4}), std::invalid_argument);
  EXPECT_EQ(Subgroup::from_elements(g, {4, 0, 2}).size(), 3u);
}

TEST(Annihilator, DualityOnAllSmallGroups) {
  for (const auto& g : abelian_groups_up_to(24)) {
    for (const auto& k : all_subgroups(g)) {
      const auto perp = annihilator(g, k);
      EXPECT_EQ(k.size() * perp.size(), g.order());
      EXPECT_EQ(annihilator(g, perp), k);
    }
    const auto whole = Subgroup::generated_by(g, {});
    EXPECT_EQ(annihilator(g, whole).size(), g.order());
  }
  const FiniteAbelianGroup g({2, 4});
  std::vector<std::size_t> all(8);
  for (std::size_t i = 0; i < 8; ++i) all[i] = i;
  EXPECT_EQ(annihilator(g, Subgroup::from_elements(g, all)).elements(), std::vector<std::size_t>{0});
}

TEST(Poisson, ExtremeSubgroups) {
  const FiniteAbelianGroup g({2, 6});
  std::mt19937_64 rng(1);
  const auto f = random_function(rng, g.order());
  const auto hat = fourier(f, g);
  std::vector<std::size_t> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const auto whole = poisson_sides(f, Subgroup::from_elements(g, all), g);
  EXPECT_NEAR(std::abs(whole.dual_side - hat[0]), 0, 1e-12);
  const auto trivial = poisson_sides(f, Subgroup::from_elements(g, {0}), g);
  EXPECT_NEAR(std::abs(trivial.group_side - f[0] / 12.0), 0, 1e-12);
}

TEST(Poisson, AllSubgroupsUpTo24) {
  std::mt19937_64 rng(42);
  for (const auto& g : abelian_groups_up_to(24))
    for (const auto& k : all_subgroups(g))
      for (int s = 0; s < 20; ++s) ASSERT_TRUE(poisson_check(random_function(rng, g.order()), k, g));
}

TEST(IndicatorIndependence, Examples) {
  EXPECT_EQ(cyclic_annihilator_family(FiniteAbelianGroup({2, 2})).size(), 4u);
  EXPECT_TRUE(indicator_independence(FiniteAbelianGroup({2, 2})));
  EXPECT_EQ(cyclic_annihilator_family(FiniteAbelianGroup({12})).size(), 6u);
  EXPECT_TRUE(indicator_independence(FiniteAbelianGroup({12})));
  EXPECT_EQ(cyclic_annihilator_family(FiniteAbelianGroup()).size(), 1u);
  EXPECT_TRUE(indicator_independence(FiniteAbelianGroup()));
}

TEST(IndicatorIndependence, AllGroupsUpTo36) {
  for (const auto& g : abelian_groups_up_to(36)) EXPECT_TRUE(indicator_independence(g));
}

TEST(SFunction, Examples) {
  const FiniteAbelianGroup z5({5});
  for (const auto& v : s_function_exact({0}, z5)) EXPECT_TRUE(v.is_zero());
  const auto s = s_function_exact({1}, z5);
  EXPECT_TRUE(s[0].is_zero());
  for (long k = 1; k < 5; ++k) EXPECT_EQ(s[k], Rational(k, 5) - Rational(1, 2));
  const FiniteAbelianGroup z2({2});
  for (long a = 0; a < 2; ++a)
    for (const auto& v : s_function_exact({a}, z2)) EXPECT_TRUE(v.is_zero());
}

TEST(SFunction, OddOnEveryGroup) {
  for (const auto& g : abelian_groups_up_to(36))
    for (std::size_t a = 0; a < g.order(); ++a) {
      const auto s = s_function_exact(g.element(a), g);
      for (std::size_t p = 0; p < g.order(); ++p)
        ASSERT_TRUE((s[p] + s[g.index_of(g.negate(g.element(p)))]).is_zero());
    }
}

TEST(OddSpan, Examples) {
  EXPECT_EQ(odd_span(FiniteAbelianGroup({5})).rank, 2u);
  EXPECT_EQ(odd_span(FiniteAbelianGroup({2})).rank, 0u);
  const auto z33 = odd_span(FiniteAbelianGroup({3, 3}));
  EXPECT_EQ(z33.rank, 4u);
  EXPECT_EQ(z33.expected, 4u);
}

TEST(OddSpan, AllGroupsUpTo36) {
  for (const auto& g : abelian_groups_up_to(36)) {
    const auto r = odd_span(g);
    EXPECT_EQ(r.rank, r.expected) << g.order();
  }
}
