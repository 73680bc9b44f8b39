#include <gtest/gtest.h>

#include <set>

#include "cubespan/span_analysis.hpp"
#include "cubespan/verify.hpp"

using namespace cubespan;

namespace {

RationalVector over(std::vector<long> nums, long den) {
  RationalVector v;
  for (auto x : nums) v.emplace_back(Integer(x), Integer(den));
  return v;
}

QuotientGroup ten_by_ten() {
  return build_quotient({8, {over({1, 9, 3, 7, 1, 1, 3, 5}, 10), over({2, 8, 6, 4, 1, 1, 3, 0}, 10)}});
}

using Classes = std::vector<std::vector<std::size_t>>;

// Compare partitions irrespective of block order, after shifting to 1-based.
std::set<std::set<std::size_t>> as_sets(const Classes& c) {
  std::set<std::set<std::size_t>> out;
  for (const auto& block : c) {
    std::set<std::size_t> s;
    for (auto i : block) s.insert(i + 1);
    out.insert(s);
  }
  return out;
}

bool vanishes_on_points(const RationalVector& u, const QuotientGroup& qg) {
  for (const auto& p : cube_points(qg)) {
    Rational s;
    for (std::size_t i = 0; i < qg.n; ++i) s += u[i] * p.coords[i];
    if (!s.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST(TenByTen, Classes) {
  const auto qg = ten_by_ten();
  const auto c = coordinate_classes(qg);
  EXPECT_EQ(as_sets(c.i_classes), as_sets({{0, 1}, {2, 3}, {4, 5}, {6}, {7}}));
  EXPECT_EQ(as_sets(c.k_classes), as_sets({{0, 1, 2, 3}, {4, 5, 6}, {7}}));
}

TEST(TenByTen, IotaKappaAndDimension) {
  const auto qg = ten_by_ten();
  const auto ik = iota_kappa(coordinate_classes(qg));
  EXPECT_EQ(ik.iota, 4u);
  EXPECT_EQ(ik.kappa, 2u);
  EXPECT_EQ(span_dimension(qg), 6u);
  EXPECT_EQ(rational_rank(point_matrix(qg)), 6u);
}

TEST(TenByTen, VanishingSpace) {
  const auto qg = ten_by_ten();
  const auto formula = vanishing_functionals(qg, VanishingMethod::Formula);
  const auto brute = vanishing_functionals(qg, VanishingMethod::BruteForce);
  EXPECT_EQ(formula.size(), 2u);
  const std::vector<RationalVector> expected{{1, 1, -1, -1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, -1, 0, 0}};
  for (const auto& u : expected) EXPECT_TRUE(vanishes_on_points(u, qg));
  EXPECT_TRUE(same_span(formula, expected, 8));
  EXPECT_TRUE(same_span(brute, expected, 8));
  EXPECT_TRUE(verify_terminal_lemma(qg));
}

TEST(TenByTen, AlternateIdentityForFirstBasisVector) {
  const auto qg = ten_by_ten();
  RationalVector e1(8);
  e1[0] = 1;
  for (const auto& p : cube_points(qg)) EXPECT_TRUE(check_alternate_identity(e1, p, qg));
}

TEST(White, FiveTwo) {
  const auto qg = build_quotient(white_lattice(2, 5));
  const auto c = coordinate_classes(qg);
  EXPECT_EQ(as_sets(c.i_classes), as_sets({{0, 1}, {2}}));
  EXPECT_EQ(as_sets(c.k_classes), as_sets({{0, 1, 2}}));
  const auto ik = iota_kappa(c);
  EXPECT_EQ(ik.iota, 2u);
  EXPECT_EQ(ik.kappa, 1u);
  EXPECT_EQ(span_dimension(qg), 3u);
  EXPECT_TRUE(vanishing_functionals(qg, VanishingMethod::Formula).empty());
  EXPECT_TRUE(vanishing_functionals(qg, VanishingMethod::BruteForce).empty());
  for (const auto& p : cube_points(qg)) EXPECT_TRUE(check_alternate_identity({1, 1, 1}, p, qg));
}

TEST(TrivialGroup, EverythingVanishes) {
  const auto qg = build_quotient({3, {}});
  const auto c = coordinate_classes(qg);
  EXPECT_TRUE(c.i_classes.empty());
  EXPECT_TRUE(c.k_classes.empty());
  const auto ik = iota_kappa(c);
  EXPECT_EQ(ik.iota + ik.kappa, 0u);
  EXPECT_EQ(span_dimension(qg), 0u);
  EXPECT_EQ(vanishing_functionals(qg, VanishingMethod::Formula).size(), 3u);
  EXPECT_EQ(vanishing_functionals(qg, VanishingMethod::BruteForce).size(), 3u);
  EXPECT_TRUE(verify_terminal_lemma(qg));
  const auto p = cube_points(qg).front();
  const auto sides = alternate_identity_sides({0, 0, 0}, p, qg);
  EXPECT_TRUE(sides.direct.is_zero());
  EXPECT_NEAR(sides.via_s, 0.0, 1e-12);
}

TEST(Properties, RandomLatticesAgreeWithPointMatrix) {
  Rng rng(42);
  for (int trial = 0; trial < 120; ++trial) {
    const auto spec = random_lattice(rng, 6, 200);
    const auto qg = build_quotient(spec);
    const auto c = coordinate_classes(qg);
    const auto ik = iota_kappa(c);
    EXPECT_LE(ik.iota, c.i_classes.size());
    EXPECT_LE(ik.kappa, c.k_classes.size());
    EXPECT_LE(ik.iota + ik.kappa, qg.n);
    EXPECT_EQ(span_dimension(qg), rational_rank(point_matrix(qg))) << trial;
    EXPECT_TRUE(verify_terminal_lemma(qg)) << trial;

    // K coarsens I, and together the I-classes cover the non-trivial coordinates.
    std::set<std::size_t> covered;
    for (const auto& block : c.i_classes) covered.insert(block.begin(), block.end());
    EXPECT_EQ(covered.size() + qg.trivial_coordinates.size(), qg.n);
    for (const auto& block : c.i_classes) {
      int hits = 0;
      for (const auto& k : c.k_classes) {
        std::set<std::size_t> ks(k.begin(), k.end());
        if (ks.count(block.front())) {
          ++hits;
          for (auto i : block) EXPECT_TRUE(ks.count(i));
        }
      }
      EXPECT_EQ(hits, 1);
    }

    const auto rel = relation_system(qg, c);
    EXPECT_LE(rel.rows(), 2 * (c.i_classes.size() + c.k_classes.size()) + qg.trivial_coordinates.size());
    for (const auto& u : vanishing_functionals(qg, VanishingMethod::Formula))
      EXPECT_TRUE(vanishes_on_points(u, qg));
  }
}

TEST(Properties, AlternateIdentityOnSmallLattices) {
  Rng rng(7);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto qg = build_quotient(random_lattice(rng, 5, 60));
    RationalVector u(qg.n);
    for (auto& x : u) x = coeff(rng);
    for (const auto& p : cube_points(qg)) ASSERT_TRUE(check_alternate_identity(u, p, qg)) << trial;
  }
}

TEST(Sebo, PairedInstance) {
  const auto qg = build_quotient({4, {over({1, 4, 2, 3}, 5)}});
  const auto r = sebo_check(qg);
  ASSERT_TRUE(r.holds);
  ASSERT_TRUE(r.involution.has_value());
  EXPECT_EQ(cycle_notation(*r.involution), "(1 2)(3 4)");
  EXPECT_TRUE(involution_pairs_generators(qg, *r.involution));
  EXPECT_FALSE(r.witness.has_value());
}

TEST(Sebo, UnpairedInstanceHasWitness) {
  const auto qg = build_quotient({4, {over({1, 1, 2, 3}, 5)}});
  const auto r = sebo_check(qg);
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(r.involution.has_value());
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->coords, over({1, 1, 2, 3}, 5));
  Rational sum;
  for (const auto& x : r.witness->coords) sum += x;
  EXPECT_EQ(sum, Rational(7, 5));
}

TEST(Sebo, HalfIntegralIsIdentity) {
  const auto qg = build_quotient({3, {over({1, 0, 1}, 2), over({0, 1, 1}, 2)}});
  const auto r = sebo_check(qg);
  ASSERT_TRUE(r.holds);
  EXPECT_EQ(cycle_notation(*r.involution), "id");
}

TEST(Sebo, RandomPairedConstructionsHold) {
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const auto qg = build_quotient(random_paired_lattice(rng));
    const auto r = sebo_check(qg);
    ASSERT_TRUE(r.holds) << trial;
    const auto& sigma = *r.involution;
    for (std::size_t i = 0; i < qg.n; ++i) EXPECT_EQ(sigma[sigma[i]], i);
    EXPECT_TRUE(involution_pairs_generators(qg, sigma));
    std::set<std::vector<std::string>> points;
    const auto all = cube_points(qg);
    for (const auto& p : all) {
      std::vector<std::string> k;
      for (const auto& x : p.coords) k.push_back(x.str());
      points.insert(k);
    }
    for (const auto& p : all) {
      std::vector<std::string> image;
      for (std::size_t i = 0; i < qg.n; ++i) {
        const auto s = p.coords[i] + p.coords[sigma[i]];
        EXPECT_TRUE(s == Rational(0) || s == Rational(1));
        image.push_back(p.coords[sigma[i]].str());
      }
      EXPECT_TRUE(points.count(image));
    }
  }
}

TEST(CycleNotation, Formats) {
  EXPECT_EQ(cycle_notation({0, 1, 2}), "id");
  EXPECT_EQ(cycle_notation({2, 1, 0}), "(1 3)");
}
