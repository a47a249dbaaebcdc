#include "gdet/s4.hpp"
#include "gdet/sympoly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gdet;

TEST(SparsePoly, BasicArithmetic) {
  const IntPoly x = IntPoly::variable(0), y = IntPoly::variable(1);
  const IntPoly sq = (x + y) * (x + y);
  EXPECT_EQ(sq.term_count(), 3U);
  EXPECT_EQ(sq, x * x + BigInt(2) * (x * y) + y * y);
  EXPECT_TRUE((sq - sq).is_zero());
  EXPECT_TRUE(sq.is_homogeneous(2));
  EXPECT_EQ(sq.degree(), 2);
  EXPECT_EQ((x - x + IntPoly::constant(3)).degree(), 0);
  EXPECT_EQ(poly_mul(x, y), y * x);
  EXPECT_EQ(poly_add(x, y), y + x);
}

TEST(SparsePoly, Evaluation) {
  const IntPoly x = IntPoly::variable(0), y = IntPoly::variable(13);
  const IntPoly p = x * x * y - BigInt(4) * y + IntPoly::constant(7);
  std::vector<BigInt> pt(24, BigInt(0));
  pt[0] = 3;
  pt[13] = -2;
  EXPECT_EQ(p.evaluate(pt), 9 * -2 + 8 + 7);
}

TEST(SparsePoly, ModularReductionAndDivision) {
  const IntPoly x = IntPoly::variable(0), y = IntPoly::variable(1);
  const IntPoly p = BigInt(4) * (x * y) + BigInt(6) * x + IntPoly::constant(8);
  EXPECT_EQ(poly_mod(p, 4), poly_mod(BigInt(2) * x, 4));
  EXPECT_EQ(poly_mod(p, 4).modulus(), BigInt(4));
  EXPECT_EQ(poly_mod(p, 2).term_count(), 0U);
  const auto half = p.divide_exact(2);
  ASSERT_TRUE(half.has_value());
  EXPECT_EQ(*half, BigInt(2) * (x * y) + BigInt(3) * x + IntPoly::constant(4));
  EXPECT_FALSE(p.divide_exact(4).has_value());
  EXPECT_THROW(poly_mod(p, 4) + poly_mod(p, 3), ModulusMismatch);
}

TEST(SparsePoly, SymbolicDeterminant) {
  std::vector<std::vector<IntPoly>> id(3, std::vector<IntPoly>(3));
  for (int i = 0; i < 3; ++i) id[i][i] = IntPoly::constant(1);
  EXPECT_EQ(symbolic_det(id), IntPoly::constant(1));
  const IntPoly a = IntPoly::variable(0), b = IntPoly::variable(1), c = IntPoly::variable(2), d = IntPoly::variable(3);
  EXPECT_EQ(symbolic_det(std::vector<std::vector<IntPoly>>{{a, b}, {c, d}}), a * d - b * c);
  EXPECT_THROW(symbolic_det(std::vector<std::vector<IntPoly>>(4, std::vector<IntPoly>(4))), InvalidArgument);
}

TEST(SparsePoly, NamesUseTheASplit) {
  EXPECT_EQ(variable_name(0), "a1");
  EXPECT_EQ(variable_name(11), "a12");
  EXPECT_EQ(variable_name(12), "b1");
  EXPECT_EQ(variable_name(23), "b12");
}

TEST(S4Symbolic, LinearProductTermCount) {
  // (sum a)^2 and (sum b)^2 each have 12 squares and C(12,2) cross terms; the a*b terms cancel.
  const S4Symbolic& s = s4_symbolic();
  const std::size_t per_half = 12 + 12 * 11 / 2;
  EXPECT_EQ((s.l1 * s.l2).term_count(), 2 * per_half);
  EXPECT_TRUE((s.l1 * s.l2).is_homogeneous(2));
}

TEST(S4Symbolic, FactorDegrees) {
  const S4Symbolic& s = s4_symbolic();
  EXPECT_TRUE(s.l1.is_homogeneous(1));
  EXPECT_TRUE(s.q1.is_homogeneous(2));
  EXPECT_TRUE(s.d1.is_homogeneous(3));
  EXPECT_TRUE(s.d2.is_homogeneous(3));
  EXPECT_EQ(s.d2, s.d1.negate_b());
}

TEST(S4Symbolic, PolynomialsAgreeWithNumericFactors) {
  const S4Symbolic& s = s4_symbolic();
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-7, 7);
  for (int t = 0; t < 40; ++t) {
    std::vector<BigInt> x(24);
    for (auto& v : x) v = d(rng);
    const FactorProfile f = s4_factors(x);
    EXPECT_EQ(s.l1.evaluate(x), f.l1);
    EXPECT_EQ(s.l2.evaluate(x), f.l2);
    EXPECT_EQ(s.q1.evaluate(x), f.q1);
    EXPECT_EQ(s.d1.evaluate(x), f.d1);
    EXPECT_EQ(s.d2.evaluate(x), f.d2);
    EXPECT_EQ(s.w.evaluate(x), f.w);
  }
}

TEST(Identities, AllHoldExactly) {
  const auto reports = check_identities(kAllIdentities, 2);
  ASSERT_EQ(reports.size(), 8U);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.holds) << identity_name(r.id) << ": " << r.residual_sample;
    EXPECT_EQ(r.residual_term_count, 0U) << identity_name(r.id);
  }
}

TEST(Identities, D1ExpansionDetails) {
  const IdentityReport r = check_identity(IdentityId::D1_EXPANSION);
  ASSERT_TRUE(r.quotient.has_value());
  EXPECT_TRUE(r.quotient_cubic);
  EXPECT_TRUE(r.mirror_holds);
  EXPECT_TRUE(r.mirror_sum_even);
  EXPECT_TRUE(r.quotient->is_homogeneous(3));
}

TEST(Identities, WrongModulusIsDetected) {
  // l1 - l2 = 2v is 0 mod 2 but not mod 4
  const S4Symbolic& s = s4_symbolic();
  EXPECT_TRUE(poly_mod(s.l1 - s.l2, 2).is_zero());
  EXPECT_FALSE(poly_mod(s.l1 - s.l2, 4).is_zero());
  EXPECT_FALSE(poly_mod(s.q1 - s.l1 * s.l2, 9).is_zero());
}

TEST(Identities, NamesRoundTrip) {
  for (auto id : kAllIdentities) EXPECT_EQ(parse_identity_id(identity_name(id)), id);
  EXPECT_THROW(parse_identity_id("NOPE"), InvalidArgument);
}
