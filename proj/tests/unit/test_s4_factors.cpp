#include "gdet/s4.hpp"
#include "gdet/witness.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gdet;

namespace {

using M3 = std::array<std::array<int, 3>, 3>;

struct KnownFactors {
  WitnessFamilyId id;
  int l1, l2, q1;
  M3 plus, minus;  // A+B and A-B at k = 0
};

// ell_1, ell_2, q_1 and the factor matrices A+B, A-B of each construction at k = 0.
const std::vector<KnownFactors> kKnownFactors = {
    {WitnessFamilyId::res1, 1, 1, 1, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}},
    {WitnessFamilyId::res5, 5, 1, -1, {{{-1, 0, -2}, {0, 0, -1}, {-2, -1, 2}}}, {{{-1, 2, 0}, {2, -2, -1}, {0, -1, 0}}}},
    {WitnessFamilyId::res13, 13, 1, 1, {{{-2, 0, -1}, {-1, 4, 0}, {0, -1, 0}}}, {{{2, 4, -1}, {-1, 0, 0}, {0, -1, 0}}}},
    {WitnessFamilyId::res17, 17, 1, -1, {{{1, 0, 0}, {0, 0, 1}, {-2, 1, 2}}}, {{{-3, 2, 2}, {-2, 2, 1}, {0, 1, 0}}}},
    {WitnessFamilyId::neg27, 3, 1, 3, {{{0, -1, 0}, {-1, 2, 0}, {0, 0, 1}}}, {{{0, 1, 0}, {1, 2, 0}, {0, 0, -1}}}},
    {WitnessFamilyId::pos81, 3, 3, 3, {{{0, 0, -1}, {1, 0, 0}, {0, -1, 2}}}, {{{0, 0, -1}, {1, 0, 0}, {0, -1, 2}}}},
    {WitnessFamilyId::pow2_8, 2, 2, 1, {{{1, 0, -1}, {1, 1, 0}, {0, -1, 1}}}, {{{1, 0, -1}, {1, 1, 0}, {0, -1, 1}}}},
    {WitnessFamilyId::neg2_10, 1, 1, 4, {{{-2, 0, -1}, {0, 0, 1}, {-1, -1, -1}}}, {{{0, 0, 1}, {0, -2, -1}, {1, -3, -1}}}},
    {WitnessFamilyId::pos2_12, 4, 2, -1, {{{-2, 1, -1}, {1, -1, 0}, {-1, -2, 1}}}, {{{0, 1, -1}, {1, -1, -2}, {-1, 0, 1}}}},
    {WitnessFamilyId::neg2_12, 1, -1, 8, {{{0, -2, 1}, {0, 0, 1}, {1, 1, 1}}}, {{{0, 0, 1}, {-2, 0, 1}, {1, 1, 3}}}},
    {WitnessFamilyId::pos2_13, 8, 2, 1, {{{1, 1, 2}, {0, 1, 1}, {1, -2, 3}}}, {{{-1, -1, 0}, {-2, -1, 3}, {-1, 0, 1}}}},
    {WitnessFamilyId::neg2_13, 8, 2, 1, {{{-1, 2, -1}, {2, 1, -1}, {-1, -1, 0}}}, {{{-1, 0, -1}, {0, -3, -1}, {-1, -1, -2}}}},
};

void expect_matrix(const Matrix<BigInt>& got, const M3& want, std::string_view label) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(got(i, j), want[i][j]) << label << " (" << i << "," << j << ")";
}

std::vector<BigInt> random_vector(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<BigInt> c(24);
  for (auto& x : c) x = d(rng);
  return c;
}

}  // namespace

TEST(S4Factors, KnownFactorsOfEachConstruction) {
  for (const auto& d : kKnownFactors) {
    const RingElement e = family_pattern(d.id, 0);
    const FactorProfile f = s4_factors(e);
    const std::string label(family_name(d.id));
    EXPECT_EQ(f.l1, d.l1) << label;
    EXPECT_EQ(f.l2, d.l2) << label;
    EXPECT_EQ(f.q1, d.q1) << label;
    expect_matrix(s4::factor_matrix(e.coeffs(), +1), d.plus, label + " A+B");
    expect_matrix(s4::factor_matrix(e.coeffs(), -1), d.minus, label + " A-B");
    EXPECT_EQ(f.det, family_value(d.id, 0)) << label;
  }
}

TEST(S4Factors, FastEqualsExact) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 300; ++t) {
    const auto c = random_vector(rng, 9);
    EXPECT_EQ(s4_det_fast(c), det_exact(*s4_group(), c));
  }
}

TEST(S4Factors, ProfileIsConsistent) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    const auto c = random_vector(rng, 5);
    const FactorProfile f = s4_factors(c);
    const BigInt d12 = f.d1 * f.d2;
    EXPECT_EQ(f.det, f.l1 * f.l2 * f.q1 * f.q1 * d12 * d12 * d12);
    EXPECT_EQ(f.l1 + f.l2, 2 * f.u);
    EXPECT_EQ(f.l1 - f.l2, 2 * f.v);
    EXPECT_EQ(q1_via_norms(f), f.q1);
    BigInt total = 0;
    for (const auto& x : c) total += x;
    EXPECT_EQ(f.l1, total);
    EXPECT_EQ(f.two_adic, valuation(f.det, 2));
  }
}

TEST(S4Factors, LinearFactorsAreTheTrivialAndSignCharacters) {
  std::vector<BigInt> c(24);
  for (int i = 0; i < 24; ++i) c[i] = i + 1;
  const FactorProfile f = s4_factors(c);
  EXPECT_EQ(f.l1, 300);              // 1 + 2 + ... + 24
  EXPECT_EQ(f.l2, 78 - (300 - 78));  // even half minus odd half
}

TEST(S4Factors, EisensteinArithmetic) {
  using E = EisensteinInt<BigInt>;
  const E w = E::omega();
  EXPECT_EQ(w * w, E::omega2());
  EXPECT_EQ(w * w * w, E(1));
  EXPECT_EQ(E(1) + w + E::omega2(), E(0));
  EXPECT_EQ(E(BigInt(3), BigInt(5)).norm(), 9 - 15 + 25);
  EXPECT_EQ((E(BigInt(3), BigInt(5)) * E(BigInt(3), BigInt(5)).conj()), E(E(BigInt(3), BigInt(5)).norm()));
}

TEST(S4Factors, RejectsOtherGroups) {
  EXPECT_THROW(s4_det_fast(RingElement::identity(make_group(GroupKind::cyclic(4)))), InvalidArgument);
  std::vector<BigInt> short_vec(5);
  EXPECT_THROW(s4_factors(short_vec), InvalidArgument);
}
