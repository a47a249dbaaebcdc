#include "gdet/ring.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gdet;

namespace {

RingElement random_element(const GroupPtr& g, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<BigInt> c(g->order());
  for (auto& x : c) x = d(rng);
  return RingElement(g, std::move(c));
}

}  // namespace

TEST(Ring, IdentityIsNeutral) {
  std::mt19937_64 rng(1);
  const auto& g = s4_group();
  const auto a = random_element(g, rng, 5);
  EXPECT_EQ(a * RingElement::identity(g), a);
  EXPECT_EQ(RingElement::identity(g) * a, a);
}

TEST(Ring, Z2ProductFormula) {
  const auto g = make_group(GroupKind::cyclic(2));
  const RingElement a(g, {BigInt(3), BigInt(-2)});
  const RingElement b(g, {BigInt(5), BigInt(7)});
  const RingElement c = a * b;
  EXPECT_EQ(c[0], 3 * 5 + -2 * 7);
  EXPECT_EQ(c[1], 3 * 7 + -2 * 5);
}

TEST(Ring, AssociativeAndDistributiveOnS4) {
  std::mt19937_64 rng(7);
  const auto& g = s4_group();
  for (int t = 0; t < 50; ++t) {
    const auto a = random_element(g, rng, 5), b = random_element(g, rng, 5), c = random_element(g, rng, 5);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a - b) * c, a * c - b * c);
  }
}

TEST(Ring, TrivialGroupIsIntegerMultiplication) {
  const auto g = make_group(GroupKind::cyclic(1));
  EXPECT_EQ((RingElement::scalar(g, 6) * RingElement::scalar(g, -7))[0], -42);
}

TEST(Ring, BasisProductsFollowTheTable) {
  const auto& g = s4_group();
  for (std::size_t i = 0; i < 24; ++i)
    for (std::size_t j = 0; j < 24; ++j)
      EXPECT_EQ(RingElement::basis(g, i) * RingElement::basis(g, j), RingElement::basis(g, g->mul(i, j)));
}

TEST(Ring, PowerMatchesRepeatedProduct) {
  std::mt19937_64 rng(3);
  const auto& g = s4_group();
  const auto a = random_element(g, rng, 2);
  RingElement acc = RingElement::identity(g);
  for (int e = 0; e <= 6; ++e) {
    EXPECT_EQ(power(a, e), acc);
    acc = acc * a;
  }
}

TEST(Ring, MismatchedGroupsThrow) {
  const auto z4 = make_group(GroupKind::cyclic(4));
  const auto k4 = make_group(GroupKind::klein());
  EXPECT_THROW(RingElement::identity(z4) * RingElement::identity(k4), GroupMismatch);
  EXPECT_THROW(RingElement::identity(z4) + RingElement::identity(k4), GroupMismatch);
  EXPECT_NO_THROW(RingElement::identity(z4) * RingElement::identity(make_group(GroupKind::cyclic(4))));
  EXPECT_THROW(RingElement(z4, {BigInt(1)}), InvalidArgument);
}

TEST(Ring, SplitAccessorsOnS4) {
  std::vector<BigInt> c(24);
  for (int i = 0; i < 24; ++i) c[i] = i + 1;
  const RingElement e(s4_group(), c);
  EXPECT_EQ(e.a(1), 1);
  EXPECT_EQ(e.a(12), 12);
  EXPECT_EQ(e.b(1), 13);
  EXPECT_EQ(e.b(12), 24);
}
