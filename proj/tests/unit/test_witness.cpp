#include "gdet/witness.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace gdet;

namespace {

const GroupRule kS4 = GroupRule::of(RuleKind::S4);

std::vector<TrailStep> steps(std::initializer_list<std::pair<WitnessFamilyId, int>> list) {
  std::vector<TrailStep> out;
  for (auto [id, k] : list) out.push_back({id, BigInt(k)});
  return out;
}

}  // namespace

TEST(Witness, FamilyExamples) {
  const auto r1 = family(WitnessFamilyId::res1, 0);
  EXPECT_EQ(r1.element, RingElement::identity(s4_group()));
  EXPECT_EQ(r1.value, 1);
  EXPECT_EQ(family_value(WitnessFamilyId::neg27, 1), -243);
  const auto n13 = family(WitnessFamilyId::neg2_13, 0);
  EXPECT_EQ(n13.value, -8192);
  std::vector<BigInt> want(24, BigInt(0));
  for (int a : {2, 3, 4, 5, 9}) want[a - 1] = 1;
  for (int b : {4, 5, 6}) want[11 + b] = 1;
  EXPECT_EQ(n13.element, RingElement(s4_group(), want));
  EXPECT_EQ(family_value(WitnessFamilyId::res5, 1), 29);
  EXPECT_EQ(family_value(WitnessFamilyId::pos2_13, 0), 8192);
}

TEST(Witness, ClosedFormsHoldOnThirtyPoints) {
  // value(k) and det(pattern(k)) are polynomials of degree <= 24 in k, so 30 agreeing points
  // certify the identity.
  for (auto id : kAllFamilies)
    for (int k = -15; k <= 14; ++k) {
      const auto f = family(id, k);
      ASSERT_EQ(det_exact(f.element), f.value) << family_name(id) << " k=" << k;
      if (family_is_constant(id)) break;
    }
}

TEST(Witness, FamilyValuesAreMembers) {
  for (auto id : kAllFamilies)
    for (int k = -20; k <= 20; ++k) {
      const BigInt v = family_value(id, k);
      if (v != 0) EXPECT_TRUE(is_member(kS4, v)) << family_name(id) << " k=" << k;
    }
}

TEST(Witness, SolveFamily) {
  EXPECT_EQ(solve_family(WitnessFamilyId::res17, -7), BigInt(-1));
  EXPECT_EQ(solve_family(WitnessFamilyId::res5, 29), BigInt(1));
  EXPECT_FALSE(solve_family(WitnessFamilyId::res5, 30).has_value());
  EXPECT_FALSE(solve_family(WitnessFamilyId::pow2_8, 256).has_value());
  EXPECT_EQ(solve_family(WitnessFamilyId::neg2_13, 16384), BigInt(-1));
  EXPECT_FALSE(solve_family(WitnessFamilyId::neg2_13, -16384).has_value());
}

TEST(Witness, SynthesisExamples) {
  EXPECT_EQ(synthesize(5).trail, steps({{WitnessFamilyId::res5, 0}}));
  EXPECT_EQ(synthesize(1).trail, steps({{WitnessFamilyId::res1, 0}}));
  const auto c1280 = synthesize(1280);
  EXPECT_EQ(c1280.trail, steps({{WitnessFamilyId::pow2_8, 0}, {WitnessFamilyId::res5, 0}}));
  EXPECT_TRUE(verify_certificate(c1280));
  EXPECT_EQ(synthesize(-243).trail, steps({{WitnessFamilyId::neg27, 1}}));
  const auto c = synthesize(BigInt(4096) * 7);
  EXPECT_EQ(c.trail, steps({{WitnessFamilyId::neg2_12, 0}, {WitnessFamilyId::res17, -1}}));
  EXPECT_EQ(det_exact(c.coefficients), 4096 * 7);
  EXPECT_TRUE(verify_certificate(c));
}

TEST(Witness, NonMembersAreRejected) {
  for (long long m : {0LL, 2LL, 3LL, 512LL, 1024LL, 3072LL, -1LL, 9LL})
    EXPECT_THROW(synthesize(m), NotInSet) << m;
}

TEST(Witness, PerturbedCertificateFails) {
  auto c = synthesize(BigInt(-1024) * 13);
  ASSERT_TRUE(verify_certificate(c));
  c.coefficients[7] += 1;
  EXPECT_FALSE(verify_certificate(c));
  auto d = synthesize(29);
  d.target = 5;
  EXPECT_FALSE(verify_certificate(d));
  auto e = synthesize(29);
  e.trail = steps({{WitnessFamilyId::res5, 0}});
  EXPECT_FALSE(verify_certificate(e));
}

TEST(Witness, CoversSmallestMembersOfEveryAcceptedClass) {
  // (2-adic class, residue mod 24) -> smallest members by absolute value; class 12 collects
  // every valuation >= 12
  std::map<std::pair<unsigned, unsigned>, std::vector<BigInt>> buckets;
  for (unsigned a : {0U, 8U, 10U, 12U})
    for (long long n = 1; n <= (a == 0 ? 20000 : 2000); ++n)
      for (long long t : {n, -n}) {
        const BigInt m = pow2(a) * t;
        const unsigned v = valuation(m, 2).value();
        if ((a == 12 ? v < 12 : v != a) || !is_member(kS4, m)) continue;
        auto& b = buckets[{a, residue(m, 24)}];
        if (b.size() < 10) b.push_back(m);
      }
  EXPECT_GE(buckets.size(), 10U);
  for (const auto& [key, targets] : buckets) {
    EXPECT_EQ(targets.size(), 10U) << "class 2^" << key.first << " residue " << key.second;
    for (const auto& t : targets) {
      const auto c = synthesize(t);
      ASSERT_TRUE(verify_certificate(c)) << t;
      EXPECT_EQ(trail_value(c.trail), t);
    }
  }
}

TEST(Witness, LargeValuations) {
  for (const BigInt& t : {pow2(13), -pow2(14), pow2(20) * 5, BigInt(-27) * 27 * 27 * 5, -pow2(12) * 81 * 7}) {
    const auto c = synthesize(t);
    EXPECT_TRUE(verify_certificate(c)) << t;
    EXPECT_EQ(trail_value(c.trail), t);
  }
}

TEST(Witness, FamilyNames) {
  for (auto id : kAllFamilies) EXPECT_EQ(parse_family(family_name(id)), id);
  EXPECT_THROW(parse_family("res7"), InvalidArgument);
}
