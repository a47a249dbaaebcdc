#include "gdet/reps.hpp"

#include <gtest/gtest.h>

using namespace gdet;

TEST(Reps, TablesAreHomomorphisms) {
  const RepTable t = standard_rep_table();
  const GroupTable& g = *s4_group();
  EXPECT_EQ(homomorphism_failures(g, t.rho1), 0U);
  EXPECT_EQ(homomorphism_failures(g, t.rho2), 0U);
  EXPECT_EQ(homomorphism_failures(g, t.rho3), 0U);
}

TEST(Reps, DeterminantsReproduceFactorPolynomials) {
  const RepCheckReport r = rep_factor_report(standard_rep_table());
  EXPECT_TRUE(r.homomorphisms());
  EXPECT_TRUE(r.rho3_is_signed_rho2);
  EXPECT_TRUE(r.q1_matches);
  EXPECT_TRUE(r.d1_matches);
  EXPECT_TRUE(r.d2_matches);
  EXPECT_TRUE(rep_factor_check(standard_rep_table()));
}

TEST(Reps, CharactersAreOrthogonal) {
  // trace inner products: <chi, chi> = 24 for each irreducible, 0 between rho2 and rho3
  const RepTable t = standard_rep_table();
  int c22 = 0, c33 = 0, c23 = 0;
  for (std::size_t g = 0; g < 24; ++g) {
    const int x2 = t.rho2[g][0][0] + t.rho2[g][1][1] + t.rho2[g][2][2];
    const int x3 = t.rho3[g][0][0] + t.rho3[g][1][1] + t.rho3[g][2][2];
    c22 += x2 * x2;
    c33 += x3 * x3;
    c23 += x2 * x3;
  }
  EXPECT_EQ(c22, 24);
  EXPECT_EQ(c33, 24);
  EXPECT_EQ(c23, 0);
}

TEST(Reps, SwappedMatricesAreCaught) {
  RepTable t = standard_rep_table();
  std::swap(t.rho2[20], t.rho2[21]);
  const RepCheckReport r = rep_factor_report(t);
  EXPECT_GT(r.rho2_failures, 0U);
  EXPECT_FALSE(r.d1_matches);
}

TEST(Reps, PerturbedRho1IsCaught) {
  RepTable t = standard_rep_table();
  t.rho1[4] = t.rho1[8];
  EXPECT_GT(homomorphism_failures(*s4_group(), t.rho1), 0U);
  EXPECT_FALSE(rep_factor_check(t));
}
