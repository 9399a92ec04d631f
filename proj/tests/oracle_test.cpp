#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace nashcsp;

TEST(BruteOracle, SmallFixtures)
{
   EXPECT_TRUE(brute_nash(fixtures::pennies()).profiles.empty());
   EXPECT_EQ(brute_nash(fixtures::solo()).profiles.size(), 1U);
   EXPECT_EQ(brute_nash(fixtures::chain(6)).profiles.size(), 2U);
   EXPECT_EQ(brute_nash(fixtures::clique(6)).profiles.size(), 2U);
   auto friends = gen_friends();
   EXPECT_EQ(brute_nash(friends).profiles.size(), 4U);
   EXPECT_EQ(brute_pareto(friends).profiles.size(), 2U);
   EXPECT_EQ(brute_strong(friends).profiles.size(), 2U);
}

TEST(BruteOracle, GuardIsEnforced)
{
   auto big = fixtures::chain(21);  // 2^21 profiles
   EXPECT_THROW(brute_nash(big), GuardExceeded);
   EXPECT_NO_THROW(brute_nash(fixtures::chain(10), 1024));
   EXPECT_THROW(brute_nash(fixtures::chain(10), 1023), GuardExceeded);
   EXPECT_THROW(to_snf(big), GuardExceeded);
}

TEST(BruteOracle, StrongWitnessesVerify)
{
   auto g = gen_friends();
   for(const auto& x : brute_nash(g).profiles) {
      auto r = brute_strong_check(g, x);
      if(not r.strong) {
         ASSERT_TRUE(r.witness.has_value());
         EXPECT_TRUE(verify_witness(g, x, *r.witness));
      }
   }
}

// Property: brute-force sets agree with the recursive reference, for both
// representations.
TEST(BruteOracleProperty, AgreesWithReference)
{
   for(std::uint64_t seed = 1; seed <= 100; ++seed) {
      auto g = gen_random(fixtures::random_options(seed));
      auto ne = brute_nash(g);
      EXPECT_EQ(ne.profiles, fixtures::reference_nash(g)) << seed;
      auto s = to_snf(g);
      EXPECT_EQ(brute_nash(s).profiles, ne.profiles) << seed;
      EXPECT_EQ(fixtures::reference_nash(s), ne.profiles) << seed;
      for(const auto& x : ne.profiles) {
         EXPECT_EQ(brute_strong_check(g, x).strong, fixtures::reference_strong(g, x)) << seed;
      }
      EXPECT_EQ(brute_pareto(s).profiles, brute_pareto(g).profiles);
   }
}

TEST(FormulaOracles, CountModels)
{
   Cnf phi{{"X1", "X2"}, {{{0, true}, {1, true}}}};
   EXPECT_EQ(count_models_cnf(phi), 3U);
   phi.clauses.push_back({{0, false}});
   EXPECT_EQ(count_models_cnf(phi), 1U);
   phi.clauses.push_back({{1, false}});
   EXPECT_EQ(count_models_cnf(phi), 0U);
   Cnf empty{{"X1", "X2", "X3"}, {}};
   EXPECT_EQ(count_models_cnf(empty), 8U);
}

TEST(FormulaOracles, EvalR2qbf)
{
   // ∃α ∀β (α∧β) ∨ (α∧¬β) is valid; ∃α ∀β (α∧β) ∨ (¬α∧β) is not
   R2Qbf valid{{"alpha"}, {"beta"}, {{{0, true}, {1, true}}, {{0, true}, {1, false}}}};
   R2Qbf invalid{{"alpha"}, {"beta"}, {{{0, true}, {1, true}}, {{0, false}, {1, true}}}};
   EXPECT_TRUE(eval_r2qbf(valid));
   EXPECT_FALSE(eval_r2qbf(invalid));
   R2Qbf overlap{{"a"}, {"a"}, {{{0, true}}}};
   EXPECT_THROW(eval_r2qbf(overlap), InputError);
}
