#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace nashcsp;

namespace {

FilteredJoinTree consistent(const GnfGame& g, std::optional< PlayerIndex > root = std::nullopt)
{
   auto h = dependency_hypergraph(g);
   FilteredJoinTree t;
   if(auto jt = join_tree(h)) {
      t = solve_acyclic(g, *jt, root);
   } else {
      t = solve_with_hd(g, td_to_hd(g, tree_decomposition_heuristic(dependency_graph(g))), root);
   }
   return make_consistent(std::move(t)).first;
}

Profile named(const GnfGame& g, const Assignment& a)
{
   return profile_from_names(g, a);
}

bool dominated(const GnfGame& g, const Profile& x, const std::vector< Profile >& ne)
{
   for(const auto& y : ne) {
      bool all = true;
      for(PlayerIndex p = 0; p < g.player_count() and all; ++p) {
         all = g.utility(p, x.actions()) < g.utility(p, y.actions());
      }
      if(all) {
         return true;
      }
   }
   return false;
}

}  // namespace

TEST(Solver, FriendsNashSet)
{
   auto g = gen_friends();
   auto ne = enumerate_equilibria(consistent(g));
   std::vector< Profile > expected{
      named(g, {{"F", "m"}, {"P", "m"}, {"R", "o"}, {"G", "m"}, {"M", "o"}}),
      named(g, {{"F", "m"}, {"P", "m"}, {"R", "o"}, {"G", "o"}, {"M", "o"}}),
      named(g, {{"F", "o"}, {"P", "o"}, {"R", "m"}, {"G", "m"}, {"M", "m"}}),
      named(g, {{"F", "o"}, {"P", "o"}, {"R", "m"}, {"G", "o"}, {"M", "m"}}),
   };
   std::sort(expected.begin(), expected.end());
   EXPECT_EQ(ne.profiles, expected);
   EXPECT_EQ(count_equilibria(consistent(g)), 4);
}

TEST(Solver, PenniesHasNoEquilibrium)
{
   auto g = fixtures::pennies();
   auto h = dependency_hypergraph(g);
   auto [t, nonempty] = make_consistent(solve_acyclic(g, *join_tree(h)));
   EXPECT_FALSE(nonempty);
   EXPECT_FALSE(first_equilibrium(t).has_value());
   EXPECT_FALSE(select_pareto_equilibrium(g, t).has_value());
   EXPECT_THROW(propagate_top_down(t), Error);
}

TEST(Solver, SoloAndChain)
{
   auto s = fixtures::solo();
   auto t = consistent(s);
   EXPECT_EQ(enumerate_equilibria(t).profiles, std::vector< Profile >{Profile(std::vector< ActionIndex >{1})});

   auto c = fixtures::chain(12);
   auto ct = consistent(c);
   EXPECT_EQ(count_equilibria(ct), 2);
   auto first = first_equilibrium(ct);
   ASSERT_TRUE(first.has_value());
   EXPECT_EQ(*first, Profile(std::vector< ActionIndex >(12, 0)));
}

TEST(Solver, CountIsExactBeyondMachineWords)
{
   // 70 independent players with 3 indifferent actions each: 3^70 equilibria
   std::vector< std::string > names;
   std::vector< std::vector< std::string > > actions;
   std::vector< std::vector< PlayerIndex > > neighbors;
   for(int i = 0; i < 70; ++i) {
      names.push_back("z" + std::to_string(i));
      actions.push_back({"a", "b", "c"});
      neighbors.push_back({});
   }
   auto g = GnfGame::tabulate(names, actions, neighbors, [](PlayerIndex, std::span< const ActionIndex >) { return Payoff(0); });
   BigCount expected = 1;
   for(int i = 0; i < 70; ++i) {
      expected *= 3;
   }
   EXPECT_EQ(count_equilibria(consistent(g)), expected);
   EXPECT_EQ(enumerate_equilibria(consistent(g), 5).profiles.size(), 5U);
}

TEST(Solver, FriendsPrimeThroughHandDecomposition)
{
   auto g = gen_friends(FriendsVariant::prime);
   auto td = tree_decomposition_heuristic(dependency_graph(g));
   auto t = make_consistent(solve_with_hd(g, td_to_hd(g, td))).first;
   EXPECT_EQ(enumerate_equilibria(t).profiles, brute_nash(g).profiles);
}

TEST(Solver, RootChoiceDoesNotChangeTheAnswer)
{
   auto g = gen_friends();
   auto reference = enumerate_equilibria(consistent(g));
   for(PlayerIndex root = 0; root < g.player_count(); ++root) {
      auto t = consistent(g, root);
      EXPECT_EQ(enumerate_equilibria(t), reference) << root;
      auto pick = select_pareto_equilibrium(g, t);
      ASSERT_TRUE(pick.has_value());
      EXPECT_TRUE(reference.contains(*pick));
      EXPECT_FALSE(dominated(g, *pick, reference.profiles));
   }
}

TEST(Solver, ParetoSelectionOnFriendsMaximizesTheRootPlayer)
{
   auto g = gen_friends();
   // default root: least name, "F"; F gets 2 in both movie equilibria
   auto pick = select_pareto_equilibrium(g, consistent(g));
   ASSERT_TRUE(pick.has_value());
   EXPECT_EQ(g.action_name(g.roster().player("F"), (*pick)[g.roster().player("F")]), "m");
   auto pareto = pareto_filter(g, brute_nash(g));
   EXPECT_TRUE(pareto.contains(*pick));
}

// Property: enumeration equals the reference NE set; counts match; the first
// equilibrium is the least one; Pareto selection is an undominated member.
TEST(SolverProperty, AgreesWithReference)
{
   for(std::uint64_t seed = 1; seed <= 120; ++seed) {
      auto g = gen_random(fixtures::random_options(seed));
      auto expected = fixtures::reference_nash(g);
      auto t = consistent(g);
      auto ne = enumerate_equilibria(t);
      EXPECT_EQ(ne.profiles, expected) << "seed " << seed;
      EXPECT_EQ(count_equilibria(t), BigCount(expected.size())) << seed;
      auto first = first_equilibrium(t);
      EXPECT_EQ(first.has_value(), not expected.empty());
      if(first) {
         EXPECT_EQ(*first, expected.front()) << seed;
         auto pick = select_pareto_equilibrium(g, t);
         ASSERT_TRUE(pick.has_value());
         EXPECT_TRUE(std::binary_search(expected.begin(), expected.end(), *pick));
         EXPECT_FALSE(dominated(g, *pick, expected)) << seed;
      }
   }
}

// Property: the consistent tree is pairwise consistent and every root tuple
// extends to a full equilibrium.
TEST(SolverProperty, ConsistencyAfterBothPasses)
{
   for(std::uint64_t seed = 200; seed <= 260; ++seed) {
      auto g = gen_random(fixtures::random_options(seed));
      auto t = consistent(g);
      for(NodeIndex v = 0; v < t.tree.size(); ++v) {
         auto parent = t.tree.parent(v);
         if(parent == kNoNode) {
            continue;
         }
         const auto& child = t.nodes[v].relation;
         const auto& up = t.nodes[parent].relation;
         EXPECT_EQ(semijoin(child, up), child) << seed;
         EXPECT_EQ(semijoin(up, child), up) << seed;
      }
      auto ne = enumerate_equilibria(t);
      const auto& root = t.root_relation();
      for(std::size_t i = 0; i < root.size(); ++i) {
         bool extended = false;
         for(const auto& x : ne.profiles) {
            bool match = true;
            for(std::size_t k = 0; k < root.arity(); ++k) {
               match = match and x[root.scope()[k]] == root.row(i)[k];
            }
            extended = extended or match;
         }
         EXPECT_TRUE(extended) << seed;
      }
   }
}
