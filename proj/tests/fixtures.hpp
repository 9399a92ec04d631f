#pragma once

// Small games shared by the test binaries, plus reference routines written
// independently of the library's own oracles.

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "nashcsp/nashcsp.hpp"

namespace fixtures {

using namespace nashcsp;

/// Matching pennies: no pure equilibrium.
inline GnfGame pennies()
{
   return GnfGame::tabulate({"A", "B"}, {{"h", "t"}, {"h", "t"}}, {{1}, {0}}, [](PlayerIndex p, std::span< const ActionIndex > t) {
      bool match = t[0] == t[1];
      return Payoff(p == 0 ? (match ? 1 : -1) : (match ? -1 : 1));
   });
}

/// One player, no neighbors; prefers its second action.
inline GnfGame solo()
{
   return GnfGame::tabulate({"S"}, {{"x", "y", "z"}}, {{}}, [](PlayerIndex, std::span< const ActionIndex > t) {
      return Payoff(t[0] == 1 ? 5 : 0);
   });
}

/// Path p1 - p2 - ... - pn; every player wants to copy its left neighbor
/// (p1 copies p2), so NE are exactly the two constant profiles.
inline GnfGame chain(std::size_t n)
{
   std::vector< std::string > names;
   std::vector< std::vector< std::string > > actions;
   std::vector< std::vector< PlayerIndex > > neighbors;
   for(std::size_t i = 0; i < n; ++i) {
      names.push_back("p" + std::to_string(i + 1));
      actions.push_back({"a", "b"});
      neighbors.push_back({static_cast< PlayerIndex >(i == 0 ? 1 : i - 1)});
   }
   return GnfGame::tabulate(names, actions, neighbors, [](PlayerIndex, std::span< const ActionIndex > t) {
      return Payoff(t[0] == t[1] ? 1 : 0);
   });
}

/// n players where everyone depends on everyone; payoff 1 for matching the
/// majority (ties favor action 0), so NE are the two unanimous profiles.
inline GnfGame clique(std::size_t n)
{
   std::vector< std::string > names;
   std::vector< std::vector< std::string > > actions;
   std::vector< std::vector< PlayerIndex > > neighbors;
   for(std::size_t i = 0; i < n; ++i) {
      names.push_back("q" + std::to_string(i + 1));
      actions.push_back({"a", "b"});
      auto& ns = neighbors.emplace_back();
      for(std::size_t j = 0; j < n; ++j) {
         if(j != i) {
            ns.push_back(static_cast< PlayerIndex >(j));
         }
      }
   }
   return GnfGame::tabulate(names, actions, neighbors, [](PlayerIndex, std::span< const ActionIndex > t) {
      std::size_t ones = 0;
      for(auto a : t) {
         ones += a;
      }
      return Payoff(t[0] == 1 ? std::int64_t(ones) : std::int64_t(t.size() - ones));
   });
}

/// Names → profile shorthand: profile(game, {{"G","m"}, ...}).
template < typename Game >
Profile profile(const Game& game, const Assignment& names)
{
   return profile_from_names(game, names);
}

/// Reference NE enumeration: recursive product, checked through
/// utility_of on Profile objects rather than the table fast paths.
template < typename Game >
std::vector< Profile > reference_nash(const Game& game)
{
   std::vector< Profile > out;
   Profile x(game.player_count());
   std::function< void(PlayerIndex) > rec = [&](PlayerIndex p) {
      if(p == game.player_count()) {
         for(PlayerIndex q = 0; q < game.player_count(); ++q) {
            auto base = utility_of(game, q, x);
            auto y = x;
            for(ActionIndex a = 0; a < game.action_count(q); ++a) {
               y.set(q, a);
               if(base < utility_of(game, q, y)) {
                  return;
               }
            }
         }
         out.push_back(x);
         return;
      }
      for(ActionIndex a = 0; a < game.action_count(p); ++a) {
         x.set(p, a);
         rec(p + 1);
      }
   };
   rec(0);
   std::sort(out.begin(), out.end());
   return out;
}

/// Reference strong check: enumerate coalitions as bitmasks and their
/// deviations recursively.
template < typename Game >
bool reference_strong(const Game& game, const Profile& x)
{
   const auto n = game.player_count();
   for(std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
      std::vector< PlayerIndex > members;
      for(PlayerIndex p = 0; p < n; ++p) {
         if((mask >> p) & 1U) {
            members.push_back(p);
         }
      }
      Profile y = x;
      bool refuted = false;
      std::function< void(std::size_t) > rec = [&](std::size_t i) {
         if(refuted) {
            return;
         }
         if(i == members.size()) {
            for(auto p : members) {
               if(not(utility_of(game, p, x) < utility_of(game, p, y))) {
                  return;
               }
            }
            refuted = true;
            return;
         }
         auto p = members[i];
         for(ActionIndex a = 0; a < game.action_count(p); ++a) {
            if(a != x[p]) {
               y.set(p, a);
               rec(i + 1);
            }
         }
         y.set(p, x[p]);
      };
      rec(0);
      if(refuted) {
         return false;
      }
   }
   return true;
}

inline RandomGameOptions random_options(std::uint64_t seed)
{
   RandomGameOptions opt;
   opt.seed = seed;
   opt.players = 3 + seed % 4;
   opt.max_actions = 2 + seed % 2;
   opt.max_neighbors = 1 + seed % 3;
   opt.payoff_min = 0;
   opt.payoff_max = 3;
   return opt;
}

/// Random game over a random host tree: along each tree edge one endpoint
/// depends on the other, or both do. Every characteristic edge is a star
/// around its player inside the host tree, so the hypergraph is acyclic.
/// Two-way edges matter: with one-way dependencies only, the earliest
/// coalition member can never gain, and every equilibrium is strong.
inline GnfGame random_acyclic(std::uint64_t seed, std::size_t players, std::size_t max_actions = 2)
{
   std::mt19937_64 rng(seed);
   auto pick = [&](std::uint64_t lo, std::uint64_t hi) { return nashcsp::detail::draw(rng, lo, hi); };
   std::vector< std::string > names;
   std::vector< std::vector< std::string > > actions;
   std::vector< std::vector< PlayerIndex > > neighbors(players);
   for(std::size_t i = 0; i < players; ++i) {
      names.push_back("p" + std::to_string(i + 1));
      auto k = pick(2, max_actions);
      auto& acts = actions.emplace_back();
      for(std::size_t a = 0; a < k; ++a) {
         acts.push_back("a" + std::to_string(a));
      }
   }
   auto depend = [&](PlayerIndex who, PlayerIndex on) {
      if(neighbors[who].size() < 3) {
         neighbors[who].push_back(on);
      }
   };
   for(PlayerIndex i = 1; i < players; ++i) {
      auto j = static_cast< PlayerIndex >(pick(0, i - 1));
      switch(pick(0, 2)) {
      case 0: depend(i, j); depend(j, i); break;
      case 1: depend(i, j); break;
      default: depend(j, i); break;
      }
   }
   return GnfGame::tabulate(names, actions, neighbors, [&](PlayerIndex, std::span< const ActionIndex >) {
      return Payoff(std::int64_t(pick(0, 3)));
   });
}

}  // namespace fixtures
