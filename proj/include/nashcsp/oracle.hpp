#pragma once

#include <cstdint>
#include <vector>

#include "nashcsp/error.hpp"
#include "nashcsp/formula.hpp"
#include "nashcsp/game.hpp"
#include "nashcsp/solver.hpp"
#include "nashcsp/strong.hpp"

namespace nashcsp {

inline constexpr std::uint64_t kDefaultGuard = 1'000'000;

namespace detail {

template < typename Game >
void check_guard(const Game& game, std::uint64_t guard)
{
   auto total = game.roster().profile_count();
   if(total > guard) {
      throw GuardExceeded(
         "brute force needs " + (total == UINT64_MAX ? std::string("more than 2^64") : std::to_string(total))
         + " profiles, above the guard of " + std::to_string(guard));
   }
}

/// Advances a mixed-radix odometer (last player fastest); false on wrap.
template < typename Game >
bool next_profile(const Game& game, std::vector< ActionIndex >& x)
{
   for(std::size_t p = x.size(); p-- > 0;) {
      if(++x[p] < game.action_count(static_cast< PlayerIndex >(p))) {
         return true;
      }
      x[p] = 0;
   }
   return false;
}

template < typename Game, typename Visit >
void for_each_profile(const Game& game, Visit&& visit)
{
   std::vector< ActionIndex > x(game.player_count(), 0);
   do {
      visit(x);
   } while(next_profile(game, x));
}

template < typename Game >
bool unilaterally_stable(const Game& game, std::span< const ActionIndex > x)
{
   for(PlayerIndex p = 0; p < game.player_count(); ++p) {
      const auto& current = game.utility(p, x);
      for(ActionIndex a = 0; a < game.action_count(p); ++a) {
         if(a != x[p] and current < game.utility_if(p, a, x)) {
            return false;
         }
      }
   }
   return true;
}

/// Some y ≠ x where every player that moved strictly gains; returns it.
template < typename Game >
std::optional< Profile > improving_profile(const Game& game, const Profile& x, const std::vector< Payoff >& base)
{
   std::optional< Profile > found;
   std::vector< ActionIndex > y(game.player_count(), 0);
   do {
      bool moved = false;
      bool all_gain = true;
      for(PlayerIndex p = 0; p < game.player_count() and all_gain; ++p) {
         if(y[p] != x[p]) {
            moved = true;
            all_gain = base[p] < game.utility(p, y);
         }
      }
      if(moved and all_gain) {
         found = Profile(y);
         break;
      }
   } while(next_profile(game, y));
   return found;
}

}  // namespace detail

/// Every global profile tested against the unilateral-deviation definition.
template < typename Game >
EquilibriumSet brute_nash(const Game& game, std::uint64_t guard = kDefaultGuard)
{
   detail::check_guard(game, guard);
   EquilibriumSet out{EquilibriumKind::nash, {}};
   detail::for_each_profile(game, [&](const std::vector< ActionIndex >& x) {
      if(detail::unilaterally_stable(game, x)) {
         out.profiles.emplace_back(x);
      }
   });
   return out;  // odometer order is already lexicographic
}

template < typename Game >
EquilibriumSet brute_pareto(const Game& game, std::uint64_t guard = kDefaultGuard)
{
   return pareto_filter(game, brute_nash(game, guard));
}

/// Strong check by scanning every alternative profile: the coalition of a
/// refuting deviation is the set of players that moved.
template < typename Game >
StrongCheckResult brute_strong_check(const Game& game, const Profile& x, std::uint64_t guard = kDefaultGuard)
{
   detail::require_global(game, x);
   detail::check_guard(game, guard);
   std::vector< Payoff > base;
   for(PlayerIndex p = 0; p < game.player_count(); ++p) {
      base.push_back(game.utility(p, x.actions()));
   }
   StrongCheckResult result;
   if(auto y = detail::improving_profile(game, x, base)) {
      result.strong = false;
      result.witness = witness_from_profiles(game, x, *y);
   }
   return result;
}

template < typename Game >
EquilibriumSet brute_strong(const Game& game, std::uint64_t guard = kDefaultGuard)
{
   auto ne = brute_nash(game, guard);
   EquilibriumSet out{EquilibriumKind::strong, {}};
   for(const auto& x : ne.profiles) {
      if(brute_strong_check(game, x, guard).strong) {
         out.profiles.push_back(x);
      }
   }
   return out;
}

// ---------------------------------------------------------------------------
// Representation changes
// ---------------------------------------------------------------------------

inline SnfGame to_snf(const GnfGame& game, std::uint64_t guard = kDefaultGuard)
{
   detail::check_guard(game, guard);
   std::vector< std::vector< std::string > > actions;
   for(PlayerIndex p = 0; p < game.player_count(); ++p) {
      actions.push_back(game.roster().action_names(p));
   }
   return SnfGame::tabulate(
      game.roster().player_names(), std::move(actions),
      [&](PlayerIndex p, std::span< const ActionIndex > x) { return game.utility(p, x); });
}

/// Every player depends on every other player.
inline GnfGame to_gnf(const SnfGame& game)
{
   std::vector< std::vector< std::string > > actions;
   std::vector< std::vector< PlayerIndex > > neighbors;
   for(PlayerIndex p = 0; p < game.player_count(); ++p) {
      actions.push_back(game.roster().action_names(p));
      auto n = game.neighbors(p);
      neighbors.emplace_back(n.begin(), n.end());
   }
   return GnfGame::tabulate(
      game.roster().player_names(), std::move(actions), std::move(neighbors),
      [&](PlayerIndex p, std::span< const ActionIndex > tuple) {
         // the scope of p is p followed by the others in declared order
         std::vector< ActionIndex > x(game.player_count());
         x[p] = tuple[0];
         std::size_t k = 1;
         for(PlayerIndex q = 0; q < game.player_count(); ++q) {
            if(q != p) {
               x[q] = tuple[k++];
            }
         }
         return game.utility(p, x);
      });
}

// ---------------------------------------------------------------------------
// Formula oracles
// ---------------------------------------------------------------------------

inline constexpr std::size_t kFormulaVariableLimit = 20;

inline std::uint64_t count_models_cnf(const Cnf& phi)
{
   phi.validate();
   const auto n = phi.variables.size();
   if(n > kFormulaVariableLimit) {
      throw GuardExceeded("model counting is limited to " + std::to_string(kFormulaVariableLimit) + " variables");
   }
   std::uint64_t count = 0;
   std::vector< bool > assignment(n);
   for(std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
      for(std::size_t v = 0; v < n; ++v) {
         assignment[v] = (bits >> v) & 1U;
      }
      count += phi.satisfied_by(assignment) ? 1 : 0;
   }
   return count;
}

/// Some existential assignment makes the matrix true for every universal one.
inline bool eval_r2qbf(const R2Qbf& xi)
{
   xi.validate();
   const auto e = xi.exists.size();
   const auto u = xi.forall.size();
   if(e + u > kFormulaVariableLimit) {
      throw GuardExceeded("QBF evaluation is limited to " + std::to_string(kFormulaVariableLimit) + " variables");
   }
   std::vector< bool > assignment(e + u);
   for(std::uint64_t ebits = 0; ebits < (std::uint64_t(1) << e); ++ebits) {
      for(std::size_t v = 0; v < e; ++v) {
         assignment[v] = (ebits >> v) & 1U;
      }
      bool all = true;
      for(std::uint64_t ubits = 0; ubits < (std::uint64_t(1) << u) and all; ++ubits) {
         for(std::size_t v = 0; v < u; ++v) {
            assignment[e + v] = (ubits >> v) & 1U;
         }
         all = xi.matrix_holds(assignment);
      }
      if(all) {
         return true;
      }
   }
   return false;
}

}  // namespace nashcsp
