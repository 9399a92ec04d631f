#pragma once

#include <vector>

#include "nashcsp/game.hpp"
#include "nashcsp/relation.hpp"

namespace nashcsp {

/// NC(p): the tuples over (p, Neigh(p)) in which p plays a best response to
/// her neighbors. Ties keep every maximizer.
inline Relation nash_constraint(const GnfGame& game, PlayerIndex p)
{
   if(p >= game.player_count()) {
      throw InputError("nash_constraint: unknown player");
   }
   auto table = game.table(p);
   const std::size_t own_stride = game.strides(p)[0];
   const std::size_t own_count = game.action_count(p);
   std::vector< bool > keep(table.size(), false);
   for(std::size_t rest = 0; rest < own_stride; ++rest) {
      const Payoff* best = &table[rest];
      for(std::size_t a = 1; a < own_count; ++a) {
         best = std::max(best, &table[a * own_stride + rest], [](auto* x, auto* y) { return *x < *y; });
      }
      for(std::size_t a = 0; a < own_count; ++a) {
         keep[a * own_stride + rest] = table[a * own_stride + rest] == *best;
      }
   }
   const auto scope = game.scope(p);
   std::vector< ActionIndex > rows;
   std::vector< ActionIndex > tuple(scope.size());
   for(std::size_t i = 0; i < table.size(); ++i) {
      if(keep[i]) {
         game.decode(p, i, tuple);
         rows.insert(rows.end(), tuple.begin(), tuple.end());
      }
   }
   return Relation(std::vector< PlayerIndex >(scope.begin(), scope.end()), std::move(rows));
}

/// CSP(G): variables are players, domains their actions, one Nash constraint
/// per player (constraint i belongs to player i).
struct CspInstance {
   std::vector< std::size_t > domain_sizes;
   std::vector< Relation > constraints;

   std::size_t variable_count() const { return domain_sizes.size(); }

   /// Whether a global assignment satisfies every constraint.
   bool satisfied_by(std::span< const ActionIndex > assignment) const
   {
      std::vector< ActionIndex > tuple;
      for(const auto& c : constraints) {
         tuple.clear();
         for(auto p : c.scope()) {
            tuple.push_back(assignment[p]);
         }
         if(not c.contains(tuple)) {
            return false;
         }
      }
      return true;
   }
};

inline CspInstance csp_of_game(const GnfGame& game)
{
   CspInstance csp;
   for(PlayerIndex p = 0; p < game.player_count(); ++p) {
      csp.domain_sizes.push_back(game.action_count(p));
      csp.constraints.push_back(nash_constraint(game, p));
   }
   return csp;
}

}  // namespace nashcsp
