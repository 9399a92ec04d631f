#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "nashcsp/csp.hpp"
#include "nashcsp/decomposition.hpp"
#include "nashcsp/error.hpp"
#include "nashcsp/game.hpp"
#include "nashcsp/solver.hpp"

namespace nashcsp {

namespace detail {

template < typename Game >
void require_global(const Game& game, const Profile& x)
{
   if(x.player_count() != game.player_count() or not x.is_global()) {
      throw InputError("a global profile is required");
   }
   for(PlayerIndex p = 0; p < game.player_count(); ++p) {
      if(x[p] >= game.action_count(p)) {
         throw InputError("profile assigns an unknown action to '" + game.player_name(p) + "'");
      }
   }
}

}  // namespace detail

/// No player has a strictly improving unilateral deviation.
template < typename Game >
bool is_nash_check(const Game& game, const Profile& x)
{
   detail::require_global(game, x);
   for(PlayerIndex p = 0; p < game.player_count(); ++p) {
      const auto& current = game.utility(p, x.actions());
      for(ActionIndex a = 0; a < game.action_count(p); ++a) {
         if(current < game.utility_if(p, a, x.actions())) {
            return false;
         }
      }
   }
   return true;
}

/// No member of the complete NE set beats x strictly for every player.
template < typename Game >
bool is_pareto_check(const Game& game, const Profile& x, const EquilibriumSet& ne)
{
   detail::require_global(game, x);
   if(not ne.contains(x)) {
      throw InputError("profile is not a Nash equilibrium of the game");
   }
   for(const auto& y : ne.profiles) {
      bool all_better = true;
      for(PlayerIndex p = 0; p < game.player_count() and all_better; ++p) {
         all_better = game.utility(p, x.actions()) < game.utility(p, y.actions());
      }
      if(all_better) {
         return false;
      }
   }
   return true;
}

/// A coalition and its joint deviation; every member changes action.
struct CoalitionWitness {
   std::vector< PlayerIndex > coalition;
   Profile deviation;

   friend bool operator==(const CoalitionWitness&, const CoalitionWitness&) = default;
};

/// Direct payoff comparison: every member changes action and strictly gains
/// in override(x, deviation).
template < typename Game >
bool verify_witness(const Game& game, const Profile& x, const CoalitionWitness& w)
{
   if(w.coalition.empty() or w.deviation.scope() != w.coalition) {
      return false;
   }
   auto y = override_with(x, w.deviation);
   for(auto p : w.coalition) {
      if(y[p] == x[p] or not(game.utility(p, x.actions()) < game.utility(p, y.actions()))) {
         return false;
      }
   }
   return true;
}

template < typename Game >
CoalitionWitness witness_from_profiles(const Game& game, const Profile& x, const Profile& y)
{
   CoalitionWitness w{{}, Profile(game.player_count())};
   for(PlayerIndex p = 0; p < game.player_count(); ++p) {
      if(x[p] != y[p]) {
         w.coalition.push_back(p);
         w.deviation.set(p, y[p]);
      }
   }
   return w;
}

struct StrongCheckResult {
   bool strong = true;
   std::optional< CoalitionWitness > witness;
};

/// Which local tuples the coalition search may use at node p.
enum class CoalitionTables {
   /// every combined strategy over {p} ∪ Neigh(p)
   full,
   /// only tuples of NC(p); kept for comparison, it misses deviations that
   /// pass through non-equilibrium profiles
   nash_filtered,
};

/// Decides x ∈ SNE(G) on an acyclic game. Let a local tuple t over H(p) be
/// allowed when p keeps x(p) or strictly gains over u_p(x). A refuting
/// profile is exactly a y ≠ x whose projection on every H(p) is allowed, and
/// by connectedness such projections glue whenever neighbors in the join
/// tree agree. One bottom-up pass computes, per node tuple, whether the
/// subtree admits an agreeing choice and whether some choice deviates from x.
inline StrongCheckResult strong_check_acyclic(
   const GnfGame& game, const JoinTree& jt, const Profile& x, CoalitionTables tables = CoalitionTables::full)
{
   detail::require_global(game, x);
   validate_join_tree(dependency_hypergraph(game), jt, game.roster().player_names());
   const auto& tree = jt.tree;
   const auto k = tree.size();

   struct Option {
      std::size_t table_index;
      bool deviates;  // somewhere in the subtree, including here
      bool differs;   // at this node's tuple
   };
   std::vector< std::vector< Option > > options(k);
   std::vector< std::vector< std::size_t > > parent_positions(k);  // positions in own scope shared with parent
   std::vector< std::unordered_map< detail::Key, std::vector< std::size_t >, detail::KeyHash > > by_key(k);
   std::vector< ActionIndex > tuple;
   detail::Key key;

   for(auto v : tree.postorder()) {
      auto p = jt.owner[v];
      auto scope = game.scope(p);
      auto table = game.table(p);
      const auto& base = game.utility(p, x.actions());
      std::optional< Relation > nc;
      if(tables == CoalitionTables::nash_filtered) {
         nc = nash_constraint(game, p);
      }
      auto parent = tree.parent(v);
      if(parent != kNoNode) {
         auto pscope = game.scope(jt.owner[parent]);
         for(std::size_t i = 0; i < scope.size(); ++i) {
            if(std::find(pscope.begin(), pscope.end(), scope[i]) != pscope.end()) {
               parent_positions[v].push_back(i);
            }
         }
      }
      // children's summaries keyed by this node's values on shared players
      struct ChildView {
         NodeIndex node;
         std::vector< std::size_t > positions;  // positions in this scope, aligned with the child's key
      };
      std::vector< ChildView > views;
      for(auto c : tree.children(v)) {
         ChildView view{c, {}};
         auto cscope = game.scope(jt.owner[c]);
         for(auto i : parent_positions[c]) {
            view.positions.push_back(static_cast< std::size_t >(std::find(scope.begin(), scope.end(), cscope[i]) - scope.begin()));
         }
         views.push_back(std::move(view));
      }
      tuple.resize(scope.size());
      for(std::size_t i = 0; i < table.size(); ++i) {
         game.decode(p, i, tuple);
         bool differs = false;
         for(std::size_t j = 0; j < scope.size(); ++j) {
            differs = differs or tuple[j] != x[scope[j]];
         }
         if(tuple[0] != x[p] and not(base < table[i])) {
            continue;
         }
         if(nc and not nc->contains(tuple)) {
            continue;
         }
         bool feasible = true;
         bool deviates = differs;
         for(const auto& view : views) {
            detail::extract_key(tuple, view.positions, key);
            auto it = by_key[view.node].find(key);
            if(it == by_key[view.node].end()) {
               feasible = false;
               break;
            }
            for(auto o : it->second) {
               deviates = deviates or options[view.node][o].deviates;
            }
         }
         if(feasible) {
            options[v].push_back({i, deviates, differs});
         }
      }
      for(std::size_t o = 0; o < options[v].size(); ++o) {
         game.decode(p, options[v][o].table_index, tuple);
         detail::extract_key(tuple, parent_positions[v], key);
         by_key[v][key].push_back(o);
      }
   }

   StrongCheckResult result;
   auto root = tree.root();
   auto start = std::find_if(options[root].begin(), options[root].end(), [](const Option& o) { return o.deviates; });
   if(start == options[root].end()) {
      return result;
   }
   // Rebuild one refuting profile top-down; a node that must supply the
   // deviation passes the duty to the first child able to.
   result.strong = false;
   Profile y = x;
   std::vector< std::pair< NodeIndex, std::pair< std::size_t, bool > > > work{{root, {std::size_t(start - options[root].begin()), true}}};
   while(not work.empty()) {
      auto [v, choice] = work.back();
      auto [o, need] = choice;
      work.pop_back();
      auto p = jt.owner[v];
      const auto& option = options[v][o];
      game.decode(p, option.table_index, tuple);
      auto scope = game.scope(p);
      for(std::size_t j = 0; j < scope.size(); ++j) {
         y.set(scope[j], tuple[j]);
      }
      bool still_needed = need and not option.differs;
      for(auto c : tree.children(v)) {
         auto cscope = game.scope(jt.owner[c]);
         key.clear();
         for(auto i : parent_positions[c]) {
            key.push_back(y[cscope[i]]);
         }
         const auto& candidates = by_key[c].at(key);
         std::size_t pick = candidates.front();
         if(still_needed) {
            for(auto cand : candidates) {
               if(options[c][cand].deviates) {
                  pick = cand;
                  break;
               }
            }
         } else {
            for(auto cand : candidates) {
               if(not options[c][cand].deviates) {
                  pick = cand;
                  break;
               }
            }
         }
         bool child_needed = still_needed and options[c][pick].deviates;
         still_needed = still_needed and not child_needed;
         work.push_back({c, {pick, child_needed}});
      }
   }
   result.witness = witness_from_profiles(game, x, y);
   return result;
}

/// Lexicographically first strong equilibrium of an acyclic game, if any.
inline std::optional< Profile > strong_exists_acyclic(const GnfGame& game, const JoinTree& jt)
{
   auto [consistent, exists] = make_consistent(attach_relations(game, jt));
   if(not exists) {
      return std::nullopt;
   }
   for(const auto& x : enumerate_equilibria(consistent).profiles) {
      if(strong_check_acyclic(game, jt, x).strong) {
         return x;
      }
   }
   return std::nullopt;
}

}  // namespace nashcsp
