#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nashcsp/csp.hpp"
#include "nashcsp/decomposition.hpp"
#include "nashcsp/error.hpp"
#include "nashcsp/game.hpp"
#include "nashcsp/relation.hpp"
#include "nashcsp/structure.hpp"

namespace nashcsp {

using BigCount = boost::multiprecision::cpp_int;

inline constexpr PlayerIndex kNoPlayer = 0xFFFFFFFF;

enum class EquilibriumKind { nash, pareto, strong };

inline std::string to_string(EquilibriumKind kind)
{
   switch(kind) {
   case EquilibriumKind::nash: return "nash";
   case EquilibriumKind::pareto: return "pareto";
   case EquilibriumKind::strong: return "strong";
   }
   return "nash";
}

/// Global profiles, sorted and duplicate-free.
struct EquilibriumSet {
   EquilibriumKind kind = EquilibriumKind::nash;
   std::vector< Profile > profiles;

   void canonicalize()
   {
      std::sort(profiles.begin(), profiles.end());
      profiles.erase(std::unique(profiles.begin(), profiles.end()), profiles.end());
   }

   bool contains(const Profile& x) const { return std::binary_search(profiles.begin(), profiles.end(), x); }

   friend bool operator==(const EquilibriumSet&, const EquilibriumSet&) = default;
};

struct FilteredNode {
   std::vector< PlayerIndex > owners;
   /// Player whose utility Pareto selection maximizes here, or kNoPlayer.
   PlayerIndex designated = kNoPlayer;
   Relation relation;
};

/// Acyclic instance: a rooted tree of relations whose scopes satisfy the
/// connectedness condition.
struct FilteredJoinTree {
   RootedTree tree;
   std::vector< FilteredNode > nodes;
   std::size_t player_count = 0;

   const Relation& root_relation() const { return nodes[tree.root()].relation; }

   friend bool operator==(const FilteredJoinTree& a, const FilteredJoinTree& b)
   {
      if(a.tree != b.tree or a.nodes.size() != b.nodes.size()) {
         return false;
      }
      for(std::size_t i = 0; i < a.nodes.size(); ++i) {
         if(a.nodes[i].owners != b.nodes[i].owners or a.nodes[i].relation != b.nodes[i].relation) {
            return false;
         }
      }
      return true;
   }
};

/// Player with the lexicographically least name.
template < typename Game >
PlayerIndex default_root_player(const Game& game)
{
   PlayerIndex best = 0;
   for(PlayerIndex p = 1; p < game.player_count(); ++p) {
      if(game.player_name(p) < game.player_name(best)) {
         best = p;
      }
   }
   return best;
}

/// Node v of the join tree carries NC(owner(v)).
inline FilteredJoinTree attach_relations(const GnfGame& game, const JoinTree& jt)
{
   auto h = dependency_hypergraph(game);
   validate_join_tree(h, jt, game.roster().player_names());
   FilteredJoinTree t;
   t.tree = jt.tree;
   t.player_count = game.player_count();
   for(auto p : jt.owner) {
      t.nodes.push_back({{p}, p, nash_constraint(game, p)});
   }
   return t;
}

/// Leaves-to-root semijoin pass. The flag reports a nonempty root.
inline std::pair< FilteredJoinTree, bool > filter_bottom_up(FilteredJoinTree t)
{
   for(auto v : t.tree.postorder()) {
      for(auto c : t.tree.children(v)) {
         t.nodes[v].relation = semijoin(t.nodes[v].relation, t.nodes[c].relation);
      }
   }
   bool exists = not t.root_relation().empty();
   return {std::move(t), exists};
}

/// Root-to-leaves semijoin pass; afterwards every tuple takes part in a
/// solution.
inline FilteredJoinTree propagate_top_down(FilteredJoinTree t)
{
   if(t.root_relation().empty()) {
      throw InputError("top-down propagation needs a nonempty root relation");
   }
   for(auto v : t.tree.preorder()) {
      for(auto c : t.tree.children(v)) {
         t.nodes[c].relation = semijoin(t.nodes[c].relation, t.nodes[v].relation);
      }
   }
   return t;
}

/// Both passes; the result has empty relations everywhere when no solution
/// exists.
inline std::pair< FilteredJoinTree, bool > make_consistent(FilteredJoinTree t)
{
   auto [filtered, exists] = filter_bottom_up(std::move(t));
   if(not exists) {
      for(auto& node : filtered.nodes) {
         node.relation = Relation(std::vector< PlayerIndex >(node.relation.scope().begin(), node.relation.scope().end()), {});
      }
      return {std::move(filtered), false};
   }
   return {propagate_top_down(std::move(filtered)), true};
}

namespace detail {

/// Per node: positions of players shared with the parent, and the node's
/// tuples grouped by their values there.
struct ConsistentIndex {
   std::vector< std::vector< std::size_t > > shared_positions;
   std::vector< std::vector< PlayerIndex > > shared_players;
   std::vector< std::unordered_map< Key, std::vector< std::size_t >, KeyHash > > groups;

   explicit ConsistentIndex(const FilteredJoinTree& t)
       : shared_positions(t.nodes.size()), shared_players(t.nodes.size()), groups(t.nodes.size())
   {
      for(NodeIndex v = 0; v < t.nodes.size(); ++v) {
         const auto& rel = t.nodes[v].relation;
         auto parent = t.tree.parent(v);
         if(parent != kNoNode) {
            const auto& prel = t.nodes[parent].relation;
            for(std::size_t i = 0; i < rel.arity(); ++i) {
               if(prel.has(rel.scope()[i])) {
                  shared_positions[v].push_back(i);
                  shared_players[v].push_back(rel.scope()[i]);
               }
            }
         }
         Key key;
         for(std::size_t r = 0; r < rel.size(); ++r) {
            extract_key(rel.row(r), shared_positions[v], key);
            groups[v][key].push_back(r);
         }
      }
   }

   const std::vector< std::size_t >* matching(NodeIndex v, std::span< const ActionIndex > assignment) const
   {
      Key key;
      for(auto p : shared_players[v]) {
         key.push_back(assignment[p]);
      }
      auto it = groups[v].find(key);
      return it == groups[v].end() ? nullptr : &it->second;
   }
};

}  // namespace detail

/// Backtrack-free enumeration over a consistent tree; stops after `limit`
/// profiles. The result is sorted.
inline EquilibriumSet enumerate_equilibria(
   const FilteredJoinTree& t, std::size_t limit = std::numeric_limits< std::size_t >::max())
{
   EquilibriumSet out;
   if(t.root_relation().empty()) {
      return out;
   }
   detail::ConsistentIndex index(t);
   const auto order = t.tree.preorder();
   std::vector< ActionIndex > assignment(t.player_count, kNoAction);
   std::function< void(std::size_t) > descend = [&](std::size_t depth) {
      if(out.profiles.size() >= limit) {
         return;
      }
      if(depth == order.size()) {
         out.profiles.emplace_back(assignment);
         return;
      }
      auto v = order[depth];
      const auto* rows = index.matching(v, assignment);
      if(rows == nullptr) {
         return;
      }
      const auto& rel = t.nodes[v].relation;
      std::vector< PlayerIndex > fresh;
      for(auto p : rel.scope()) {
         if(assignment[p] == kNoAction) {
            fresh.push_back(p);
         }
      }
      for(auto r : *rows) {
         auto row = rel.row(r);
         for(std::size_t i = 0; i < rel.arity(); ++i) {
            assignment[rel.scope()[i]] = row[i];
         }
         descend(depth + 1);
         for(auto p : fresh) {
            assignment[p] = kNoAction;
         }
      }
   };
   descend(0);
   out.canonicalize();
   return out;
}

/// Number of solutions of a consistent tree, by counting up the tree.
inline BigCount count_equilibria(const FilteredJoinTree& t)
{
   if(t.root_relation().empty()) {
      return 0;
   }
   detail::ConsistentIndex index(t);
   // weight[v][r]: completions of the subtree at v given tuple r at v
   std::vector< std::vector< BigCount > > weight(t.nodes.size());
   for(auto v : t.tree.postorder()) {
      const auto& rel = t.nodes[v].relation;
      weight[v].assign(rel.size(), 1);
      for(auto c : t.tree.children(v)) {
         std::unordered_map< detail::Key, BigCount, detail::KeyHash > sums;
         for(const auto& [key, rows] : index.groups[c]) {
            BigCount s = 0;
            for(auto r : rows) {
               s += weight[c][r];
            }
            sums.emplace(key, std::move(s));
         }
         std::vector< std::size_t > positions;
         for(auto p : index.shared_players[c]) {
            positions.push_back(rel.position(p));
         }
         detail::Key key;
         for(std::size_t r = 0; r < rel.size(); ++r) {
            detail::extract_key(rel.row(r), positions, key);
            auto it = sums.find(key);
            weight[v][r] *= it == sums.end() ? BigCount(0) : it->second;
         }
      }
   }
   BigCount total = 0;
   for(const auto& w : weight[t.tree.root()]) {
      total += w;
   }
   return total;
}

/// Lexicographically least solution (declared player order), fixing one
/// player at a time and re-checking existence bottom-up.
inline std::optional< Profile > first_equilibrium(FilteredJoinTree t)
{
   if(not filter_bottom_up(t).second) {
      return std::nullopt;
   }
   Profile x(t.player_count);
   for(PlayerIndex p = 0; p < t.player_count; ++p) {
      bool fixed = false;
      for(ActionIndex a = 0; not fixed and a < kNoAction; ++a) {
         auto trial = t;
         bool any_value = false;
         for(auto& node : trial.nodes) {
            auto i = node.relation.position(p);
            if(i == node.relation.arity()) {
               continue;
            }
            Relation pin({p}, {a});
            node.relation = semijoin(node.relation, pin);
            any_value = true;
         }
         if(not any_value) {
            throw InputError("solution tree does not mention every player");
         }
         auto [filtered, exists] = filter_bottom_up(std::move(trial));
         if(exists) {
            t = std::move(filtered);
            x.set(p, a);
            fixed = true;
         }
      }
   }
   return x;
}

/// Figure-11 style selection: at each node in preorder, among the tuples
/// consistent with the choices above pick one maximizing the designated
/// player's utility (earliest tuple on ties). The root's maximum is global
/// over all equilibria, so no equilibrium can dominate the result.
inline std::optional< Profile > select_pareto_equilibrium(const GnfGame& game, const FilteredJoinTree& t)
{
   if(t.root_relation().empty()) {
      return std::nullopt;
   }
   detail::ConsistentIndex index(t);
   std::vector< ActionIndex > assignment(t.player_count, kNoAction);
   std::vector< ActionIndex > trial(t.player_count, 0);
   for(auto v : t.tree.preorder()) {
      const auto& node = t.nodes[v];
      const auto* rows = index.matching(v, assignment);
      if(rows == nullptr or rows->empty()) {
         throw InputError("Pareto selection needs a consistent tree");
      }
      std::size_t best = (*rows)[0];
      if(node.designated != kNoPlayer) {
         std::optional< Payoff > best_value;
         for(auto r : *rows) {
            auto row = node.relation.row(r);
            for(std::size_t i = 0; i < node.relation.arity(); ++i) {
               trial[node.relation.scope()[i]] = row[i];
            }
            auto value = game.utility(node.designated, trial);
            if(not best_value or *best_value < value) {
               best_value = value;
               best = r;
            }
         }
      }
      auto row = node.relation.row(best);
      for(std::size_t i = 0; i < node.relation.arity(); ++i) {
         assignment[node.relation.scope()[i]] = row[i];
         trial[node.relation.scope()[i]] = row[i];
      }
   }
   return Profile(assignment);
}

/// Theorem-5.3 style instance: node v gets π_χ(v)(⋈ {NC(p) : p ∈ λ(v)}).
/// Every player's constraint is owned by a node that strongly covers her
/// edge, or else by the first node whose χ covers it, where it is enforced by
/// a semijoin. The designated player of a node is its owner with the least
/// name. The tree is rooted at the node owning `root_player`.
inline FilteredJoinTree solve_with_hd(
   const GnfGame& game, const HypertreeDecomposition& hd, std::optional< PlayerIndex > root_player = std::nullopt)
{
   auto h = dependency_hypergraph(game);
   validate_hypertree_decomposition(h, hd, game.roster().player_names());
   const auto k = hd.tree.size();
   std::vector< Relation > constraints;
   for(PlayerIndex p = 0; p < game.player_count(); ++p) {
      constraints.push_back(nash_constraint(game, p));
   }
   FilteredJoinTree t;
   t.tree = hd.tree;
   t.player_count = game.player_count();
   t.nodes.resize(k);
   for(NodeIndex v = 0; v < k; ++v) {
      Relation joined = Relation::unit();
      for(auto p : hd.lambda[v]) {
         joined = join(joined, constraints[p]);
      }
      t.nodes[v].relation = project(joined, hd.chi[v]);
   }
   std::vector< NodeIndex > home(game.player_count(), kNoNode);
   for(PlayerIndex p = 0; p < game.player_count(); ++p) {
      for(NodeIndex v = 0; v < k and home[p] == kNoNode; ++v) {
         if(strongly_covers(h, hd, v, p)) {
            home[p] = v;
         }
      }
      if(home[p] == kNoNode) {
         for(NodeIndex v = 0; v < k and home[p] == kNoNode; ++v) {
            if(detail::sorted_subset(h.edge(p), hd.chi[v])) {
               home[p] = v;
            }
         }
         t.nodes[home[p]].relation = semijoin(t.nodes[home[p]].relation, constraints[p]);
      }
      auto& node = t.nodes[home[p]];
      node.owners.push_back(p);
      if(node.designated == kNoPlayer or game.player_name(p) < game.player_name(node.designated)) {
         node.designated = p;
      }
   }
   auto root = root_player.value_or(default_root_player(game));
   if(root >= game.player_count()) {
      throw InputError("unknown root player");
   }
   t.tree = t.tree.rerooted(home[root]);
   return t;
}

/// Acyclic pipeline with the join tree hung from `root_player`'s node.
inline FilteredJoinTree solve_acyclic(
   const GnfGame& game, const JoinTree& jt, std::optional< PlayerIndex > root_player = std::nullopt)
{
   auto root = root_player.value_or(default_root_player(game));
   if(root >= game.player_count()) {
      throw InputError("unknown root player");
   }
   return attach_relations(game, jt.rerooted_at_player(root));
}

/// Pairwise domination filter: members of `ne` not strictly beaten by
/// another member on every player.
template < typename Game >
EquilibriumSet pareto_filter(const Game& game, const EquilibriumSet& ne)
{
   EquilibriumSet out{EquilibriumKind::pareto, {}};
   const auto n = game.player_count();
   std::vector< std::vector< Payoff > > values;
   for(const auto& x : ne.profiles) {
      auto& row = values.emplace_back();
      for(PlayerIndex p = 0; p < n; ++p) {
         row.push_back(game.utility(p, x.actions()));
      }
   }
   for(std::size_t i = 0; i < ne.profiles.size(); ++i) {
      bool dominated = false;
      for(std::size_t j = 0; j < ne.profiles.size() and not dominated; ++j) {
         if(i == j) {
            continue;
         }
         bool all_better = true;
         for(PlayerIndex p = 0; p < n and all_better; ++p) {
            all_better = values[i][p] < values[j][p];
         }
         dominated = all_better;
      }
      if(not dominated) {
         out.profiles.push_back(ne.profiles[i]);
      }
   }
   return out;
}

}  // namespace nashcsp
