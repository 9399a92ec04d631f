#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nashcsp/error.hpp"
#include "nashcsp/payoff.hpp"

namespace nashcsp {

using PlayerIndex = std::uint32_t;
using ActionIndex = std::uint16_t;

inline constexpr ActionIndex kNoAction = 0xFFFF;

/// Assignment of actions to a subset of the players (the scope). Indexed by
/// player; unassigned players hold kNoAction. A profile is global when every
/// player is assigned.
class Profile {
public:
   Profile() = default;
   explicit Profile(std::size_t player_count) : actions_(player_count, kNoAction) {}
   explicit Profile(std::vector< ActionIndex > actions) : actions_(std::move(actions)) {}

   std::size_t player_count() const { return actions_.size(); }
   bool assigned(PlayerIndex p) const { return actions_[p] != kNoAction; }
   ActionIndex operator[](PlayerIndex p) const { return actions_[p]; }
   void set(PlayerIndex p, ActionIndex a) { actions_[p] = a; }
   void unset(PlayerIndex p) { actions_[p] = kNoAction; }

   std::span< const ActionIndex > actions() const { return actions_; }

   std::vector< PlayerIndex > scope() const
   {
      std::vector< PlayerIndex > out;
      for(PlayerIndex p = 0; p < actions_.size(); ++p) {
         if(assigned(p)) {
            out.push_back(p);
         }
      }
      return out;
   }

   bool is_global() const
   {
      return std::none_of(actions_.begin(), actions_.end(), [](ActionIndex a) { return a == kNoAction; });
   }

   /// Restriction to the given players.
   Profile restricted(std::span< const PlayerIndex > players) const
   {
      Profile out(actions_.size());
      for(auto p : players) {
         out.actions_[p] = actions_[p];
      }
      return out;
   }

   auto operator<=>(const Profile&) const = default;
   bool operator==(const Profile&) const = default;

private:
   std::vector< ActionIndex > actions_;
};

/// x with the players in scope(y) replaced by y's choices (x_{-K}[y] with
/// K = scope(y)).
inline Profile override_with(const Profile& x, const Profile& y)
{
   if(x.player_count() != y.player_count()) {
      throw InputError("override: profiles belong to different player sets");
   }
   Profile out = x;
   for(PlayerIndex p = 0; p < y.player_count(); ++p) {
      if(y.assigned(p)) {
         if(not x.assigned(p)) {
            throw InputError("override: scope of the deviation is not contained in the base profile");
         }
         out.set(p, y[p]);
      }
   }
   return out;
}

/// Players and their declared action lists, with name lookup.
class Roster {
public:
   Roster() = default;
   Roster(std::vector< std::string > players, std::vector< std::vector< std::string > > actions)
       : players_(std::move(players)), actions_(std::move(actions))
   {
      for(PlayerIndex p = 0; p < players_.size(); ++p) {
         player_lookup_.emplace(players_[p], p);
         auto& lookup = action_lookup_.emplace_back();
         for(ActionIndex a = 0; a < actions_[p].size(); ++a) {
            lookup.emplace(actions_[p][a], a);
         }
      }
   }

   std::size_t player_count() const { return players_.size(); }
   std::size_t action_count(PlayerIndex p) const { return actions_[p].size(); }
   const std::string& player_name(PlayerIndex p) const { return players_[p]; }
   const std::string& action_name(PlayerIndex p, ActionIndex a) const { return actions_[p][a]; }
   const std::vector< std::string >& player_names() const { return players_; }
   const std::vector< std::string >& action_names(PlayerIndex p) const { return actions_[p]; }

   std::optional< PlayerIndex > find_player(const std::string& name) const
   {
      auto it = player_lookup_.find(name);
      return it == player_lookup_.end() ? std::nullopt : std::optional(it->second);
   }
   PlayerIndex player(const std::string& name) const
   {
      if(auto p = find_player(name)) {
         return *p;
      }
      throw InputError("unknown player '" + name + "'");
   }
   std::optional< ActionIndex > find_action(PlayerIndex p, const std::string& name) const
   {
      auto it = action_lookup_[p].find(name);
      return it == action_lookup_[p].end() ? std::nullopt : std::optional(it->second);
   }
   ActionIndex action(PlayerIndex p, const std::string& name) const
   {
      if(auto a = find_action(p, name)) {
         return *a;
      }
      throw InputError("unknown action '" + name + "' for player '" + players_[p] + "'");
   }

   /// Number of global profiles, saturating at UINT64_MAX.
   std::uint64_t profile_count() const
   {
      std::uint64_t total = 1;
      for(const auto& acts : actions_) {
         if(total > UINT64_MAX / acts.size()) {
            return UINT64_MAX;
         }
         total *= acts.size();
      }
      return total;
   }

   friend bool operator==(const Roster& a, const Roster& b)
   {
      return a.players_ == b.players_ and a.actions_ == b.actions_;
   }

private:
   std::vector< std::string > players_;
   std::vector< std::vector< std::string > > actions_;
   std::unordered_map< std::string, PlayerIndex > player_lookup_;
   std::vector< std::unordered_map< std::string, ActionIndex > > action_lookup_;
};

/// Mixed-radix index of a tuple; the last position varies fastest, so index
/// order equals lexicographic tuple order.
inline std::vector< std::size_t > strides_for(std::span< const std::size_t > radices)
{
   std::vector< std::size_t > strides(radices.size(), 1);
   for(std::size_t i = radices.size(); i-- > 1;) {
      strides[i - 1] = strides[i] * radices[i];
   }
   return strides;
}

// ---------------------------------------------------------------------------
// Textual game descriptions (what a game file holds before validation)
// ---------------------------------------------------------------------------

using Assignment = std::map< std::string, std::string >;

struct TableEntry {
   Assignment when;
   Payoff payoff;
};

struct GnfDescription {
   std::vector< std::string > players;
   std::map< std::string, std::vector< std::string > > actions;
   std::map< std::string, std::vector< std::string > > neighbors;
   std::map< std::string, std::vector< TableEntry > > utilities;
};

struct SnfCell {
   Assignment when;
   std::map< std::string, Payoff > payoffs;
};

struct SnfDescription {
   std::vector< std::string > players;
   std::map< std::string, std::vector< std::string > > actions;
   std::vector< SnfCell > cells;
};

namespace detail {

inline Roster validate_roster(
   const std::vector< std::string >& players,
   const std::map< std::string, std::vector< std::string > >& actions)
{
   if(players.empty()) {
      throw ValidationError("game has no players");
   }
   std::set< std::string > seen;
   for(const auto& p : players) {
      if(p.empty()) {
         throw ValidationError("empty player name");
      }
      if(not seen.insert(p).second) {
         throw ValidationError("duplicate player '" + p + "'");
      }
   }
   for(const auto& [name, _] : actions) {
      if(not seen.contains(name)) {
         throw ValidationError("actions given for unknown player '" + name + "'");
      }
   }
   std::vector< std::vector< std::string > > action_lists;
   for(const auto& p : players) {
      auto it = actions.find(p);
      if(it == actions.end() or it->second.empty()) {
         throw ValidationError("player '" + p + "' has no actions");
      }
      std::set< std::string > distinct;
      for(const auto& a : it->second) {
         if(a.empty()) {
            throw ValidationError("empty action name for player '" + p + "'");
         }
         if(not distinct.insert(a).second) {
            throw ValidationError("duplicate action '" + a + "' for player '" + p + "'");
         }
      }
      if(it->second.size() >= kNoAction) {
         throw ValidationError("too many actions for player '" + p + "'");
      }
      action_lists.push_back(it->second);
   }
   return Roster(players, std::move(action_lists));
}

/// Resolves a "when" assignment over exactly `scope`; returns the tuple in
/// scope order.
inline std::vector< ActionIndex > resolve_assignment(
   const Roster& roster,
   std::span< const PlayerIndex > scope,
   const Assignment& when,
   const std::string& context)
{
   if(when.size() != scope.size()) {
      throw ValidationError(context + ": entry must assign exactly the players of its scope");
   }
   std::vector< ActionIndex > tuple;
   for(auto q : scope) {
      auto it = when.find(roster.player_name(q));
      if(it == when.end()) {
         throw ValidationError(context + ": entry does not assign player '" + roster.player_name(q) + "'");
      }
      auto a = roster.find_action(q, it->second);
      if(not a) {
         throw ValidationError(
            context + ": unknown action '" + it->second + "' for player '" + roster.player_name(q) + "'");
      }
      tuple.push_back(*a);
   }
   return tuple;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graphical normal form
// ---------------------------------------------------------------------------

/// Game in graphical normal form: one utility table per player over the
/// player and her neighbors. Immutable once built; the constructors enforce
/// every invariant.
class GnfGame {
public:
   /// Utility of player p for a tuple ordered as scope(p).
   using UtilityFunction = std::function< Payoff(PlayerIndex, std::span< const ActionIndex >) >;

   GnfGame() = default;

   /// Materializes the tables of a programmatically described game.
   /// Neighborhoods may be given in any order; they are stored in declared
   /// player order.
   static GnfGame tabulate(
      std::vector< std::string > players,
      std::vector< std::vector< std::string > > actions,
      std::vector< std::vector< PlayerIndex > > neighbors,
      const UtilityFunction& utility)
   {
      std::map< std::string, std::vector< std::string > > action_map;
      for(std::size_t p = 0; p < players.size() and p < actions.size(); ++p) {
         action_map[players[p]] = actions[p];
      }
      if(actions.size() != players.size() or neighbors.size() != players.size()) {
         throw ValidationError("tabulate: per-player vectors disagree with the player list");
      }
      GnfGame g;
      g.roster_ = detail::validate_roster(players, action_map);
      for(PlayerIndex p = 0; p < players.size(); ++p) {
         auto n = neighbors[p];
         std::sort(n.begin(), n.end());
         if(std::adjacent_find(n.begin(), n.end()) != n.end()) {
            throw ValidationError("duplicate neighbor of player '" + players[p] + "'");
         }
         for(auto q : n) {
            if(q >= players.size()) {
               throw ValidationError("neighbor index out of range for player '" + players[p] + "'");
            }
            if(q == p) {
               throw ValidationError("self-neighbor: player '" + players[p] + "' lists itself as a neighbor");
            }
         }
         g.neighbors_.push_back(std::move(n));
      }
      g.build_layout();
      for(PlayerIndex p = 0; p < players.size(); ++p) {
         auto& table = g.tables_[p];
         std::vector< ActionIndex > tuple(g.scopes_[p].size(), 0);
         for(std::size_t i = 0; i < table.size(); ++i) {
            g.decode(p, i, tuple);
            table[i] = utility(p, tuple);
         }
      }
      return g;
   }

   static GnfGame from_description(const GnfDescription& desc);

   const Roster& roster() const { return roster_; }
   std::size_t player_count() const { return roster_.player_count(); }
   std::size_t action_count(PlayerIndex p) const { return roster_.action_count(p); }
   const std::string& player_name(PlayerIndex p) const { return roster_.player_name(p); }
   const std::string& action_name(PlayerIndex p, ActionIndex a) const { return roster_.action_name(p, a); }

   std::span< const PlayerIndex > neighbors(PlayerIndex p) const { return neighbors_[p]; }
   /// p followed by her neighbors in declared order; the characteristic edge.
   std::span< const PlayerIndex > scope(PlayerIndex p) const { return scopes_[p]; }

   std::size_t table_size(PlayerIndex p) const { return tables_[p].size(); }
   std::span< const Payoff > table(PlayerIndex p) const { return tables_[p]; }
   std::span< const std::size_t > strides(PlayerIndex p) const { return strides_[p]; }

   /// Table index of a tuple ordered as scope(p).
   std::size_t table_index(PlayerIndex p, std::span< const ActionIndex > tuple) const
   {
      std::size_t index = 0;
      for(std::size_t k = 0; k < tuple.size(); ++k) {
         index += tuple[k] * strides_[p][k];
      }
      return index;
   }

   void decode(PlayerIndex p, std::size_t index, std::span< ActionIndex > tuple) const
   {
      const auto& scope = scopes_[p];
      for(std::size_t k = 0; k < scope.size(); ++k) {
         tuple[k] = static_cast< ActionIndex >(index / strides_[p][k]);
         index %= strides_[p][k];
      }
   }

   /// u_p evaluated on the projection of an assignment that covers scope(p).
   const Payoff& utility(PlayerIndex p, std::span< const ActionIndex > assignment) const
   {
      std::size_t index = 0;
      const auto& scope = scopes_[p];
      for(std::size_t k = 0; k < scope.size(); ++k) {
         index += assignment[scope[k]] * strides_[p][k];
      }
      return tables_[p][index];
   }

   /// Same as utility() but with p's own action replaced.
   const Payoff& utility_if(PlayerIndex p, ActionIndex own, std::span< const ActionIndex > assignment) const
   {
      std::size_t index = own * strides_[p][0];
      const auto& scope = scopes_[p];
      for(std::size_t k = 1; k < scope.size(); ++k) {
         index += assignment[scope[k]] * strides_[p][k];
      }
      return tables_[p][index];
   }

   friend bool operator==(const GnfGame& a, const GnfGame& b)
   {
      return a.roster_ == b.roster_ and a.neighbors_ == b.neighbors_ and a.tables_ == b.tables_;
   }

private:
   void build_layout()
   {
      scopes_.clear();
      strides_.clear();
      tables_.clear();
      for(PlayerIndex p = 0; p < roster_.player_count(); ++p) {
         std::vector< PlayerIndex > scope{p};
         scope.insert(scope.end(), neighbors_[p].begin(), neighbors_[p].end());
         std::vector< std::size_t > radices;
         std::size_t size = 1;
         for(auto q : scope) {
            radices.push_back(roster_.action_count(q));
            if(size > (std::size_t(1) << 40) / radices.back()) {
               throw ValidationError("utility table of player '" + roster_.player_name(p) + "' is too large");
            }
            size *= radices.back();
         }
         strides_.push_back(strides_for(radices));
         scopes_.push_back(std::move(scope));
         tables_.emplace_back(size);
      }
   }

   Roster roster_;
   std::vector< std::vector< PlayerIndex > > neighbors_;
   std::vector< std::vector< PlayerIndex > > scopes_;
   std::vector< std::vector< std::size_t > > strides_;
   std::vector< std::vector< Payoff > > tables_;
};

// ---------------------------------------------------------------------------
// Standard normal form
// ---------------------------------------------------------------------------

/// Game in standard normal form: one cell per global profile carrying every
/// player's payoff.
class SnfGame {
public:
   SnfGame() = default;

   /// Builds the full matrix from a payoff function over global profiles.
   static SnfGame tabulate(
      std::vector< std::string > players,
      std::vector< std::vector< std::string > > actions,
      const std::function< Payoff(PlayerIndex, std::span< const ActionIndex >) >& utility)
   {
      std::map< std::string, std::vector< std::string > > action_map;
      for(std::size_t p = 0; p < players.size() and p < actions.size(); ++p) {
         action_map[players[p]] = actions[p];
      }
      SnfGame g;
      g.roster_ = detail::validate_roster(players, action_map);
      g.build_layout();
      std::vector< ActionIndex > profile(g.player_count(), 0);
      for(std::size_t cell = 0; cell < g.cell_count(); ++cell) {
         g.decode(cell, profile);
         for(PlayerIndex p = 0; p < g.player_count(); ++p) {
            g.payoffs_[cell * g.player_count() + p] = utility(p, profile);
         }
      }
      return g;
   }

   static SnfGame from_description(const SnfDescription& desc);

   const Roster& roster() const { return roster_; }
   std::size_t player_count() const { return roster_.player_count(); }
   std::size_t action_count(PlayerIndex p) const { return roster_.action_count(p); }
   const std::string& player_name(PlayerIndex p) const { return roster_.player_name(p); }
   const std::string& action_name(PlayerIndex p, ActionIndex a) const { return roster_.action_name(p, a); }

   /// Every other player: an SNF payoff may depend on the whole profile.
   std::span< const PlayerIndex > neighbors(PlayerIndex p) const { return neighbors_[p]; }

   std::size_t cell_count() const { return cell_count_; }

   std::size_t cell_index(std::span< const ActionIndex > profile) const
   {
      std::size_t index = 0;
      for(std::size_t k = 0; k < profile.size(); ++k) {
         index += profile[k] * strides_[k];
      }
      return index;
   }

   void decode(std::size_t index, std::span< ActionIndex > profile) const
   {
      for(std::size_t k = 0; k < strides_.size(); ++k) {
         profile[k] = static_cast< ActionIndex >(index / strides_[k]);
         index %= strides_[k];
      }
   }

   const Payoff& utility(PlayerIndex p, std::span< const ActionIndex > profile) const
   {
      return payoffs_[cell_index(profile) * player_count() + p];
   }

   const Payoff& utility_if(PlayerIndex p, ActionIndex own, std::span< const ActionIndex > profile) const
   {
      std::size_t index = cell_index(profile);
      index = index - profile[p] * strides_[p] + own * strides_[p];
      return payoffs_[index * player_count() + p];
   }

   friend bool operator==(const SnfGame& a, const SnfGame& b)
   {
      return a.roster_ == b.roster_ and a.payoffs_ == b.payoffs_;
   }

private:
   void build_layout()
   {
      std::vector< std::size_t > radices;
      cell_count_ = 1;
      for(PlayerIndex p = 0; p < roster_.player_count(); ++p) {
         radices.push_back(roster_.action_count(p));
         if(cell_count_ > (std::size_t(1) << 32) / radices.back()) {
            throw ValidationError("standard-form matrix is too large");
         }
         cell_count_ *= radices.back();
         auto& n = neighbors_.emplace_back();
         for(PlayerIndex q = 0; q < roster_.player_count(); ++q) {
            if(q != p) {
               n.push_back(q);
            }
         }
      }
      strides_ = strides_for(radices);
      payoffs_.assign(cell_count_ * roster_.player_count(), Payoff{});
   }

   Roster roster_;
   std::vector< std::vector< PlayerIndex > > neighbors_;
   std::vector< std::size_t > strides_;
   std::size_t cell_count_ = 0;
   std::vector< Payoff > payoffs_;
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

/// Throws ValidationError naming the first violated invariant.
inline void validate_game(const GnfDescription& desc)
{
   auto roster = detail::validate_roster(desc.players, desc.actions);
   for(const auto& [name, _] : desc.neighbors) {
      if(not roster.find_player(name)) {
         throw ValidationError("neighbors given for unknown player '" + name + "'");
      }
   }
   for(const auto& [name, _] : desc.utilities) {
      if(not roster.find_player(name)) {
         throw ValidationError("utility table given for unknown player '" + name + "'");
      }
   }
   for(PlayerIndex p = 0; p < roster.player_count(); ++p) {
      const auto& pname = roster.player_name(p);
      std::vector< PlayerIndex > scope{p};
      std::vector< std::size_t > radices{roster.action_count(p)};
      if(auto it = desc.neighbors.find(pname); it != desc.neighbors.end()) {
         std::set< PlayerIndex > seen;
         for(const auto& qname : it->second) {
            auto q = roster.find_player(qname);
            if(not q) {
               throw ValidationError("player '" + pname + "' has unknown neighbor '" + qname + "'");
            }
            if(*q == p) {
               throw ValidationError("self-neighbor: player '" + pname + "' lists itself as a neighbor");
            }
            if(not seen.insert(*q).second) {
               throw ValidationError("player '" + pname + "' lists neighbor '" + qname + "' twice");
            }
         }
         for(auto q : seen) {
            scope.push_back(q);
            radices.push_back(roster.action_count(q));
         }
      }
      auto strides = strides_for(radices);
      std::size_t size = strides.front() * radices.front();
      auto it = desc.utilities.find(pname);
      if(it == desc.utilities.end()) {
         throw ValidationError("incomplete table: no utility table for player '" + pname + "'");
      }
      std::vector< bool > filled(size, false);
      for(const auto& entry : it->second) {
         auto tuple = detail::resolve_assignment(roster, scope, entry.when, "utility table of '" + pname + "'");
         std::size_t index = 0;
         for(std::size_t k = 0; k < tuple.size(); ++k) {
            index += tuple[k] * strides[k];
         }
         if(filled[index]) {
            throw ValidationError("duplicate entry in the utility table of player '" + pname + "'");
         }
         filled[index] = true;
      }
      if(it->second.size() != size) {
         throw ValidationError(
            "incomplete table: utility table of player '" + pname + "' has " + std::to_string(it->second.size())
            + " of " + std::to_string(size) + " entries");
      }
   }
}

inline void validate_game(const SnfDescription& desc)
{
   auto roster = detail::validate_roster(desc.players, desc.actions);
   std::vector< PlayerIndex > scope(roster.player_count());
   std::vector< std::size_t > radices;
   for(PlayerIndex p = 0; p < roster.player_count(); ++p) {
      scope[p] = p;
      radices.push_back(roster.action_count(p));
   }
   auto strides = strides_for(radices);
   auto total = roster.profile_count();
   if(total > (std::uint64_t(1) << 32)) {
      throw ValidationError("standard-form matrix is too large");
   }
   std::vector< bool > filled(total, false);
   for(const auto& cell : desc.cells) {
      auto tuple = detail::resolve_assignment(roster, scope, cell.when, "cell");
      std::size_t index = 0;
      for(std::size_t k = 0; k < tuple.size(); ++k) {
         index += tuple[k] * strides[k];
      }
      if(filled[index]) {
         throw ValidationError("duplicate entry: cell listed twice");
      }
      filled[index] = true;
      if(cell.payoffs.size() != roster.player_count()) {
         throw ValidationError("cell must carry one payoff per player");
      }
      for(const auto& [name, _] : cell.payoffs) {
         if(not roster.find_player(name)) {
            throw ValidationError("cell carries a payoff for unknown player '" + name + "'");
         }
      }
   }
   if(desc.cells.size() != total) {
      throw ValidationError(
         "incomplete table: " + std::to_string(desc.cells.size()) + " of " + std::to_string(total) + " cells");
   }
}

inline GnfGame GnfGame::from_description(const GnfDescription& desc)
{
   validate_game(desc);
   GnfGame g;
   std::vector< std::vector< std::string > > action_lists;
   for(const auto& p : desc.players) {
      action_lists.push_back(desc.actions.at(p));
   }
   g.roster_ = Roster(desc.players, std::move(action_lists));
   for(PlayerIndex p = 0; p < g.player_count(); ++p) {
      std::vector< PlayerIndex > n;
      if(auto it = desc.neighbors.find(desc.players[p]); it != desc.neighbors.end()) {
         for(const auto& q : it->second) {
            n.push_back(g.roster_.player(q));
         }
      }
      std::sort(n.begin(), n.end());
      g.neighbors_.push_back(std::move(n));
   }
   g.build_layout();
   for(PlayerIndex p = 0; p < g.player_count(); ++p) {
      for(const auto& entry : desc.utilities.at(desc.players[p])) {
         auto tuple = detail::resolve_assignment(g.roster_, g.scopes_[p], entry.when, "");
         g.tables_[p][g.table_index(p, tuple)] = entry.payoff;
      }
   }
   return g;
}

inline SnfGame SnfGame::from_description(const SnfDescription& desc)
{
   validate_game(desc);
   SnfGame g;
   std::vector< std::vector< std::string > > action_lists;
   for(const auto& p : desc.players) {
      action_lists.push_back(desc.actions.at(p));
   }
   g.roster_ = Roster(desc.players, std::move(action_lists));
   g.build_layout();
   std::vector< PlayerIndex > scope(g.player_count());
   for(PlayerIndex p = 0; p < g.player_count(); ++p) {
      scope[p] = p;
   }
   for(const auto& cell : desc.cells) {
      auto tuple = detail::resolve_assignment(g.roster_, scope, cell.when, "cell");
      auto index = g.cell_index(tuple);
      for(PlayerIndex p = 0; p < g.player_count(); ++p) {
         g.payoffs_[index * g.player_count() + p] = cell.payoffs.at(g.player_name(p));
      }
   }
   return g;
}

// ---------------------------------------------------------------------------
// Payoff lookup on partial profiles
// ---------------------------------------------------------------------------

/// u_p(x): the table entry for the projection of x onto p's characteristic
/// edge. x must assign every player of that edge.
inline Payoff utility_of(const GnfGame& game, PlayerIndex p, const Profile& x)
{
   if(p >= game.player_count()) {
      throw InputError("utility_of: unknown player");
   }
   if(x.player_count() != game.player_count()) {
      throw InputError("utility_of: profile does not belong to this game");
   }
   for(auto q : game.scope(p)) {
      if(not x.assigned(q)) {
         throw InputError(
            "utility_of: profile does not assign '" + game.player_name(q) + "', needed by '" + game.player_name(p)
            + "'");
      }
   }
   return game.utility(p, x.actions());
}

inline Payoff utility_of(const SnfGame& game, PlayerIndex p, const Profile& x)
{
   if(p >= game.player_count()) {
      throw InputError("utility_of: unknown player");
   }
   if(x.player_count() != game.player_count() or not x.is_global()) {
      throw InputError("utility_of: standard-form payoffs need a global profile");
   }
   return game.utility(p, x.actions());
}

/// Builds a profile from player/action names.
template < typename Game >
Profile profile_from_names(const Game& game, const Assignment& names)
{
   Profile x(game.player_count());
   for(const auto& [pname, aname] : names) {
      auto p = game.roster().player(pname);
      x.set(p, game.roster().action(p, aname));
   }
   return x;
}

}  // namespace nashcsp
