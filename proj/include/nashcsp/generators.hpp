#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nashcsp/error.hpp"
#include "nashcsp/formula.hpp"
#include "nashcsp/game.hpp"

namespace nashcsp {

namespace detail {

/// Game under construction with utilities given on scattered global vectors:
/// x[q] is meaningful for q in {p} ∪ Neigh(p), kNoAction elsewhere.
struct GameSketch {
   std::vector< std::string > players;
   std::vector< std::vector< std::string > > actions;
   std::vector< std::vector< PlayerIndex > > neighbors;

   PlayerIndex add(std::string name, std::vector< std::string > acts)
   {
      players.push_back(std::move(name));
      actions.push_back(std::move(acts));
      neighbors.emplace_back();
      return static_cast< PlayerIndex >(players.size() - 1);
   }

   void link(PlayerIndex p, PlayerIndex q)
   {
      if(p != q and std::find(neighbors[p].begin(), neighbors[p].end(), q) == neighbors[p].end()) {
         neighbors[p].push_back(q);
      }
   }

   ActionIndex action(PlayerIndex p, std::string_view name) const
   {
      auto it = std::find(actions[p].begin(), actions[p].end(), name);
      return static_cast< ActionIndex >(it - actions[p].begin());
   }

   GnfGame build(const std::function< std::int64_t(PlayerIndex, const std::vector< ActionIndex >&) >& utility) const
   {
      std::set< std::string > names(players.begin(), players.end());
      if(names.size() != players.size()) {
         throw InputError("generated player names collide; rename the formula variables");
      }
      std::vector< ActionIndex > x(players.size(), kNoAction);
      std::vector< std::vector< PlayerIndex > > sorted = neighbors;
      for(auto& n : sorted) {
         std::sort(n.begin(), n.end());
      }
      return GnfGame::tabulate(players, actions, neighbors, [&](PlayerIndex p, std::span< const ActionIndex > tuple) {
         x[p] = tuple[0];
         for(std::size_t k = 0; k < sorted[p].size(); ++k) {
            x[sorted[p][k]] = tuple[k + 1];
         }
         return Payoff(utility(p, x));
      });
   }
};

inline std::string literal_name(const std::vector< std::string >& variables, Literal l)
{
   return (l.positive ? "" : "!") + variables[l.variable];
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FRIENDS
// ---------------------------------------------------------------------------

enum class FriendsVariant { base, prime };

/// The evening-planning game: G, P, F, R, M choose movie (m) or opera (o).
/// The prime variant adds L, who depends on G, P and M.
inline GnfGame gen_friends(FriendsVariant variant = FriendsVariant::base)
{
   detail::GameSketch s;
   const std::vector< std::string > mo{"m", "o"};
   auto g = s.add("G", mo);
   auto p = s.add("P", mo);
   auto f = s.add("F", mo);
   auto r = s.add("R", mo);
   auto m = s.add("M", mo);
   s.link(g, p);
   s.link(g, f);
   s.link(p, f);
   s.link(f, p);
   s.link(f, r);
   s.link(r, f);
   s.link(m, r);
   if(variant == FriendsVariant::prime) {
      auto l = s.add("L", mo);
      s.link(l, g);
      s.link(l, p);
      s.link(l, m);
   }
   constexpr ActionIndex M = 0;
   constexpr ActionIndex O = 1;
   return s.build([=](PlayerIndex who, const std::vector< ActionIndex >& x) -> std::int64_t {
      if(who == g) {
         // matchmaker: F and P together, best at the movies
         if(x[p] == M and x[f] == M) {
            return 2;
         }
         return x[p] == O and x[f] == O ? 1 : 0;
      }
      if(who == p) {
         if(x[p] != x[f]) {
            return 0;
         }
         return x[p] == M ? 2 : 1;
      }
      if(who == f) {
         static constexpr std::int64_t table[2][2][2] = {{{2, 2}, {1, 0}}, {{0, 2}, {1, 2}}};
         return table[x[f]][x[p]][x[r]];
      }
      if(who == r) {
         if(x[r] == x[f]) {
            return 0;
         }
         return x[r] == O ? 2 : 1;
      }
      if(who == m) {
         if(x[m] != x[r]) {
            return 0;
         }
         return x[m] == O ? 2 : 1;
      }
      // L (prime variant only)
      if(x[who] == M) {
         return x[g] == M ? 2 : 0;
      }
      return (x[p] == O ? 1 : 0) + (x[m] == O ? 1 : 0);
   });
}

// ---------------------------------------------------------------------------
// SAT constructions
// ---------------------------------------------------------------------------

/// Variable players and clause players with actions t, f, u. Nash equilibria
/// correspond one-to-one to satisfying assignments.
inline GnfGame gen_sat_clausevar(const Cnf& phi)
{
   phi.validate();
   if(phi.variables.empty() or phi.clauses.empty()) {
      throw InputError("the clause/variable construction needs at least one variable and one clause");
   }
   for(const auto& clause : phi.clauses) {
      if(clause.empty()) {
         throw InputError("the clause/variable construction does not accept empty clauses");
      }
   }
   detail::GameSketch s;
   const std::vector< std::string > tfu{"t", "f", "u"};
   for(const auto& v : phi.variables) {
      s.add(v, tfu);
   }
   std::vector< PlayerIndex > clause_player;
   for(std::size_t j = 0; j < phi.clauses.size(); ++j) {
      auto c = s.add("c" + std::to_string(j + 1), tfu);
      clause_player.push_back(c);
      for(auto l : phi.clauses[j]) {
         auto v = static_cast< PlayerIndex >(l.variable);
         s.link(c, v);
         s.link(v, c);
      }
   }
   const auto nvars = static_cast< PlayerIndex >(phi.variables.size());
   constexpr ActionIndex t = 0, f = 1, u = 2;
   return s.build([&, nvars](PlayerIndex p, const std::vector< ActionIndex >& x) -> std::int64_t {
      const auto& neigh = s.neighbors[p];
      bool all_tf = std::all_of(neigh.begin(), neigh.end(), [&](PlayerIndex q) { return x[q] != u; });
      if(p >= nvars) {
         const auto& clause = phi.clauses[p - nvars];
         bool satisfied = std::any_of(clause.begin(), clause.end(), [&](Literal l) { return (x[l.variable] == t) == l.positive; });
         if(x[p] == t and all_tf and satisfied) {
            return 3;
         }
         if(x[p] == u and all_tf and not satisfied) {
            return 2;
         }
         if(x[p] == f and not all_tf) {
            return 2;
         }
         return 1;
      }
      if(x[p] != u and all_tf) {
         return 3;
      }
      bool clause_u = std::any_of(neigh.begin(), neigh.end(), [&](PlayerIndex q) { return x[q] == u; });
      if(x[p] == u and clause_u) {
         return 2;
      }
      return 1;
   });
}

/// Variable players with constant payoff, a tester T (s/u) watching all of
/// them plus a helper H (g/b) that only watches T. Dependency graph is a star.
inline GnfGame gen_sat_acyclic(const Cnf& phi)
{
   phi.validate();
   if(phi.variables.empty()) {
      throw InputError("the tester construction needs at least one variable");
   }
   detail::GameSketch s;
   for(const auto& v : phi.variables) {
      s.add(v, {"t", "f"});
   }
   auto tester = s.add("T", {"s", "u"});
   auto helper = s.add("H", {"g", "b"});
   for(PlayerIndex v = 0; v < phi.variables.size(); ++v) {
      s.link(tester, v);
   }
   s.link(tester, helper);
   s.link(helper, tester);
   constexpr ActionIndex S = 0, U = 1, G = 0, B = 1;
   std::vector< bool > assignment(phi.variables.size());
   return s.build([&](PlayerIndex p, const std::vector< ActionIndex >& x) -> std::int64_t {
      if(p == tester) {
         for(std::size_t v = 0; v < assignment.size(); ++v) {
            assignment[v] = x[v] == 0;
         }
         if(phi.satisfied_by(assignment)) {
            return x[tester] == S ? 1 : 0;
         }
         return (x[tester] == U and x[helper] == G) or (x[tester] == S and x[helper] == B) ? 1 : 0;
      }
      if(p == helper) {
         return (x[tester] == S and x[helper] == G) or (x[tester] == U and x[helper] == B) ? 1 : 0;
      }
      return 1;
   });
}

// ---------------------------------------------------------------------------
// QBF constructions
// ---------------------------------------------------------------------------

/// Pads the disjunct count to the next power of two that is at least 4. Each
/// added disjunct is x ∧ ¬x over its own fresh existential variable.
inline R2Qbf pad_r2qbf(R2Qbf xi)
{
   xi.validate();
   if(xi.disjuncts.empty()) {
      throw InputError("an R2QBF needs at least one disjunct");
   }
   std::size_t target = 4;
   while(target < xi.disjuncts.size()) {
      target *= 2;
   }
   std::set< std::string > taken(xi.exists.begin(), xi.exists.end());
   taken.insert(xi.forall.begin(), xi.forall.end());
   // fresh variables go at the end of the existential block, so universal
   // indices shift
   const auto old_exists = xi.exists.size();
   std::size_t counter = 1;
   std::vector< std::string > fresh;
   while(xi.disjuncts.size() + fresh.size() < target) {
      std::string name;
      do {
         name = "pad" + std::to_string(counter++);
      } while(taken.contains(name));
      taken.insert(name);
      fresh.push_back(name);
   }
   for(auto& d : xi.disjuncts) {
      for(auto& l : d) {
         if(l.variable >= old_exists) {
            l.variable += fresh.size();
         }
      }
   }
   for(std::size_t i = 0; i < fresh.size(); ++i) {
      xi.exists.push_back(fresh[i]);
      xi.disjuncts.push_back({Literal{old_exists + i, true}, Literal{old_exists + i, false}});
   }
   return xi;
}

inline bool is_padded(const R2Qbf& xi)
{
   auto m = xi.disjuncts.size();
   return m >= 4 and (m & (m - 1)) == 0;
}

/// How the challenger's payoff-2 rule reads its tree neighbors.
enum class ChallengerRule {
   /// as published: all tree neighbors play F, or at least one plays w
   published,
   /// all tree neighbors play F, or all of them play w; otherwise C gets 1
   /// for playing T, so a partial w subtree below C cannot be stable
   unanimous,
};

/// Circuit game: variable players (T/F), disjunct players as the leaves of a
/// complete binary tree of or-gate players (T/F/w), challenger C at the root.
/// With the duplicator, C and D both play T/w/u and D copies C. Players are
/// ordered existentials, universals, d1..dm, t1..t(m-2), C, D; tree player
/// t_k sits at heap position k+1 below C (position 1), and d_j at m+j-1.
inline GnfGame gen_qbf_challenger(const R2Qbf& xi, bool duplicator, ChallengerRule rule = ChallengerRule::published)
{
   xi.validate();
   if(not is_padded(xi)) {
      throw InputError("the challenger construction needs a padded formula (2^l disjuncts, l >= 2)");
   }
   const auto m = xi.disjuncts.size();
   const auto nvars = xi.variable_count();
   detail::GameSketch s;
   for(std::size_t v = 0; v < nvars; ++v) {
      s.add(xi.name(v), {"T", "F"});
   }
   const auto first_disjunct = static_cast< PlayerIndex >(nvars);
   for(std::size_t j = 0; j < m; ++j) {
      s.add("d" + std::to_string(j + 1), {"T", "F", "w"});
   }
   const auto first_tree = static_cast< PlayerIndex >(nvars + m);
   for(std::size_t k = 1; k + 2 <= m; ++k) {
      s.add("t" + std::to_string(k), {"T", "F", "w"});
   }
   const auto challenger = duplicator ? s.add("C", {"T", "w", "u"}) : s.add("C", {"T", "w"});
   const PlayerIndex dup = duplicator ? s.add("D", {"T", "w", "u"}) : challenger;

   // heap position -> player
   auto at = [&](std::size_t pos) -> PlayerIndex {
      if(pos == 1) {
         return challenger;
      }
      if(pos < m) {
         return first_tree + static_cast< PlayerIndex >(pos - 2);
      }
      return first_disjunct + static_cast< PlayerIndex >(pos - m);
   };
   const auto positions = 2 * m;
   std::vector< PlayerIndex > parent_of(s.players.size(), challenger);
   std::vector< std::vector< PlayerIndex > > children_of(s.players.size());
   for(std::size_t pos = 2; pos < positions; ++pos) {
      auto child = at(pos);
      auto parent = at(pos / 2);
      parent_of[child] = parent;
      children_of[parent].push_back(child);
      s.link(child, parent);
      s.link(parent, child);
   }
   for(std::size_t j = 0; j < m; ++j) {
      auto d = first_disjunct + static_cast< PlayerIndex >(j);
      for(auto l : xi.disjuncts[j]) {
         auto v = static_cast< PlayerIndex >(l.variable);
         s.link(d, v);
         s.link(v, d);
      }
   }
   if(duplicator) {
      s.link(challenger, dup);
      s.link(dup, challenger);
   }
   constexpr ActionIndex T = 0, F = 1, W = 2;
   const ActionIndex cw = 1, cu = 2;  // challenger/duplicator actions
   return s.build([&, m, nvars](PlayerIndex p, const std::vector< ActionIndex >& x) -> std::int64_t {
      if(p < nvars) {
         if(xi.is_existential(p)) {
            return 1;
         }
         for(auto q : s.neighbors[p]) {
            if(x[q] == W) {
               return 2;
            }
         }
         return 1;
      }
      if(p < first_tree) {
         const auto& d = xi.disjuncts[p - first_disjunct];
         bool holds = std::all_of(d.begin(), d.end(), [&](Literal l) { return (x[l.variable] == T) == l.positive; });
         auto parent = parent_of[p];
         if(x[p] == W and x[parent] == W and not holds) {
            return 2;
         }
         if(x[p] == T and holds) {
            return 1;
         }
         if(x[p] == F and not holds and x[parent] != W) {
            return 1;
         }
         return 0;
      }
      if(p < challenger) {
         // parent C plays w as action 1; everyone else as action 2
         auto plays_w = [&](PlayerIndex q) { return q == challenger ? x[q] == cw : x[q] == W; };
         const auto& neigh = s.neighbors[p];
         auto w_count = std::count_if(neigh.begin(), neigh.end(), plays_w);
         const auto& kids = children_of[p];
         if(x[p] == W and w_count == static_cast< std::ptrdiff_t >(neigh.size())) {
            return 2;
         }
         if(x[p] == T and w_count == 0 and std::any_of(kids.begin(), kids.end(), [&](PlayerIndex q) { return x[q] == T; })) {
            return 1;
         }
         if(x[p] == F and w_count == 0 and std::all_of(kids.begin(), kids.end(), [&](PlayerIndex q) { return x[q] == F; })) {
            return 1;
         }
         if(x[p] != W and w_count > 0 and w_count < static_cast< std::ptrdiff_t >(neigh.size())) {
            return 1;
         }
         return 0;
      }
      const auto& kids = children_of[challenger];
      bool all_f = std::all_of(kids.begin(), kids.end(), [&](PlayerIndex q) { return x[q] == F; });
      bool any_w = std::any_of(kids.begin(), kids.end(), [&](PlayerIndex q) { return x[q] == W; });
      bool all_w = std::all_of(kids.begin(), kids.end(), [&](PlayerIndex q) { return x[q] == W; });
      bool any_t = std::any_of(kids.begin(), kids.end(), [&](PlayerIndex q) { return x[q] == T; });
      bool trigger = all_f or (rule == ChallengerRule::published ? any_w : all_w);
      if(p == challenger) {
         bool challenging = duplicator ? (x[p] == cw or x[p] == cu) and x[p] != x[dup] : x[p] == cw;
         if(challenging and trigger) {
            return 2;
         }
         bool settled = rule == ChallengerRule::unanimous ? not trigger : any_t and not any_w;
         if(x[p] == T and settled) {
            return 1;
         }
         return 0;
      }
      return x[dup] == x[challenger] ? 1 : 0;
   });
}

/// Acyclic construction: variable players (t/f), tester T (s/u) watching all
/// variables and H, helper H (g/b) watching T. Universal players gain when T
/// plays u. Strong equilibria exist iff the formula is valid.
inline GnfGame gen_qbf_acyclic(const R2Qbf& xi)
{
   xi.validate();
   const auto nvars = xi.variable_count();
   detail::GameSketch s;
   for(std::size_t v = 0; v < nvars; ++v) {
      s.add(xi.name(v), {"t", "f"});
   }
   auto tester = s.add("T", {"s", "u"});
   auto helper = s.add("H", {"g", "b"});
   for(PlayerIndex v = 0; v < nvars; ++v) {
      s.link(tester, v);
      if(not xi.is_existential(v)) {
         s.link(v, tester);
      }
   }
   s.link(tester, helper);
   s.link(helper, tester);
   constexpr ActionIndex S = 0, U = 1, G = 0, B = 1;
   std::vector< bool > assignment(nvars);
   return s.build([&, nvars](PlayerIndex p, const std::vector< ActionIndex >& x) -> std::int64_t {
      if(p < nvars) {
         if(xi.is_existential(p)) {
            return 1;
         }
         return x[tester] == S ? 1 : 2;
      }
      if(p == helper) {
         return (x[tester] == S and x[helper] == G) or (x[tester] == U and x[helper] == B) ? 1 : 0;
      }
      for(std::size_t v = 0; v < nvars; ++v) {
         assignment[v] = x[v] == 0;
      }
      bool holds = xi.matrix_holds(assignment);
      if(not holds and x[tester] == U and x[helper] == G) {
         return 2;
      }
      if((holds and x[tester] == S) or (not holds and x[tester] == S and x[helper] == B)) {
         return 1;
      }
      return 0;
   });
}

// ---------------------------------------------------------------------------
// Tree-SAT
// ---------------------------------------------------------------------------

/// Duplicates the last clause until the clause count is a power of two >= 2.
inline Cnf pad_cnf_power_of_two(Cnf phi)
{
   if(phi.clauses.empty()) {
      throw InputError("the tree construction needs at least one clause");
   }
   std::size_t target = 2;
   while(target < phi.clauses.size()) {
      target *= 2;
   }
   while(phi.clauses.size() < target) {
      phi.clauses.push_back(phi.clauses.back());
   }
   return phi;
}

/// How a checker reads the "parent (if any)" clause of the w/wbar rules.
enum class CheckerRule {
   /// as published: the root has no parent, so the condition holds for it
   published,
   /// w/wbar pay only below an actual parent playing w/wbar or v
   parent_required,
};

/// Clause players c1..cm are the leaves of a complete binary tree of
/// checker players t1..t(m-1) (heap order, t1 at the root; c_j at position
/// m+j-1). Clause players play one of their literals ("X3", "!X3") or B;
/// checkers play T or v_/w_/wbar_ of a variable. The formula is padded
/// first. With CheckerRule::parent_required, strong equilibria exist iff the
/// formula is satisfiable. With the published rule the root checker can start
/// a one-sided w chain down to any literal leaf, so no profile is strong.
inline GnfGame gen_tree_sat(const Cnf& input, CheckerRule rule = CheckerRule::published)
{
   input.validate();
   auto phi = pad_cnf_power_of_two(input);
   const auto m = phi.clauses.size();
   detail::GameSketch s;
   std::vector< std::string > checker_actions{"T"};
   for(const auto& v : phi.variables) {
      checker_actions.push_back("v_" + v);
      checker_actions.push_back("w_" + v);
      checker_actions.push_back("wbar_" + v);
   }
   for(std::size_t k = 1; k < m; ++k) {
      s.add("t" + std::to_string(k), checker_actions);
   }
   // clause literal actions: (variable, sign) per action index
   std::vector< std::vector< Literal > > clause_literals;
   for(std::size_t j = 0; j < m; ++j) {
      if(phi.clauses[j].empty()) {
         throw InputError("the tree construction does not accept empty clauses");
      }
      std::vector< Literal > lits;
      std::vector< std::string > names;
      for(auto l : phi.clauses[j]) {
         if(std::find(lits.begin(), lits.end(), l) == lits.end()) {
            lits.push_back(l);
            names.push_back(detail::literal_name(phi.variables, l));
         }
      }
      names.push_back("B");
      clause_literals.push_back(lits);
      s.add("c" + std::to_string(j + 1), names);
   }
   auto at = [&](std::size_t pos) { return static_cast< PlayerIndex >(pos - 1); };
   for(std::size_t pos = 2; pos < 2 * m; ++pos) {
      s.link(at(pos), at(pos / 2));
      s.link(at(pos / 2), at(pos));
   }
   const auto first_clause = static_cast< PlayerIndex >(m - 1);
   // checker action encoding: 0 = T, 1 + 3i = v_i, 2 + 3i = w_i, 3 + 3i = wbar_i
   enum class Kind { T, v, w, wbar };
   auto decode = [](ActionIndex a) -> std::pair< Kind, std::size_t > {
      if(a == 0) {
         return {Kind::T, 0};
      }
      return {static_cast< Kind >(1 + (a - 1) % 3), (a - 1) / 3};
   };
   auto clause_literal = [&](PlayerIndex c, ActionIndex a) -> std::optional< Literal > {
      const auto& lits = clause_literals[c - first_clause];
      return a < lits.size() ? std::optional(lits[a]) : std::nullopt;
   };
   return s.build([&](PlayerIndex p, const std::vector< ActionIndex >& x) -> std::int64_t {
      if(p >= first_clause) {
         auto parent = at((p + 1) / 2);
         bool parent_ok = x[parent] == 0;
         bool literal = clause_literal(p, x[p]).has_value();
         return (literal and parent_ok) or (not literal and not parent_ok) ? 1 : 0;
      }
      const std::size_t pos = p + 1;
      auto [kind, var] = decode(x[p]);
      if(kind == Kind::T) {
         return 1;
      }
      const bool has_parent = pos > 1;
      std::optional< std::pair< Kind, std::size_t > > parent_move;
      if(has_parent) {
         parent_move = decode(x[at(pos / 2)]);
      }
      const PlayerIndex kids[2] = {at(2 * pos), at(2 * pos + 1)};
      const bool leaf_kids = kids[0] >= first_clause;
      // what a child "says": for leaves its literal (or B), else its move
      auto child_is = [&](PlayerIndex c, Kind want, bool positive) {
         if(leaf_kids) {
            auto l = clause_literal(c, x[c]);
            return l and l->variable == var and l->positive == positive;
         }
         auto [k, v] = decode(x[c]);
         return k == want and v == var;
      };
      auto child_bad = [&](PlayerIndex c) { return leaf_kids and not clause_literal(c, x[c]); };
      if(kind == Kind::w or kind == Kind::wbar) {
         bool positive = kind == Kind::w;
         if(not has_parent and rule == CheckerRule::parent_required) {
            return 0;
         }
         if(has_parent and not(parent_move->second == var and (parent_move->first == kind or parent_move->first == Kind::v))) {
            return 0;
         }
         if(child_bad(kids[0]) or child_bad(kids[1])) {
            return 0;
         }
         return child_is(kids[0], kind, positive) or child_is(kids[1], kind, positive) ? 2 : 0;
      }
      // v_i
      if(has_parent and parent_move->first != Kind::T) {
         return 0;
      }
      bool split = (child_is(kids[0], Kind::w, true) and child_is(kids[1], Kind::wbar, false))
                   or (child_is(kids[0], Kind::wbar, false) and child_is(kids[1], Kind::w, true));
      return split ? 2 : 0;
   });
}

// ---------------------------------------------------------------------------
// Random games
// ---------------------------------------------------------------------------

struct RandomGameOptions {
   std::uint64_t seed = 1;
   std::size_t players = 4;
   std::size_t max_actions = 2;
   std::size_t max_neighbors = 2;
   std::int64_t payoff_min = 0;
   std::int64_t payoff_max = 3;
};

namespace detail {

/// Uniform-enough draw in [lo, hi] that is identical on every platform
/// (standard distributions are implementation-defined).
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi)
{
   const auto span = hi - lo + 1;
   if(span == 0) {
      return rng();
   }
   const auto limit = std::numeric_limits< std::uint64_t >::max() - std::numeric_limits< std::uint64_t >::max() % span;
   std::uint64_t r = 0;
   do {
      r = rng();
   } while(r >= limit);
   return lo + r % span;
}

}  // namespace detail

/// Players p1..pn with actions a0.. (between 2 and max_actions each),
/// neighborhoods of up to max_neighbors other players, integer payoffs.
inline GnfGame gen_random(const RandomGameOptions& opt)
{
   if(opt.players == 0 or opt.max_actions == 0 or opt.payoff_min > opt.payoff_max) {
      throw InputError("random game parameters must be positive and the payoff range nonempty");
   }
   std::mt19937_64 rng(opt.seed);
   detail::GameSketch s;
   for(std::size_t i = 0; i < opt.players; ++i) {
      auto k = opt.max_actions == 1 ? 1 : detail::draw(rng, 2, opt.max_actions);
      std::vector< std::string > acts;
      for(std::size_t a = 0; a < k; ++a) {
         acts.push_back("a" + std::to_string(a));
      }
      s.add("p" + std::to_string(i + 1), std::move(acts));
   }
   const auto cap = std::min(opt.max_neighbors, opt.players - 1);
   for(PlayerIndex p = 0; p < opt.players; ++p) {
      auto k = detail::draw(rng, 0, cap);
      std::vector< PlayerIndex > pool;
      for(PlayerIndex q = 0; q < opt.players; ++q) {
         if(q != p) {
            pool.push_back(q);
         }
      }
      for(std::size_t i = 0; i < k; ++i) {
         auto j = detail::draw(rng, i, pool.size() - 1);
         std::swap(pool[i], pool[j]);
         s.link(p, pool[i]);
      }
   }
   const auto range = static_cast< std::uint64_t >(opt.payoff_max - opt.payoff_min);
   return s.build([&](PlayerIndex, const std::vector< ActionIndex >&) -> std::int64_t {
      return opt.payoff_min + static_cast< std::int64_t >(detail::draw(rng, 0, range));
   });
}

// ---------------------------------------------------------------------------
// Random formulas
// ---------------------------------------------------------------------------

namespace detail {

/// Between 1 and max_length literals over distinct variables of [0, n).
inline std::vector< Literal > random_term(std::mt19937_64& rng, std::size_t n, std::size_t max_length)
{
   std::vector< std::size_t > pool(n);
   for(std::size_t v = 0; v < n; ++v) {
      pool[v] = v;
   }
   auto length = draw(rng, 1, std::min(max_length, n));
   std::vector< Literal > out;
   for(std::size_t i = 0; i < length; ++i) {
      auto j = draw(rng, i, n - 1);
      std::swap(pool[i], pool[j]);
      out.push_back({pool[i], draw(rng, 0, 1) == 1});
   }
   std::sort(out.begin(), out.end());
   return out;
}

}  // namespace detail

/// Variables X1..X<variables>, each clause of 1..max_length literals.
inline Cnf random_cnf(std::uint64_t seed, std::size_t variables, std::size_t clauses, std::size_t max_length = 3)
{
   if(variables == 0 or clauses == 0 or max_length == 0) {
      throw InputError("a random CNF needs variables, clauses and a positive clause length");
   }
   std::mt19937_64 rng(seed);
   Cnf phi;
   for(std::size_t v = 1; v <= variables; ++v) {
      phi.variables.push_back("X" + std::to_string(v));
   }
   for(std::size_t c = 0; c < clauses; ++c) {
      phi.clauses.push_back(detail::random_term(rng, variables, max_length));
   }
   return phi;
}

/// ∃ a1..a<exists> ∀ b1..b<forall> with terms of 1..max_length literals.
inline R2Qbf random_r2qbf(
   std::uint64_t seed, std::size_t exists, std::size_t forall, std::size_t disjuncts, std::size_t max_length = 2)
{
   if(exists + forall == 0 or disjuncts == 0 or max_length == 0) {
      throw InputError("a random R2QBF needs variables, disjuncts and a positive term length");
   }
   std::mt19937_64 rng(seed);
   R2Qbf xi;
   for(std::size_t v = 1; v <= exists; ++v) {
      xi.exists.push_back("a" + std::to_string(v));
   }
   for(std::size_t v = 1; v <= forall; ++v) {
      xi.forall.push_back("b" + std::to_string(v));
   }
   for(std::size_t d = 0; d < disjuncts; ++d) {
      xi.disjuncts.push_back(detail::random_term(rng, exists + forall, max_length));
   }
   return xi;
}

// ---------------------------------------------------------------------------
// Reading assignments back from profiles
// ---------------------------------------------------------------------------

/// Truth values of the named variable players; a variable is true when its
/// player plays `true_action`.
inline std::vector< bool > read_assignment(
   const GnfGame& game, const Profile& x, std::span< const std::string > variables, std::string_view true_action)
{
   std::vector< bool > out;
   for(const auto& v : variables) {
      auto p = game.roster().player(v);
      out.push_back(game.action_name(p, x[p]) == true_action);
   }
   return out;
}

}  // namespace nashcsp
