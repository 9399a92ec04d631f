#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "nashcsp/decomposition.hpp"
#include "nashcsp/error.hpp"
#include "nashcsp/formula.hpp"
#include "nashcsp/game.hpp"
#include "nashcsp/solver.hpp"
#include "nashcsp/strong.hpp"

namespace nashcsp::io {

/// Output documents keep insertion order: top-level keys are written in
/// sorted order, player-keyed maps in declared player order.
using Json = nlohmann::ordered_json;

namespace detail {

inline Json parse_json(std::string_view text, const std::string& what)
{
   try {
      return Json::parse(text.begin(), text.end());
   } catch(const nlohmann::json::parse_error& e) {
      throw InputError(what + ": malformed JSON: " + e.what());
   }
}

inline const Json& member(const Json& obj, const char* key, const std::string& context)
{
   if(not obj.is_object()) {
      throw InputError(context + ": expected a JSON object");
   }
   auto it = obj.find(key);
   if(it == obj.end()) {
      throw InputError(context + ": missing key \"" + key + "\"");
   }
   return *it;
}

inline std::string as_string(const Json& v, const std::string& context)
{
   if(not v.is_string()) {
      throw InputError(context + ": expected a string");
   }
   return v.get< std::string >();
}

inline std::vector< std::string > as_strings(const Json& v, const std::string& context)
{
   if(not v.is_array()) {
      throw InputError(context + ": expected an array of strings");
   }
   std::vector< std::string > out;
   for(const auto& item : v) {
      out.push_back(as_string(item, context));
   }
   return out;
}

inline std::map< std::string, std::string > as_assignment(const Json& v, const std::string& context)
{
   if(not v.is_object()) {
      throw InputError(context + ": expected an object mapping players to actions");
   }
   std::map< std::string, std::string > out;
   for(const auto& [key, value] : v.items()) {
      out[key] = as_string(value, context + ", player '" + key + "'");
   }
   return out;
}

/// Payoffs are strings ("3/2", "0.25") or JSON integers. Non-integer JSON
/// numbers are rejected because their decimal text is not preserved.
inline Payoff as_payoff(const Json& v, const std::string& context)
{
   try {
      if(v.is_string()) {
         return Payoff::parse(v.get< std::string >());
      }
      if(v.is_number_integer()) {
         return Payoff(v.get< std::int64_t >());
      }
   } catch(const InputError& e) {
      throw InputError(context + ": " + e.what());
   }
   throw InputError(context + ": payoff must be a string such as \"3/2\" or an integer");
}

inline void expect_format(const Json& doc, std::string_view expected, const std::string& what)
{
   auto format = as_string(member(doc, "format", what), what + " format");
   if(format != expected) {
      throw InputError(what + ": unsupported format \"" + format + "\", expected \"" + std::string(expected) + "\"");
   }
}

template < typename Game >
Json profile_json(const Game& game, const Profile& x)
{
   Json out = Json::object();
   for(PlayerIndex p = 0; p < game.player_count(); ++p) {
      if(x.assigned(p)) {
         out[game.player_name(p)] = game.action_name(p, x[p]);
      }
   }
   return out;
}

template < typename Game >
Json names_json(const Game& game, std::span< const PlayerIndex > players)
{
   Json out = Json::array();
   for(auto p : players) {
      out.push_back(game.player_name(p));
   }
   return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Games
// ---------------------------------------------------------------------------

using AnyGame = std::variant< GnfGame, SnfGame >;

inline GnfDescription parse_gnf_description(const Json& doc)
{
   GnfDescription d;
   d.players = detail::as_strings(detail::member(doc, "players", "game"), "players");
   const auto& actions = detail::member(doc, "actions", "game");
   if(not actions.is_object()) {
      throw InputError("actions: expected an object");
   }
   for(const auto& [p, list] : actions.items()) {
      d.actions[p] = detail::as_strings(list, "actions of '" + p + "'");
   }
   if(auto it = doc.find("neighbors"); it != doc.end()) {
      if(not it->is_object()) {
         throw InputError("neighbors: expected an object");
      }
      for(const auto& [p, list] : it->items()) {
         d.neighbors[p] = detail::as_strings(list, "neighbors of '" + p + "'");
      }
   }
   const auto& utilities = detail::member(doc, "utilities", "game");
   if(not utilities.is_object()) {
      throw InputError("utilities: expected an object");
   }
   for(const auto& [p, entries] : utilities.items()) {
      if(not entries.is_array()) {
         throw InputError("utilities of '" + p + "': expected an array of entries");
      }
      auto& table = d.utilities[p];
      std::size_t i = 0;
      for(const auto& entry : entries) {
         auto context = "utilities of '" + p + "', entry " + std::to_string(i++);
         table.push_back(
            {detail::as_assignment(detail::member(entry, "when", context), context),
             detail::as_payoff(detail::member(entry, "payoff", context), context)});
      }
   }
   return d;
}

inline SnfDescription parse_snf_description(const Json& doc)
{
   SnfDescription d;
   d.players = detail::as_strings(detail::member(doc, "players", "game"), "players");
   const auto& actions = detail::member(doc, "actions", "game");
   if(not actions.is_object()) {
      throw InputError("actions: expected an object");
   }
   for(const auto& [p, list] : actions.items()) {
      d.actions[p] = detail::as_strings(list, "actions of '" + p + "'");
   }
   const auto& cells = detail::member(doc, "cells", "game");
   if(not cells.is_array()) {
      throw InputError("cells: expected an array");
   }
   std::size_t i = 0;
   for(const auto& cell : cells) {
      auto context = "cell " + std::to_string(i++);
      SnfCell c;
      c.when = detail::as_assignment(detail::member(cell, "when", context), context);
      const auto& payoffs = detail::member(cell, "payoffs", context);
      if(not payoffs.is_object()) {
         throw InputError(context + ": payoffs must be an object");
      }
      for(const auto& [p, value] : payoffs.items()) {
         c.payoffs[p] = detail::as_payoff(value, context + ", payoff of '" + p + "'");
      }
      d.cells.push_back(std::move(c));
   }
   return d;
}

inline AnyGame parse_game(std::string_view text)
{
   auto doc = detail::parse_json(text, "game");
   auto format = detail::as_string(detail::member(doc, "format", "game"), "game format");
   if(format == "gnf-game/1") {
      return GnfGame::from_description(parse_gnf_description(doc));
   }
   if(format == "snf-game/1") {
      return SnfGame::from_description(parse_snf_description(doc));
   }
   throw InputError("game: unsupported format \"" + format + "\"");
}

inline GnfGame parse_gnf_game(std::string_view text)
{
   auto game = parse_game(text);
   if(auto* g = std::get_if< GnfGame >(&game)) {
      return std::move(*g);
   }
   throw InputError("expected a graphical-normal-form game");
}

namespace detail {

template < typename Game >
void write_header(Json& out, const Game& game)
{
   Json actions = Json::object();
   for(PlayerIndex p = 0; p < game.player_count(); ++p) {
      actions[game.player_name(p)] = game.roster().action_names(p);
   }
   out["actions"] = std::move(actions);
}

}  // namespace detail

inline Json game_json(const GnfGame& game)
{
   Json out = Json::object();
   detail::write_header(out, game);
   out["format"] = "gnf-game/1";
   Json neighbors = Json::object();
   for(PlayerIndex p = 0; p < game.player_count(); ++p) {
      neighbors[game.player_name(p)] = detail::names_json(game, game.neighbors(p));
   }
   out["neighbors"] = std::move(neighbors);
   out["players"] = game.roster().player_names();
   Json utilities = Json::object();
   for(PlayerIndex p = 0; p < game.player_count(); ++p) {
      Json entries = Json::array();
      auto scope = game.scope(p);
      std::vector< ActionIndex > tuple(scope.size());
      for(std::size_t i = 0; i < game.table_size(p); ++i) {
         game.decode(p, i, tuple);
         Json when = Json::object();
         for(std::size_t k = 0; k < scope.size(); ++k) {
            when[game.player_name(scope[k])] = game.action_name(scope[k], tuple[k]);
         }
         entries.push_back(Json{{"payoff", game.table(p)[i].to_string()}, {"when", std::move(when)}});
      }
      utilities[game.player_name(p)] = std::move(entries);
   }
   out["utilities"] = std::move(utilities);
   return out;
}

inline Json game_json(const SnfGame& game)
{
   Json out = Json::object();
   detail::write_header(out, game);
   Json cells = Json::array();
   std::vector< ActionIndex > x(game.player_count());
   for(std::size_t c = 0; c < game.cell_count(); ++c) {
      game.decode(c, x);
      Json when = Json::object();
      Json payoffs = Json::object();
      for(PlayerIndex p = 0; p < game.player_count(); ++p) {
         when[game.player_name(p)] = game.action_name(p, x[p]);
         payoffs[game.player_name(p)] = game.utility(p, x).to_string();
      }
      cells.push_back(Json{{"payoffs", std::move(payoffs)}, {"when", std::move(when)}});
   }
   out["cells"] = std::move(cells);
   out["format"] = "snf-game/1";
   out["players"] = game.roster().player_names();
   return out;
}

template < typename Game >
std::string serialize_game(const Game& game)
{
   return game_json(game).dump(2) + "\n";
}

inline std::string serialize_game(const AnyGame& game)
{
   return std::visit([](const auto& g) { return serialize_game(g); }, game);
}

// ---------------------------------------------------------------------------
// Profiles
// ---------------------------------------------------------------------------

/// Accepts a JSON object {"A": "x", ...} or the text form "A=x,B=y".
template < typename Game >
Profile parse_profile(const Game& game, std::string_view text)
{
   Assignment names;
   auto trimmed = text;
   while(not trimmed.empty() and std::isspace(static_cast< unsigned char >(trimmed.front()))) {
      trimmed.remove_prefix(1);
   }
   if(not trimmed.empty() and trimmed.front() == '{') {
      auto doc = detail::parse_json(trimmed, "profile");
      if(doc.contains("profile")) {
         doc = doc["profile"];
      }
      names = detail::as_assignment(doc, "profile");
   } else {
      std::string item;
      std::stringstream in{std::string(trimmed)};
      while(std::getline(in, item, ',')) {
         auto eq = item.find('=');
         if(eq == std::string::npos) {
            throw InputError("profile: expected PLAYER=ACTION, got '" + item + "'");
         }
         auto strip = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r\n");
            auto e = s.find_last_not_of(" \t\r\n");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
         };
         names[strip(item.substr(0, eq))] = strip(item.substr(eq + 1));
      }
   }
   auto x = profile_from_names(game, names);
   if(not x.is_global()) {
      throw InputError("profile must assign an action to every player");
   }
   return x;
}

// ---------------------------------------------------------------------------
// Equilibria
// ---------------------------------------------------------------------------

struct WitnessReport {
   Profile base;
   CoalitionWitness witness;
};

template < typename Game >
Json equilibria_json(
   const Game& game, const EquilibriumSet& set, const std::optional< WitnessReport >& witness = std::nullopt)
{
   Json out = Json::object();
   out["format"] = "equilibria/1";
   out["kind"] = to_string(set.kind);
   Json profiles = Json::array();
   for(const auto& x : set.profiles) {
      profiles.push_back(detail::profile_json(game, x));
   }
   out["profiles"] = std::move(profiles);
   if(witness) {
      Json w = Json::object();
      w["coalition"] = detail::names_json(game, witness->witness.coalition);
      w["deviation"] = detail::profile_json(game, witness->witness.deviation);
      w["profile"] = detail::profile_json(game, witness->base);
      out["witness"] = std::move(w);
   }
   return out;
}

template < typename Game >
std::string serialize_equilibria(
   const Game& game, const EquilibriumSet& set, const std::optional< WitnessReport >& witness = std::nullopt)
{
   return equilibria_json(game, set, witness).dump(2) + "\n";
}

template < typename Game >
std::pair< EquilibriumSet, std::optional< WitnessReport > > parse_equilibria(const Game& game, std::string_view text)
{
   auto doc = detail::parse_json(text, "equilibria");
   detail::expect_format(doc, "equilibria/1", "equilibria");
   EquilibriumSet set;
   auto kind = detail::as_string(detail::member(doc, "kind", "equilibria"), "kind");
   if(kind == "nash") {
      set.kind = EquilibriumKind::nash;
   } else if(kind == "pareto") {
      set.kind = EquilibriumKind::pareto;
   } else if(kind == "strong") {
      set.kind = EquilibriumKind::strong;
   } else {
      throw InputError("equilibria: unknown kind \"" + kind + "\"");
   }
   const auto& profiles = detail::member(doc, "profiles", "equilibria");
   if(not profiles.is_array()) {
      throw InputError("equilibria: profiles must be an array");
   }
   for(const auto& p : profiles) {
      auto x = profile_from_names(game, detail::as_assignment(p, "equilibria profile"));
      if(not x.is_global()) {
         throw InputError("equilibria: profiles must be global");
      }
      set.profiles.push_back(std::move(x));
   }
   set.canonicalize();
   std::optional< WitnessReport > witness;
   if(auto it = doc.find("witness"); it != doc.end()) {
      WitnessReport w;
      w.base = profile_from_names(game, detail::as_assignment(detail::member(*it, "profile", "witness"), "witness profile"));
      w.witness.deviation =
         profile_from_names(game, detail::as_assignment(detail::member(*it, "deviation", "witness"), "witness deviation"));
      for(const auto& name : detail::as_strings(detail::member(*it, "coalition", "witness"), "witness coalition")) {
         w.witness.coalition.push_back(game.roster().player(name));
      }
      std::sort(w.witness.coalition.begin(), w.witness.coalition.end());
      witness = std::move(w);
   }
   return {std::move(set), std::move(witness)};
}

// ---------------------------------------------------------------------------
// Decompositions
// ---------------------------------------------------------------------------

enum class DecompKind { jointree, tree, hypertree };

inline std::string to_string(DecompKind kind)
{
   switch(kind) {
   case DecompKind::jointree: return "jointree";
   case DecompKind::tree: return "tree";
   case DecompKind::hypertree: return "hypertree";
   }
   return "tree";
}

inline DecompKind parse_decomp_kind(const std::string& text)
{
   if(text == "jointree") {
      return DecompKind::jointree;
   }
   if(text == "tree") {
      return DecompKind::tree;
   }
   if(text == "hypertree") {
      return DecompKind::hypertree;
   }
   throw InputError("unknown decomposition kind \"" + text + "\"");
}

using AnyDecomposition = std::variant< JoinTree, TreeDecomposition, HypertreeDecomposition >;

inline DecompKind kind_of(const AnyDecomposition& d)
{
   return static_cast< DecompKind >(d.index());
}

/// Node ids are arbitrary distinct non-negative integers; nodes are
/// renumbered in listing order.
inline AnyDecomposition parse_decomp(const Roster& roster, std::string_view text)
{
   auto doc = detail::parse_json(text, "decomposition");
   detail::expect_format(doc, "decomp/1", "decomposition");
   auto kind = parse_decomp_kind(detail::as_string(detail::member(doc, "kind", "decomposition"), "kind"));
   const auto& nodes = detail::member(doc, "nodes", "decomposition");
   if(not nodes.is_array() or nodes.empty()) {
      throw InputError("decomposition: nodes must be a nonempty array");
   }
   std::map< std::int64_t, NodeIndex > index;
   for(const auto& node : nodes) {
      const auto& id = detail::member(node, "id", "decomposition node");
      if(not id.is_number_integer() or id.get< std::int64_t >() < 0) {
         throw InputError("decomposition: node ids must be non-negative integers");
      }
      if(not index.emplace(id.get< std::int64_t >(), index.size()).second) {
         throw InputError("decomposition: duplicate node id " + std::to_string(id.get< std::int64_t >()));
      }
   }
   auto players = [&](const Json& v, const std::string& context) {
      std::vector< PlayerIndex > out;
      for(const auto& name : detail::as_strings(v, context)) {
         out.push_back(roster.player(name));
      }
      std::sort(out.begin(), out.end());
      if(std::adjacent_find(out.begin(), out.end()) != out.end()) {
         throw InputError(context + ": lists a player twice");
      }
      return out;
   };
   std::vector< std::vector< NodeIndex > > children(nodes.size());
   JoinTree jt;
   std::vector< std::vector< PlayerIndex > > chi;
   std::vector< std::vector< PlayerIndex > > lambda;
   for(const auto& node : nodes) {
      auto v = index.at(node["id"].get< std::int64_t >());
      auto context = "decomposition node " + std::to_string(node["id"].get< std::int64_t >());
      if(auto it = node.find("children"); it != node.end()) {
         if(not it->is_array()) {
            throw InputError(context + ": children must be an array of ids");
         }
         for(const auto& c : *it) {
            if(not c.is_number_integer() or not index.contains(c.get< std::int64_t >())) {
               throw InputError(context + ": unknown child id");
            }
            children[v].push_back(index.at(c.get< std::int64_t >()));
         }
      }
      switch(kind) {
      case DecompKind::jointree:
         jt.owner.push_back(roster.player(detail::as_string(detail::member(node, "owner", context), context + " owner")));
         break;
      case DecompKind::tree: chi.push_back(players(detail::member(node, "chi", context), context + " chi")); break;
      case DecompKind::hypertree:
         chi.push_back(players(detail::member(node, "chi", context), context + " chi"));
         lambda.push_back(players(detail::member(node, "lambda", context), context + " lambda"));
         break;
      }
   }
   auto tree = RootedTree::from_children(std::move(children));
   switch(kind) {
   case DecompKind::jointree: jt.tree = std::move(tree); return jt;
   case DecompKind::tree: return TreeDecomposition{std::move(tree), std::move(chi)};
   case DecompKind::hypertree: return HypertreeDecomposition{std::move(tree), std::move(chi), std::move(lambda)};
   }
   throw InputError("unreachable decomposition kind");
}

inline Json decomp_json(const Roster& roster, const AnyDecomposition& d)
{
   auto names = [&](std::span< const PlayerIndex > ps) {
      Json out = Json::array();
      for(auto p : ps) {
         out.push_back(roster.player_name(p));
      }
      return out;
   };
   const RootedTree& tree = std::visit([](const auto& x) -> const RootedTree& { return x.tree; }, d);
   Json nodes = Json::array();
   for(NodeIndex v = 0; v < tree.size(); ++v) {
      Json node = Json::object();
      if(const auto* hd = std::get_if< HypertreeDecomposition >(&d)) {
         node["chi"] = names(hd->chi[v]);
      } else if(const auto* td = std::get_if< TreeDecomposition >(&d)) {
         node["chi"] = names(td->bags[v]);
      }
      Json kids = Json::array();
      for(auto c : tree.children(v)) {
         kids.push_back(c);
      }
      node["children"] = std::move(kids);
      node["id"] = v;
      if(const auto* hd = std::get_if< HypertreeDecomposition >(&d)) {
         node["lambda"] = names(hd->lambda[v]);
      }
      if(const auto* jt = std::get_if< JoinTree >(&d)) {
         node["owner"] = roster.player_name(jt->owner[v]);
      }
      nodes.push_back(std::move(node));
   }
   Json out = Json::object();
   out["format"] = "decomp/1";
   out["kind"] = to_string(kind_of(d));
   out["nodes"] = std::move(nodes);
   return out;
}

inline std::string serialize_decomp(const Roster& roster, const AnyDecomposition& d)
{
   return decomp_json(roster, d).dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

/// DIMACS CNF; variable i is named "X<i>".
inline Cnf parse_cnf_dimacs(std::string_view text)
{
   std::istringstream in{std::string(text)};
   std::string line;
   std::optional< std::size_t > declared_vars;
   std::size_t declared_clauses = 0;
   Cnf phi;
   std::vector< Literal > current;
   bool done = false;
   while(not done and std::getline(in, line)) {
      std::istringstream tokens(line);
      std::string first;
      if(not(tokens >> first) or first == "c") {
         continue;
      }
      if(first == "%") {
         break;
      }
      if(first == "p") {
         std::string format;
         long long vars = -1;
         long long clauses = -1;
         std::string extra;
         if(declared_vars or not(tokens >> format >> vars >> clauses) or format != "cnf" or vars < 0 or clauses < 0
            or (tokens >> extra)) {
            throw InputError("DIMACS: malformed header '" + line + "'");
         }
         declared_vars = static_cast< std::size_t >(vars);
         declared_clauses = static_cast< std::size_t >(clauses);
         for(std::size_t i = 1; i <= *declared_vars; ++i) {
            phi.variables.push_back("X" + std::to_string(i));
         }
         continue;
      }
      if(not declared_vars) {
         throw InputError("DIMACS: clause before the 'p cnf' header");
      }
      std::istringstream rest(line);
      std::string token;
      while(rest >> token) {
         long long value = 0;
         try {
            std::size_t used = 0;
            value = std::stoll(token, &used);
            if(used != token.size()) {
               throw std::invalid_argument(token);
            }
         } catch(const std::exception&) {
            throw InputError("DIMACS: not a literal: '" + token + "'");
         }
         if(value == 0) {
            phi.clauses.push_back(std::move(current));
            current.clear();
            continue;
         }
         auto var = static_cast< std::size_t >(value < 0 ? -value : value);
         if(var > *declared_vars) {
            throw InputError("DIMACS: literal " + token + " names an undeclared variable");
         }
         current.push_back({var - 1, value > 0});
      }
   }
   if(not declared_vars) {
      throw InputError("DIMACS: missing 'p cnf' header");
   }
   if(not current.empty()) {
      phi.clauses.push_back(std::move(current));
   }
   if(phi.clauses.size() != declared_clauses) {
      throw InputError(
         "DIMACS: header declares " + std::to_string(declared_clauses) + " clauses but " + std::to_string(phi.clauses.size())
         + " were given");
   }
   return phi;
}

/// Variables must be named X1..Xn in order.
inline std::string serialize_cnf_dimacs(const Cnf& phi)
{
   for(std::size_t i = 0; i < phi.variables.size(); ++i) {
      if(phi.variables[i] != "X" + std::to_string(i + 1)) {
         throw InputError("DIMACS output needs variables named X1..Xn");
      }
   }
   std::string out = "p cnf " + std::to_string(phi.variables.size()) + " " + std::to_string(phi.clauses.size()) + "\n";
   for(const auto& clause : phi.clauses) {
      for(auto l : clause) {
         out += (l.positive ? "" : "-") + std::to_string(l.variable + 1) + " ";
      }
      out += "0\n";
   }
   return out;
}

/// {"exists": [...], "forall": [...], "disjuncts": [["a", "-b"], ...]}
inline R2Qbf parse_r2qbf(std::string_view text)
{
   auto doc = detail::parse_json(text, "R2QBF");
   if(doc.contains("format")) {
      detail::expect_format(doc, "r2qbf/1", "R2QBF");
   }
   R2Qbf xi;
   xi.exists = detail::as_strings(detail::member(doc, "exists", "R2QBF"), "exists");
   xi.forall = detail::as_strings(detail::member(doc, "forall", "R2QBF"), "forall");
   std::map< std::string, std::size_t > index;
   for(std::size_t v = 0; v < xi.variable_count(); ++v) {
      if(not index.emplace(xi.name(v), v).second) {
         throw InputError("R2QBF: variable '" + xi.name(v) + "' is declared twice or in both blocks");
      }
   }
   const auto& disjuncts = detail::member(doc, "disjuncts", "R2QBF");
   if(not disjuncts.is_array()) {
      throw InputError("R2QBF: disjuncts must be an array");
   }
   for(const auto& d : disjuncts) {
      auto& out = xi.disjuncts.emplace_back();
      for(const auto& lit : detail::as_strings(d, "R2QBF disjunct")) {
         bool positive = lit.empty() or lit.front() != '-';
         auto name = positive ? lit : lit.substr(1);
         auto it = index.find(name);
         if(it == index.end()) {
            throw InputError("R2QBF: disjunct mentions undeclared variable '" + name + "'");
         }
         out.push_back({it->second, positive});
      }
   }
   xi.validate();
   return xi;
}

inline std::string serialize_r2qbf(const R2Qbf& xi)
{
   Json out = Json::object();
   Json disjuncts = Json::array();
   for(const auto& d : xi.disjuncts) {
      Json lits = Json::array();
      for(auto l : d) {
         lits.push_back((l.positive ? "" : "-") + xi.name(l.variable));
      }
      disjuncts.push_back(std::move(lits));
   }
   out["disjuncts"] = std::move(disjuncts);
   out["exists"] = xi.exists;
   out["forall"] = xi.forall;
   out["format"] = "r2qbf/1";
   return out.dump(2) + "\n";
}

}  // namespace nashcsp::io
