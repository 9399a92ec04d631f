#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nashcsp/decomposition.hpp"
#include "nashcsp/error.hpp"
#include "nashcsp/generators.hpp"
#include "nashcsp/io.hpp"
#include "nashcsp/oracle.hpp"
#include "nashcsp/solver.hpp"
#include "nashcsp/strong.hpp"
#include "nashcsp/structure.hpp"

namespace nashcsp::cli {

/// Environment variable that overrides the default size guard.
inline constexpr const char* kGuardVariable = "NASHCSP_GUARD";

enum class Method { automatic, acyclic, hypertree, brute };
enum class Query { all, one, count, exists };

namespace detail {

inline std::string slurp(std::istream& in)
{
   return {std::istreambuf_iterator< char >(in), std::istreambuf_iterator< char >()};
}

inline std::string read_source(const std::string& path, std::istream& stdin_stream)
{
   if(path.empty() or path == "-") {
      return slurp(stdin_stream);
   }
   std::ifstream file(path, std::ios::binary);
   if(not file) {
      throw InputError("cannot open '" + path + "'");
   }
   return slurp(file);
}

inline std::uint64_t guard_from_environment()
{
   const char* text = std::getenv(kGuardVariable);
   if(text == nullptr or *text == '\0') {
      return kDefaultGuard;
   }
   try {
      std::size_t used = 0;
      auto value = std::stoull(text, &used);
      if(used == std::string_view(text).size()) {
         return value;
      }
   } catch(const std::exception&) {
   }
   throw InputError(std::string(kGuardVariable) + " must be a non-negative integer");
}

/// Games in standard form are handled through their all-depend-all
/// graphical form, which has the same payoffs.
inline GnfGame as_graphical(const io::AnyGame& game)
{
   if(const auto* g = std::get_if< GnfGame >(&game)) {
      return *g;
   }
   return to_gnf(std::get< SnfGame >(game));
}

inline bool bigger_than(const BigCount& count, std::uint64_t guard)
{
   return count > BigCount(guard);
}

/// Product of action counts over the largest χ, used to predict the size
/// of the per-node joins.
inline BigCount largest_node_space(const GnfGame& game, const HypertreeDecomposition& hd)
{
   BigCount largest = 0;
   for(const auto& chi : hd.chi) {
      BigCount space = 1;
      for(auto p : chi) {
         space *= game.action_count(p);
      }
      largest = std::max(largest, space);
   }
   return largest;
}

struct Plan {
   std::optional< JoinTree > join_tree;
   std::optional< HypertreeDecomposition > hypertree;
   bool brute = false;
};

struct Settings {
   Method method = Method::automatic;
   std::optional< io::AnyDecomposition > decomp;
   std::optional< PlayerIndex > root;
   std::uint64_t guard = kDefaultGuard;
};

/// Picks the evaluation route; throws InapplicableError when the requested
/// method cannot run on this game.
inline Plan plan_for(const GnfGame& game, const Settings& s, EquilibriumKind kind)
{
   Plan plan;
   if(s.method == Method::brute) {
      plan.brute = true;
      return plan;
   }
   auto h = dependency_hypergraph(game);
   if(s.decomp) {
      auto kind_given = io::kind_of(*s.decomp);
      if(s.method == Method::acyclic and kind_given != io::DecompKind::jointree) {
         throw InputError("--method acyclic needs a jointree decomposition, got kind " + io::to_string(kind_given));
      }
      if(s.method == Method::hypertree and kind_given != io::DecompKind::hypertree) {
         throw InputError("--method hypertree needs a hypertree decomposition, got kind " + io::to_string(kind_given));
      }
      if(const auto* jt = std::get_if< JoinTree >(&*s.decomp)) {
         validate_join_tree(h, *jt, game.roster().player_names());
         plan.join_tree = *jt;
      } else if(const auto* td = std::get_if< TreeDecomposition >(&*s.decomp)) {
         plan.hypertree = td_to_hd(game, *td);
      } else {
         plan.hypertree = std::get< HypertreeDecomposition >(*s.decomp);
      }
   } else if(s.method == Method::acyclic) {
      plan.join_tree = join_tree(h);
      if(not plan.join_tree) {
         throw InapplicableError("the dependency hypergraph is cyclic, so no join tree exists");
      }
   } else if(s.method == Method::hypertree) {
      plan.hypertree = td_to_hd(game, tree_decomposition_heuristic(dependency_graph(game)));
   } else {
      plan.join_tree = join_tree(h);
      if(not plan.join_tree) {
         plan.hypertree = td_to_hd(game, tree_decomposition_heuristic(dependency_graph(game)));
      }
   }
   if(kind == EquilibriumKind::strong and not plan.join_tree) {
      if(s.method != Method::automatic) {
         throw InapplicableError("strong equilibria need a join tree or --method brute");
      }
      plan = Plan{std::nullopt, std::nullopt, true};
      return plan;
   }
   if(plan.hypertree) {
      validate_hypertree_decomposition(h, *plan.hypertree, game.roster().player_names());
      if(bigger_than(largest_node_space(game, *plan.hypertree), s.guard)) {
         if(s.method != Method::automatic) {
            throw GuardExceeded("a decomposition node spans more combined strategies than the guard allows");
         }
         plan = Plan{std::nullopt, std::nullopt, true};
      }
   }
   return plan;
}

inline FilteredJoinTree consistent_tree(const GnfGame& game, const Plan& plan, const Settings& s)
{
   auto t = plan.join_tree ? solve_acyclic(game, *plan.join_tree, s.root) : solve_with_hd(game, *plan.hypertree, s.root);
   return make_consistent(std::move(t)).first;
}

inline EquilibriumSet all_nash(const FilteredJoinTree& t, std::uint64_t guard)
{
   if(t.root_relation().empty()) {
      return {};
   }
   auto count = count_equilibria(t);
   if(bigger_than(count, guard)) {
      throw GuardExceeded("the game has " + count.str() + " equilibria, above the guard of " + std::to_string(guard));
   }
   return enumerate_equilibria(t);
}

struct Answer {
   EquilibriumSet set;
   std::optional< BigCount > count;
};

inline Answer solve(const GnfGame& game, EquilibriumKind kind, Query query, const Settings& s)
{
   auto plan = plan_for(game, s, kind);
   Answer answer;
   answer.set.kind = kind;
   auto finish = [&](EquilibriumSet set) {
      set.kind = kind;
      if(query == Query::count) {
         answer.count = BigCount(set.profiles.size());
      } else if(query != Query::all and set.profiles.size() > 1) {
         set.profiles.resize(1);
      }
      answer.set = std::move(set);
      return answer;
   };
   if(plan.brute) {
      switch(kind) {
      case EquilibriumKind::nash: return finish(brute_nash(game, s.guard));
      case EquilibriumKind::pareto: return finish(brute_pareto(game, s.guard));
      case EquilibriumKind::strong: return finish(brute_strong(game, s.guard));
      }
   }
   auto t = consistent_tree(game, plan, s);
   switch(kind) {
   case EquilibriumKind::nash:
      if(query == Query::count) {
         answer.count = t.root_relation().empty() ? BigCount(0) : count_equilibria(t);
         return answer;
      }
      if(query == Query::all) {
         return finish(all_nash(t, s.guard));
      }
      if(auto x = first_equilibrium(t)) {
         answer.set.profiles.push_back(*x);
      }
      return answer;
   case EquilibriumKind::pareto:
      if(query == Query::one or query == Query::exists) {
         if(auto x = select_pareto_equilibrium(game, t)) {
            answer.set.profiles.push_back(*x);
         }
         return answer;
      }
      return finish(pareto_filter(game, all_nash(t, s.guard)));
   case EquilibriumKind::strong: {
      EquilibriumSet strong{EquilibriumKind::strong, {}};
      for(const auto& x : all_nash(t, s.guard).profiles) {
         if(strong_check_acyclic(game, *plan.join_tree, x).strong) {
            strong.profiles.push_back(x);
            if(query == Query::one or query == Query::exists) {
               break;
            }
         }
      }
      return finish(std::move(strong));
   }
   }
   return answer;
}

inline EquilibriumKind parse_kind(const std::string& text)
{
   if(text == "nash") {
      return EquilibriumKind::nash;
   }
   if(text == "pareto") {
      return EquilibriumKind::pareto;
   }
   return EquilibriumKind::strong;
}

inline Method parse_method(const std::string& text)
{
   if(text == "acyclic") {
      return Method::acyclic;
   }
   if(text == "hypertree") {
      return Method::hypertree;
   }
   if(text == "brute") {
      return Method::brute;
   }
   return Method::automatic;
}

/// First player with a strictly improving unilateral move, as a witness.
inline std::optional< CoalitionWitness > unilateral_witness(const GnfGame& game, const Profile& x)
{
   for(PlayerIndex p = 0; p < game.player_count(); ++p) {
      const auto& current = game.utility(p, x.actions());
      for(ActionIndex a = 0; a < game.action_count(p); ++a) {
         if(current < game.utility_if(p, a, x.actions())) {
            CoalitionWitness w{{p}, Profile(game.player_count())};
            w.deviation.set(p, a);
            return w;
         }
      }
   }
   return std::nullopt;
}

inline std::string fixed(double value, int digits)
{
   std::ostringstream out;
   out.imbue(std::locale::classic());
   out << std::fixed << std::setprecision(digits) << value;
   return out.str();
}

}  // namespace detail

/// Runs the command-line tool; `args` excludes the program name.
inline int cli_main(const std::vector< std::string >& args, std::istream& in, std::ostream& out, std::ostream& err)
{
   CLI::App app{"Pure Nash equilibria of graphical games via constraint satisfaction", "nashcsp"};
   app.require_subcommand(1);
   app.set_help_all_flag("--help-all", "Show help for every subcommand");

   std::optional< std::uint64_t > guard_option;
   app.add_option("--guard", guard_option, "Size guard for brute force and enumeration (env NASHCSP_GUARD)");

   // solve
   auto* solve = app.add_subcommand("solve", "Compute Nash, Pareto or strong equilibria");
   std::string game_path = "-";
   std::string mode = "nash";
   std::string method = "auto";
   std::string decomp_path;
   std::string root_name;
   bool want_all = false;
   bool want_one = false;
   bool want_count = false;
   bool want_exists = false;
   solve->add_option("GAME", game_path, "Game file, '-' for stdin");
   solve->add_option("--mode", mode)->check(CLI::IsMember({"nash", "pareto", "strong"}));
   auto* all_flag = solve->add_flag("--all", want_all, "Emit every equilibrium (default)");
   auto* one_flag = solve->add_flag("--one", want_one, "Emit one equilibrium");
   auto* count_flag = solve->add_flag("--count", want_count, "Print the number of equilibria");
   auto* exists_flag = solve->add_flag("--exists", want_exists, "Exit 0 when an equilibrium exists, 1 otherwise");
   all_flag->excludes(one_flag, count_flag, exists_flag);
   one_flag->excludes(count_flag, exists_flag);
   count_flag->excludes(exists_flag);
   solve->add_option("--method", method)->check(CLI::IsMember({"auto", "acyclic", "hypertree", "brute"}));
   solve->add_option("--decomp", decomp_path, "Decomposition file to evaluate on");
   solve->add_option("--root", root_name, "Player whose node roots the evaluation tree");

   // check
   auto* check = app.add_subcommand("check", "Decide whether a profile is an equilibrium");
   std::string profile_text;
   check->add_option("GAME", game_path, "Game file, '-' for stdin")->required();
   check->add_option("PROFILE", profile_text, "Profile file, JSON object or A=x,B=y")->required();
   check->add_option("--mode", mode)->check(CLI::IsMember({"nash", "pareto", "strong"}));
   check->add_option("--method", method)->check(CLI::IsMember({"auto", "acyclic", "hypertree", "brute"}));

   // decompose
   auto* decompose = app.add_subcommand("decompose", "Build a join tree, tree or hypertree decomposition");
   std::string decomp_kind = "hypertree";
   std::string out_path;
   decompose->add_option("GAME", game_path, "Game file, '-' for stdin");
   decompose->add_option("--kind", decomp_kind)->check(CLI::IsMember({"jointree", "tree", "hypertree"}));
   decompose->add_option("--out", out_path, "Write here instead of stdout");

   // validate
   auto* validate = app.add_subcommand("validate", "Check a decomposition against a game");
   validate->add_option("GAME", game_path, "Game file, '-' for stdin")->required();
   validate->add_option("DECOMP", decomp_path, "Decomposition file")->required();

   // stats
   auto* stats = app.add_subcommand("stats", "Size, intricacy and structural widths");
   stats->add_option("GAME", game_path, "Game file, '-' for stdin");

   // gen
   auto* gen = app.add_subcommand("gen", "Generate a game");
   std::string gen_kind;
   std::string input_path;
   std::optional< std::uint64_t > seed;
   bool no_duplicator = false;
   std::string rule = "published";
   RandomGameOptions random_options;
   std::size_t formula_variables = 3;
   std::size_t formula_terms = 4;
   gen->add_option("KIND", gen_kind)
      ->required()
      ->check(CLI::IsMember({"friends", "friends-prime", "sat31", "sat32", "qbf37", "qbf38", "treesat", "random"}));
   gen->add_option("--input", input_path, "Formula file (DIMACS CNF or R2QBF JSON), '-' for stdin");
   gen->add_option("--seed", seed, "Seed for random games and, without --input, random formulas");
   gen->add_flag("--no-duplicator", no_duplicator, "qbf37: build the game without the duplicator player");
   gen->add_option("--rule", rule, "published; or unanimous (qbf37), parent-required (treesat)")
      ->check(CLI::IsMember({"published", "unanimous", "parent-required"}));
   gen->add_option("--players", random_options.players);
   gen->add_option("--max-actions", random_options.max_actions);
   gen->add_option("--max-neighbors", random_options.max_neighbors);
   gen->add_option("--payoff-min", random_options.payoff_min);
   gen->add_option("--payoff-max", random_options.payoff_max);
   gen->add_option("--variables", formula_variables, "Random formulas: variables (per block for R2QBF)");
   gen->add_option("--terms", formula_terms, "Random formulas: clauses or disjuncts");

   std::vector< std::string > argv_tail(args.rbegin(), args.rend());
   try {
      app.parse(argv_tail);
   } catch(const CLI::ParseError& e) {
      return app.exit(e, out, err) == 0 ? 0 : 2;
   }

   try {
      detail::Settings settings;
      settings.guard = guard_option.value_or(detail::guard_from_environment());

      auto load_game = [&] { return io::parse_game(detail::read_source(game_path, in)); };

      if(solve->parsed()) {
         auto source = load_game();
         auto game = detail::as_graphical(source);
         settings.method = detail::parse_method(method);
         if(not decomp_path.empty()) {
            settings.decomp = io::parse_decomp(game.roster(), detail::read_source(decomp_path, in));
         }
         if(not root_name.empty()) {
            settings.root = game.roster().player(root_name);
         }
         auto query = want_one ? Query::one : want_count ? Query::count : want_exists ? Query::exists : Query::all;
         auto answer = detail::solve(game, detail::parse_kind(mode), query, settings);
         if(query == Query::count) {
            out << answer.count->str() << "\n";
            return 0;
         }
         out << std::visit([&](const auto& g) { return io::serialize_equilibria(g, answer.set); }, source);
         return query == Query::exists and answer.set.profiles.empty() ? 1 : 0;
      }

      if(check->parsed()) {
         auto source = load_game();
         auto game = detail::as_graphical(source);
         settings.method = detail::parse_method(method);
         std::string text = profile_text;
         if(std::filesystem::is_regular_file(profile_text)) {
            text = detail::read_source(profile_text, in);
         }
         auto x = io::parse_profile(game, text);
         auto kind = detail::parse_kind(mode);
         EquilibriumSet verdict{kind, {}};
         std::optional< io::WitnessReport > witness;
         if(auto w = detail::unilateral_witness(game, x)) {
            witness = io::WitnessReport{x, *w};
         } else if(kind == EquilibriumKind::pareto) {
            auto ne = detail::solve(game, EquilibriumKind::nash, Query::all, settings).set;
            if(is_pareto_check(game, x, ne)) {
               verdict.profiles.push_back(x);
            }
         } else if(kind == EquilibriumKind::strong) {
            auto plan = detail::plan_for(game, settings, EquilibriumKind::strong);
            auto result =
               plan.brute ? brute_strong_check(game, x, settings.guard) : strong_check_acyclic(game, *plan.join_tree, x);
            if(result.strong) {
               verdict.profiles.push_back(x);
            } else {
               witness = io::WitnessReport{x, *result.witness};
            }
         } else {
            verdict.profiles.push_back(x);
         }
         out << std::visit([&](const auto& g) { return io::serialize_equilibria(g, verdict, witness); }, source);
         return verdict.profiles.empty() ? 1 : 0;
      }

      if(decompose->parsed()) {
         auto game = detail::as_graphical(load_game());
         auto kind = io::parse_decomp_kind(decomp_kind);
         std::optional< io::AnyDecomposition > d;
         switch(kind) {
         case io::DecompKind::jointree:
            if(auto jt = join_tree(dependency_hypergraph(game))) {
               d = *jt;
            } else {
               throw InapplicableError("the dependency hypergraph is cyclic, so no join tree exists");
            }
            break;
         case io::DecompKind::tree: d = tree_decomposition_heuristic(dependency_graph(game)); break;
         case io::DecompKind::hypertree:
            d = td_to_hd(game, tree_decomposition_heuristic(dependency_graph(game)));
            break;
         }
         auto text = io::serialize_decomp(game.roster(), *d);
         if(out_path.empty()) {
            out << text;
         } else {
            std::ofstream file(out_path, std::ios::binary);
            if(not(file << text)) {
               throw InputError("cannot write '" + out_path + "'");
            }
         }
         return 0;
      }

      if(validate->parsed()) {
         auto game = detail::as_graphical(load_game());
         auto d = io::parse_decomp(game.roster(), detail::read_source(decomp_path, in));
         const auto& names = game.roster().player_names();
         io::Json report = io::Json::object();
         if(const auto* jt = std::get_if< JoinTree >(&d)) {
            validate_join_tree(dependency_hypergraph(game), *jt, names);
            report["complete"] = true;
            report["format"] = "validation/1";
            report["kind"] = "jointree";
            report["valid"] = true;
            report["width"] = 1;
         } else if(const auto* td = std::get_if< TreeDecomposition >(&d)) {
            auto width = validate_tree_decomposition(dependency_graph(game), *td, names);
            report["format"] = "validation/1";
            report["kind"] = "tree";
            report["valid"] = true;
            report["width"] = width;
         } else {
            auto r = validate_hypertree_decomposition(dependency_hypergraph(game), std::get< HypertreeDecomposition >(d), names);
            report["complete"] = r.complete;
            report["format"] = "validation/1";
            report["kind"] = "hypertree";
            report["valid"] = true;
            report["width"] = r.width;
         }
         out << report.dump(2) << "\n";
         return 0;
      }

      if(stats->parsed()) {
         auto source = load_game();
         auto m = std::visit([](const auto& g) { return metrics(g); }, source);
         auto game = detail::as_graphical(source);
         auto jt = join_tree(dependency_hypergraph(game));
         auto td = tree_decomposition_heuristic(dependency_graph(game));
         io::Json report = io::Json::object();
         report["acyclic"] = jt.has_value();
         report["format"] = "stats/1";
         report["hypertree_width_upper"] = jt ? std::size_t(1) : td.width() + 1;
         report["intricacy"] = detail::fixed(m.intricacy, 6);
         report["max_act"] = m.max_act;
         report["max_neigh"] = m.max_neigh;
         report["players"] = game.player_count();
         report["size_norm"] = m.size_norm;
         report["treewidth_heuristic"] = td.width();
         out << report.dump(2) << "\n";
         return 0;
      }

      if(gen->parsed()) {
         auto cnf_input = [&] {
            if(input_path.empty() and seed) {
               return random_cnf(*seed, formula_variables, formula_terms);
            }
            return io::parse_cnf_dimacs(detail::read_source(input_path, in));
         };
         auto qbf_input = [&] {
            if(input_path.empty() and seed) {
               return random_r2qbf(*seed, formula_variables, formula_variables, formula_terms);
            }
            return io::parse_r2qbf(detail::read_source(input_path, in));
         };
         if((rule == "unanimous" and gen_kind != "qbf37") or (rule == "parent-required" and gen_kind != "treesat")) {
            throw InputError("--rule " + rule + " does not apply to " + gen_kind);
         }
         GnfGame game;
         if(gen_kind == "friends") {
            game = gen_friends(FriendsVariant::base);
         } else if(gen_kind == "friends-prime") {
            game = gen_friends(FriendsVariant::prime);
         } else if(gen_kind == "sat31") {
            game = gen_sat_clausevar(cnf_input());
         } else if(gen_kind == "sat32") {
            game = gen_sat_acyclic(cnf_input());
         } else if(gen_kind == "treesat") {
            game = gen_tree_sat(
               cnf_input(), rule == "parent-required" ? CheckerRule::parent_required : CheckerRule::published);
         } else if(gen_kind == "qbf37") {
            auto xi = qbf_input();
            game = gen_qbf_challenger(
               is_padded(xi) ? xi : pad_r2qbf(xi), not no_duplicator,
               rule == "unanimous" ? ChallengerRule::unanimous : ChallengerRule::published);
         } else if(gen_kind == "qbf38") {
            game = gen_qbf_acyclic(qbf_input());
         } else {
            random_options.seed = seed.value_or(1);
            game = gen_random(random_options);
         }
         out << io::serialize_game(game);
         return 0;
      }
   } catch(const Error& e) {
      err << "nashcsp: " << e.what() << "\n";
      return e.exit_code();
   } catch(const std::bad_alloc&) {
      err << "nashcsp: out of memory\n";
      return 4;
   }
   return 2;
}

}  // namespace nashcsp::cli
