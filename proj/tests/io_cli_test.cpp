#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "nashcsp/cli.hpp"

using namespace nashcsp;

namespace {

struct Run {
   int code = -1;
   std::string out;
   std::string err;
};

Run run(const std::vector< std::string >& args, const std::string& stdin_text = {})
{
   std::istringstream in(stdin_text);
   std::ostringstream out, err;
   Run r;
   r.code = cli::cli_main(args, in, out, err);
   r.out = out.str();
   r.err = err.str();
   return r;
}

/// Scratch directory removed at the end of each test.
class TempDir {
public:
   TempDir()
   {
      auto base = std::filesystem::temp_directory_path();
      for(int i = 0;; ++i) {
         path_ = base / ("nashcsp_io_test_" + std::to_string(::getpid()) + "_" + std::to_string(i));
         if(std::filesystem::create_directory(path_)) {
            break;
         }
      }
   }
   ~TempDir() { std::filesystem::remove_all(path_); }

   std::string write(const std::string& name, const std::string& text) const
   {
      auto p = path_ / name;
      std::ofstream(p, std::ios::binary) << text;
      return p.string();
   }

private:
   std::filesystem::path path_;
};

std::string friends_text()
{
   return io::serialize_game(gen_friends());
}

std::vector< Profile > profiles_of(const GnfGame& g, const std::string& text)
{
   return io::parse_equilibria(g, text).first.profiles;
}

Profile named(const GnfGame& g, const Assignment& a)
{
   return profile_from_names(g, a);
}

}  // namespace

// ---------------------------------------------------------------------------
// File formats
// ---------------------------------------------------------------------------

TEST(GameFile, RoundTripsRandomGamesAndSnf)
{
   for(std::uint64_t seed = 1; seed <= 40; ++seed) {
      auto g = gen_random(fixtures::random_options(seed));
      auto text = io::serialize_game(g);
      EXPECT_EQ(io::parse_gnf_game(text), g) << seed;
      EXPECT_EQ(io::serialize_game(io::parse_game(text)), text) << seed;
   }
   auto s = to_snf(gen_friends());
   auto text = io::serialize_game(s);
   auto back = io::parse_game(text);
   ASSERT_TRUE(std::holds_alternative< SnfGame >(back));
   EXPECT_EQ(std::get< SnfGame >(back), s);
}

TEST(GameFile, FriendsFileGivesTheFriendsRelations)
{
   auto g = io::parse_gnf_game(friends_text());
   auto reference = gen_friends();
   for(PlayerIndex p = 0; p < g.player_count(); ++p) {
      EXPECT_EQ(nash_constraint(g, p), nash_constraint(reference, p)) << g.player_name(p);
   }
}

TEST(GameFile, BadPayoffNamesTheEntry)
{
   auto doc = io::Json::parse(friends_text());
   doc["utilities"]["R"][1]["payoff"] = "abc";
   try {
      io::parse_game(doc.dump());
      FAIL() << "accepted a non-rational payoff";
   } catch(const InputError& e) {
      std::string msg = e.what();
      EXPECT_NE(msg.find("'R'"), std::string::npos) << msg;
      EXPECT_NE(msg.find("entry 1"), std::string::npos) << msg;
   }
   doc["utilities"]["R"][1]["payoff"] = 1.5;
   EXPECT_THROW(io::parse_game(doc.dump()), InputError);
   doc["utilities"]["R"][1]["payoff"] = "3/2";
   EXPECT_NO_THROW(io::parse_game(doc.dump()));
}

TEST(GameFile, SchemaErrors)
{
   EXPECT_THROW(io::parse_game("{"), InputError);
   EXPECT_THROW(io::parse_game(R"({"format": "gnf-game/2"})"), InputError);
   EXPECT_THROW(io::parse_game(R"({"format": "gnf-game/1", "players": ["A"]})"), InputError);
   auto doc = io::Json::parse(friends_text());
   doc["neighbors"]["R"] = {"Z"};
   EXPECT_THROW(io::parse_game(doc.dump()), InputError);
}

TEST(ProfileText, AcceptsObjectAndPairs)
{
   auto g = gen_friends();
   auto a = io::parse_profile(g, "F=o, P=o, R=m, G=o, M=m");
   auto b = io::parse_profile(g, R"({"profile": {"F": "o", "P": "o", "R": "m", "G": "o", "M": "m"}})");
   EXPECT_EQ(a, b);
   EXPECT_THROW(io::parse_profile(g, "F=o"), InputError);
   EXPECT_THROW(io::parse_profile(g, "F"), InputError);
}

TEST(DecompFile, RoundTripsAndRevalidates)
{
   for(std::uint64_t seed = 1; seed <= 30; ++seed) {
      auto g = gen_random(fixtures::random_options(seed));
      auto h = dependency_hypergraph(g);
      auto td = tree_decomposition_heuristic(dependency_graph(g));
      auto hd = td_to_hd(g, td);
      auto text = io::serialize_decomp(g.roster(), hd);
      auto back = io::parse_decomp(g.roster(), text);
      ASSERT_TRUE(std::holds_alternative< HypertreeDecomposition >(back));
      EXPECT_EQ(std::get< HypertreeDecomposition >(back), hd);
      EXPECT_TRUE(validate_hypertree_decomposition(h, std::get< HypertreeDecomposition >(back)).complete);
      auto td_back = io::parse_decomp(g.roster(), io::serialize_decomp(g.roster(), td));
      EXPECT_EQ(std::get< TreeDecomposition >(td_back), td);
      if(auto jt = join_tree(h)) {
         auto jt_back = io::parse_decomp(g.roster(), io::serialize_decomp(g.roster(), *jt));
         EXPECT_EQ(std::get< JoinTree >(jt_back), *jt);
      }
   }
}

TEST(DecompFile, HandWrittenFriendsPrimeFileValidates)
{
   auto g = gen_friends(FriendsVariant::prime);
   const std::string text = R"({
      "format": "decomp/1",
      "kind": "hypertree",
      "nodes": [
         {"id": 10, "children": [20, 30, 40, 50], "chi": ["L", "G", "P", "M", "F", "R"], "lambda": ["L", "F"]},
         {"id": 20, "children": [], "chi": ["G", "P", "F"], "lambda": ["G"]},
         {"id": 30, "children": [], "chi": ["P", "F"], "lambda": ["P"]},
         {"id": 40, "children": [], "chi": ["R", "F"], "lambda": ["R"]},
         {"id": 50, "children": [], "chi": ["M", "R"], "lambda": ["M"]}
      ]
   })";
   auto d = io::parse_decomp(g.roster(), text);
   auto report = validate_hypertree_decomposition(dependency_hypergraph(g), std::get< HypertreeDecomposition >(d));
   EXPECT_EQ(report.width, 2U);
   EXPECT_TRUE(report.complete);
   EXPECT_THROW(io::parse_decomp(g.roster(), R"({"format": "decomp/1", "kind": "path", "nodes": []})"), InputError);
   EXPECT_THROW(
      io::parse_decomp(g.roster(), R"({"format": "decomp/1", "kind": "tree", "nodes": [{"id": "a", "chi": []}]})"),
      InputError);
}

TEST(EquilibriaFile, RoundTripsWithWitness)
{
   auto g = gen_friends();
   auto ne = brute_nash(g);
   auto opera = named(g, {{"F", "o"}, {"P", "o"}, {"R", "m"}, {"G", "o"}, {"M", "m"}});
   auto refutation = brute_strong_check(g, opera);
   ASSERT_TRUE(refutation.witness.has_value());
   io::WitnessReport report{opera, *refutation.witness};
   auto text = io::serialize_equilibria(g, ne, report);
   auto [set, witness] = io::parse_equilibria(g, text);
   EXPECT_EQ(set, ne);
   ASSERT_TRUE(witness.has_value());
   EXPECT_EQ(witness->base, opera);
   EXPECT_EQ(witness->witness, *refutation.witness);
   EXPECT_EQ(io::serialize_equilibria(g, set, witness), text);
}

TEST(EquilibriaFile, ProfilesFollowDeclaredPlayerOrder)
{
   auto g = gen_friends();
   auto doc = io::Json::parse(io::serialize_equilibria(g, brute_nash(g)));
   std::vector< std::string > keys;
   for(const auto& [k, v] : doc["profiles"][0].items()) {
      keys.push_back(k);
   }
   EXPECT_EQ(keys, g.roster().player_names());
}

TEST(FormulaFiles, DimacsBasics)
{
   auto phi = io::parse_cnf_dimacs("p cnf 2 1 \n 1 2 0");
   EXPECT_EQ(phi, (Cnf{{"X1", "X2"}, {{{0, true}, {1, true}}}}));
   auto commented = io::parse_cnf_dimacs("c header\np cnf 3 2\n1 -3 0\n2\n0\n%\n0\n");
   EXPECT_EQ(commented.clauses.size(), 2U);
   EXPECT_EQ(commented.clauses[1], (std::vector< Literal >{{1, true}}));
   EXPECT_EQ(io::parse_cnf_dimacs(io::serialize_cnf_dimacs(commented)), commented);
   EXPECT_THROW(io::parse_cnf_dimacs("p dnf 2 1\n1 0\n"), InputError);
   EXPECT_THROW(io::parse_cnf_dimacs("p cnf 2 1\n3 0\n"), InputError);
   EXPECT_THROW(io::parse_cnf_dimacs("p cnf 2 2\n1 0\n"), InputError);
   EXPECT_THROW(io::parse_cnf_dimacs("1 2 0\n"), InputError);
}

TEST(FormulaFiles, RunningQbfExample)
{
   const std::string text = R"({
      "exists": ["a1", "a2", "a3"],
      "forall": ["b1", "b2", "b3", "b4", "b5"],
      "disjuncts": [["a1", "a2"], ["a1", "a3"], ["a1", "-b1"], ["b1"], ["-b2", "-b3"], ["b1", "b3"], ["b3", "b4"], ["b5"]]
   })";
   auto xi = io::parse_r2qbf(text);
   EXPECT_EQ(xi.exists.size(), 3U);
   EXPECT_EQ(xi.forall.size(), 5U);
   EXPECT_EQ(xi.disjuncts.size(), 8U);
   EXPECT_TRUE(eval_r2qbf(xi));
   EXPECT_EQ(io::parse_r2qbf(io::serialize_r2qbf(xi)), xi);
   EXPECT_THROW(io::parse_r2qbf(R"({"exists": ["a"], "forall": ["b"], "disjuncts": [["c"]]})"), InputError);
   EXPECT_THROW(io::parse_r2qbf(R"({"exists": ["a"], "forall": ["a"], "disjuncts": [["a"]]})"), InputError);
}

// Property: every random formula survives a serializer round trip.
TEST(FormulaFilesProperty, RoundTrips)
{
   for(std::uint64_t seed = 1; seed <= 40; ++seed) {
      auto phi = random_cnf(seed, 1 + seed % 5, 1 + seed % 6);
      EXPECT_EQ(io::parse_cnf_dimacs(io::serialize_cnf_dimacs(phi)), phi) << seed;
      auto xi = random_r2qbf(seed, 1 + seed % 3, 1 + seed % 2, 1 + seed % 8);
      EXPECT_EQ(io::parse_r2qbf(io::serialize_r2qbf(xi)), xi) << seed;
   }
}

// ---------------------------------------------------------------------------
// Command line
// ---------------------------------------------------------------------------

TEST(Cli, FriendsNashParetoStrong)
{
   auto gen = run({"gen", "friends"});
   ASSERT_EQ(gen.code, 0) << gen.err;
   EXPECT_EQ(gen.out, friends_text());
   auto g = gen_friends();

   auto nash = run({"solve", "--mode", "nash", "--all"}, gen.out);
   ASSERT_EQ(nash.code, 0) << nash.err;
   EXPECT_EQ(profiles_of(g, nash.out), brute_nash(g).profiles);
   EXPECT_EQ(profiles_of(g, nash.out).size(), 4U);

   std::vector< Profile > movies{
      named(g, {{"F", "m"}, {"P", "m"}, {"R", "o"}, {"G", "m"}, {"M", "o"}}),
      named(g, {{"F", "m"}, {"P", "m"}, {"R", "o"}, {"G", "o"}, {"M", "o"}}),
   };
   std::sort(movies.begin(), movies.end());
   for(const char* mode : {"pareto", "strong"}) {
      auto r = run({"solve", "-", "--mode", mode}, gen.out);
      ASSERT_EQ(r.code, 0) << r.err;
      EXPECT_EQ(profiles_of(g, r.out), movies) << mode;
      EXPECT_EQ(io::parse_equilibria(g, r.out).first.kind, cli::detail::parse_kind(mode));
   }
   EXPECT_EQ(run({"solve", "--mode", "strong", "--exists"}, gen.out).code, 0);
   EXPECT_EQ(run({"solve", "--count"}, gen.out).out, "4\n");
   EXPECT_EQ(run({"solve", "--mode", "strong", "--count"}, gen.out).out, "2\n");
   auto one = run({"solve", "--one"}, gen.out);
   EXPECT_EQ(profiles_of(g, one.out), std::vector< Profile >{brute_nash(g).profiles.front()});
}

TEST(Cli, CheckOperaProfileGivesAWitness)
{
   TempDir dir;
   auto game = dir.write("friends.json", friends_text());
   auto g = gen_friends();
   auto r = run({"check", game, "F=o,P=o,R=m,G=o,M=m", "--mode", "strong"});
   EXPECT_EQ(r.code, 1) << r.err;
   auto [set, witness] = io::parse_equilibria(g, r.out);
   EXPECT_TRUE(set.profiles.empty());
   ASSERT_TRUE(witness.has_value());
   EXPECT_TRUE(verify_witness(g, witness->base, witness->witness));

   EXPECT_EQ(run({"check", game, "F=o,P=o,R=m,G=o,M=m", "--mode", "nash"}).code, 0);
   EXPECT_EQ(run({"check", game, "F=o,P=o,R=m,G=o,M=m", "--mode", "pareto"}).code, 1);
   auto profile_file = dir.write("movie.json", R"({"F": "m", "P": "m", "R": "o", "G": "m", "M": "o"})");
   EXPECT_EQ(run({"check", game, profile_file, "--mode", "strong"}).code, 0);

   // R alone is better off switching, so a nash check refutes with one player
   auto bad = run({"check", game, "F=o,P=o,R=o,G=o,M=m"});
   EXPECT_EQ(bad.code, 1);
   auto refuted = io::parse_equilibria(g, bad.out).second;
   ASSERT_TRUE(refuted.has_value());
   EXPECT_EQ(refuted->witness.coalition.size(), 1U);
   EXPECT_TRUE(verify_witness(g, refuted->base, refuted->witness));
}

TEST(Cli, PenniesHasNoEquilibrium)
{
   auto pennies = io::serialize_game(fixtures::pennies());
   auto r = run({"solve", "--exists"}, pennies);
   EXPECT_EQ(r.code, 1);
   EXPECT_TRUE(profiles_of(fixtures::pennies(), r.out).empty());
   EXPECT_EQ(run({"solve", "--count"}, pennies).out, "0\n");
   EXPECT_EQ(run({"solve", "--mode", "pareto", "--exists"}, pennies).code, 1);
}

TEST(Cli, ExitCodes)
{
   auto prime = run({"gen", "friends-prime"}).out;
   auto r = run({"solve", "--method", "acyclic"}, prime);
   EXPECT_EQ(r.code, 3);
   EXPECT_TRUE(r.out.empty());
   EXPECT_FALSE(r.err.empty());
   EXPECT_EQ(run({"solve", "--mode", "strong", "--method", "hypertree"}, prime).code, 3);
   EXPECT_EQ(run({"decompose", "--kind", "jointree"}, prime).code, 3);

   EXPECT_EQ(run({"--guard", "10", "solve", "--method", "brute"}, friends_text()).code, 4);
   EXPECT_EQ(run({"--guard", "32", "solve", "--method", "brute"}, friends_text()).code, 0);
   auto chain = io::serialize_game(fixtures::chain(21));
   EXPECT_EQ(run({"solve", "--method", "brute"}, chain).code, 4);
   EXPECT_EQ(run({"solve", "--count"}, chain).out, "2\n");

   EXPECT_EQ(run({"solve"}, "{ not json").code, 2);
   EXPECT_EQ(run({"solve", "/nonexistent/game.json"}).code, 2);
   EXPECT_EQ(run({"solve", "--mode", "ideal"}, friends_text()).code, 2);
   EXPECT_EQ(run({"solve", "--all", "--one"}, friends_text()).code, 2);
   EXPECT_EQ(run({"solve", "--root", "Z"}, friends_text()).code, 2);
   EXPECT_EQ(run({"gen", "qbf38", "--seed", "1", "--rule", "unanimous"}).code, 2);
   EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, GuardFromEnvironment)
{
   ::setenv(cli::kGuardVariable, "10", 1);
   EXPECT_EQ(run({"solve", "--method", "brute"}, friends_text()).code, 4);
   EXPECT_EQ(run({"--guard", "100", "solve", "--method", "brute"}, friends_text()).code, 0);
   ::setenv(cli::kGuardVariable, "lots", 1);
   EXPECT_EQ(run({"solve"}, friends_text()).code, 2);
   ::unsetenv(cli::kGuardVariable);
}

TEST(Cli, DecompositionFilesDriveTheSolver)
{
   TempDir dir;
   auto prime_text = run({"gen", "friends-prime"}).out;
   auto game = dir.write("prime.json", prime_text);
   auto g = io::parse_gnf_game(prime_text);

   auto hd = run({"decompose", game, "--kind", "hypertree"});
   ASSERT_EQ(hd.code, 0) << hd.err;
   auto hd_file = dir.write("prime.hd.json", hd.out);
   auto check = run({"validate", game, hd_file});
   ASSERT_EQ(check.code, 0) << check.err;
   auto report = io::Json::parse(check.out);
   EXPECT_EQ(report["kind"], "hypertree");
   EXPECT_EQ(report["valid"], true);
   EXPECT_EQ(report["complete"], true);

   auto via_hd = run({"solve", game, "--method", "hypertree", "--decomp", hd_file});
   ASSERT_EQ(via_hd.code, 0) << via_hd.err;
   EXPECT_EQ(profiles_of(g, via_hd.out), brute_nash(g).profiles);

   auto td_file = dir.write("prime.td.json", run({"decompose", game, "--kind", "tree"}).out);
   EXPECT_EQ(run({"solve", game, "--method", "hypertree", "--decomp", td_file}).code, 2);
   auto via_td = run({"solve", game, "--decomp", td_file});
   EXPECT_EQ(via_td.out, via_hd.out);

   auto out_file = (std::filesystem::path(hd_file).parent_path() / "written.json").string();
   EXPECT_EQ(run({"decompose", game, "--out", out_file}).code, 0);
   std::ifstream written(out_file);
   EXPECT_EQ(std::string(std::istreambuf_iterator< char >(written), {}), hd.out);

   // a join tree for one game is not a decomposition of another
   auto friends = dir.write("friends.json", friends_text());
   auto jt_file = dir.write("friends.jt.json", run({"decompose", friends, "--kind", "jointree"}).out);
   EXPECT_EQ(run({"validate", friends, jt_file}).code, 0);
   auto broken = io::Json::parse(run({"decompose", friends, "--kind", "jointree"}).out);
   std::swap(broken["nodes"][0]["owner"], broken["nodes"][1]["owner"]);
   auto broken_file = dir.write("broken.jt.json", broken.dump());
   auto refused = run({"solve", friends, "--method", "acyclic", "--decomp", broken_file});
   if(refused.code == 0) {
      // swapping two owners can leave a valid tree; then the answer must not change
      EXPECT_EQ(profiles_of(gen_friends(), refused.out), brute_nash(gen_friends()).profiles);
   } else {
      EXPECT_EQ(refused.code, 2);
   }
}

TEST(Cli, Stats)
{
   auto r = run({"stats"}, friends_text());
   ASSERT_EQ(r.code, 0) << r.err;
   auto doc = io::Json::parse(r.out);
   EXPECT_EQ(doc["format"], "stats/1");
   EXPECT_EQ(doc["players"], 5);
   EXPECT_EQ(doc["acyclic"], true);
   EXPECT_EQ(doc["size_norm"], 50);
   EXPECT_EQ(doc["hypertree_width_upper"], 1);
   EXPECT_EQ(doc["treewidth_heuristic"], 2);
   auto snf = run({"stats"}, io::serialize_game(to_snf(gen_friends())));
   EXPECT_EQ(io::Json::parse(snf.out)["size_norm"], 32 * 5 + 5 * 7);
}

TEST(Cli, GeneratorsFromFormulaFiles)
{
   TempDir dir;
   auto cnf = dir.write("phi.cnf", "p cnf 2 1\n1 2 0\n");
   for(const char* kind : {"sat31", "sat32"}) {
      auto game = run({"gen", kind, "--input", cnf});
      ASSERT_EQ(game.code, 0) << game.err;
      EXPECT_EQ(run({"solve", "--count"}, game.out).out, "3\n") << kind;
   }
   auto unsat = dir.write("unsat.cnf", "p cnf 2 4\n1 0\n2 0\n-1 0\n-2 0\n");
   auto published = run({"gen", "treesat", "--input", unsat});
   auto corrected = run({"gen", "treesat", "--input", unsat, "--rule", "parent-required"});
   ASSERT_EQ(corrected.code, 0) << corrected.err;
   EXPECT_NE(published.out, corrected.out);
   EXPECT_EQ(run({"solve", "--exists"}, corrected.out).code, 0);
   EXPECT_EQ(run({"solve", "--mode", "strong", "--exists"}, corrected.out).code, 1);

   auto qbf = dir.write("xi.json", R"({"exists": ["a"], "forall": ["b"], "disjuncts": [["a", "b"], ["a", "-b"]]})");
   auto acyclic = run({"gen", "qbf38", "--input", qbf});
   ASSERT_EQ(acyclic.code, 0) << acyclic.err;
   EXPECT_EQ(run({"solve", "--mode", "strong", "--exists"}, acyclic.out).code, 0);
   auto challenger = run({"gen", "qbf37", "--input", qbf, "--rule", "unanimous"});
   ASSERT_EQ(challenger.code, 0) << challenger.err;
   EXPECT_EQ(run({"solve", "--mode", "strong", "--exists"}, challenger.out).code, 0);
   EXPECT_EQ(run({"gen", "qbf37", "--input", qbf, "--no-duplicator"}).code, 0);
}

TEST(Cli, RandomGenerationIsDeterministic)
{
   auto a = run({"gen", "random", "--seed", "7", "--players", "5"});
   ASSERT_EQ(a.code, 0) << a.err;
   EXPECT_EQ(a.out, run({"gen", "random", "--seed", "7", "--players", "5"}).out);
   EXPECT_NE(a.out, run({"gen", "random", "--seed", "8", "--players", "5"}).out);
   EXPECT_EQ(run({"gen", "sat31", "--seed", "3"}).out, run({"gen", "sat31", "--seed", "3"}).out);
}

TEST(Cli, RootChoiceKeepsTheAnswer)
{
   auto all = run({"solve"}, friends_text()).out;
   for(const char* root : {"F", "G", "M", "P", "R"}) {
      EXPECT_EQ(run({"solve", "--root", root}, friends_text()).out, all) << root;
   }
}

// Property: brute force and the automatic pipeline print the same bytes for
// every mode on guarded random inputs, and repeated runs are identical.
TEST(CliProperty, BruteAndAutoAgree)
{
   for(std::uint64_t seed = 1; seed <= 40; ++seed) {
      auto text = io::serialize_game(gen_random(fixtures::random_options(seed)));
      for(const char* mode : {"nash", "pareto", "strong"}) {
         auto automatic = run({"solve", "--mode", mode}, text);
         auto brute = run({"solve", "--mode", mode, "--method", "brute"}, text);
         ASSERT_EQ(automatic.code, 0) << automatic.err;
         EXPECT_EQ(automatic.out, brute.out) << seed << " " << mode;
         EXPECT_EQ(run({"solve", "--mode", mode}, text).out, automatic.out);
         EXPECT_EQ(run({"solve", "--mode", mode, "--count"}, text).out, run({"solve", "--mode", mode, "--count", "--method", "brute"}, text).out);
      }
   }
}
