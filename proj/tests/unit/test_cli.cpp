#include <cli/dispatch.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace isoring;
using isoring::io::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args, std::string const& stdin_text = "") {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    int code = cli::dispatch(args, out, err, in);
    return {code, out.str(), err.str()};
}

std::vector<std::string> words(std::string const& s) {
    std::vector<std::string> v;
    std::istringstream is(s);
    std::string w;
    while (is >> w) v.push_back(w);
    return v;
}

std::string slurp(std::string const& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct Golden {
    char const* name;
    std::vector<std::string> args;
};

std::vector<Golden> goldens() {
    return {
        {"gfp_k4_n4", words("gfp --k 4 --n 4")},
        {"gfp_k3_upto", words("gfp --k 3 --n 4 --upto")},
        {"gfp_closed", words("gfp --k 3 --n 4 --upto --closed")},
        {"glp_k3_upto", words("glp --k 3 --n 4 --upto")},
        {"glp_lucas", words("glp --core 1,1 --n 6 --upto")},
        {"weighted_hook", words("weighted --k 3 --n 3 --scheme hook:1 --upto")},
        {"log_naturals", words("log --seq 1,2,3,4,5")},
        {"exp_twos", words("exp --seq 0,2,2,2,2")},
        {"conv_inverse_ones", words("conv-inverse --seq 1,1,1,1,1")},
        {"conv_power", words("conv-power --seq 1,1,1,1 --r 2")},
        {"companion_k3", words("companion --k 3")},
        {"inf_companion_fib", words("inf-companion --core 1,1 --rows=-3..2")},
        {"different_k3", words("different --k 3")},
        {"different_rows", words("different --k 2 --rows 0..3")},
        {"discriminant_k2", words("discriminant --k 2")},
        {"discriminant_k3", words("discriminant --k 3")},
        {"schur_32", words("schur --shape 3,2")},
        {"char_31", words("char --shape 3,1")},
        {"char_table_4", words("char-table --n 4")},
        {"char_table_3_csv", words("char-table --n 3 --format csv")},
        {"polya_indicator_d4", words("polya indicator --group dihedral:4")},
        {"polya_indicator_d4_t", words("polya indicator --group dihedral:4 --in-t")},
        {"polya_count_d4", words("polya count --group dihedral:4 --colors 2")},
        {"polya_pattern_d4", words("polya pattern --group dihedral:4 --multiset x:2,y:2")},
        {"polya_inventory_d4", words("polya inventory --group dihedral:4 --names x,y")},
        {"arith_rep_sigma3", words("arith rep --fn sigma --prime 3 --n 6")},
        {"arith_rep_catalan", words("arith rep --fn catalan --n 6")},
        {"arith_rep_mu2", words("arith rep --fn mu --prime 2 --n 5")},
        {"arith_core", words("arith core --values 1,3,7,15,31")},
        {"arith_dlog_zeta", words("arith dlog --fn zeta --N 12")},
        {"arith_trig_tau", words("arith trig --fn tau --prime 2 --n 3")},
        {"arith_trig_catalan", words("arith trig --fn catalan --n 3")},
        {"arith_check_tau", words("arith check --fn tau --N 40")},
        {"arith_check_catalan", words("arith check --fn catalan --N 20")},
        {"gfp_json", words("gfp --core 1,1 --n 3 --format json")},
    };
}

} // namespace

TEST(Cli, GoldenOutputs) {
    for (auto const& g : goldens()) {
        auto r = run(g.args);
        EXPECT_EQ(r.code, 0) << g.name << ": " << r.err;
        EXPECT_EQ(r.out, slurp(std::string(ISORING_GOLDEN_DIR) + "/" + g.name + ".txt")) << g.name;
    }
}

TEST(Cli, OutputIsDeterministic) {
    for (auto const& g : goldens()) EXPECT_EQ(run(g.args).out, run(g.args).out) << g.name;
}

TEST(Cli, EveryCommandHasAJsonEnvelope) {
    for (auto const& g : goldens()) {
        auto args = g.args;
        if (std::find(args.begin(), args.end(), "--format") != args.end()) continue;
        args.push_back("--format");
        args.push_back("json");
        auto r = run(args);
        ASSERT_EQ(r.code, 0) << g.name << ": " << r.err;
        json j = json::parse(r.out);
        EXPECT_EQ(j.at("version"), io::format_version) << g.name;
        EXPECT_TRUE(j.contains("result")) << g.name;
        std::string cmd = args[0] == "polya" || args[0] == "arith" ? args[0] + " " + args[1] : args[0];
        EXPECT_EQ(j.at("command"), cmd);
    }
}

TEST(Cli, JsonSequencesRoundTrip) {
    auto r = run(words("gfp --k 3 --n 5 --upto --format json"));
    auto rec = io::sequence_from_json<TPoly>(json::parse(r.out).at("result"));
    EXPECT_EQ(rec.values, gfp_sequence(generic_core(3), 5));
    EXPECT_EQ(rec.kind, "GFP");
    // a JSON sequence can be fed back through --input
    auto lucas = run(words("glp --core 1,1 --n 5 --upto --format json"));
    auto back = run({"exp", "--input", "-"}, lucas.out);
    ASSERT_EQ(back.code, 0) << back.err;
    EXPECT_EQ(back.out, "F_0 = 1\nF_1 = 1\nF_2 = 2\nF_3 = 3\nF_4 = 5\nF_5 = 8\n");
}

TEST(Cli, JsonStructuredResultsRoundTrip) {
    auto schur_j = json::parse(run(words("schur --shape 3,2 --format json")).out).at("result");
    EXPECT_EQ(io::schur_from_json(schur_j).expanded, schur(Partition({3, 2})).expanded);
    auto tab = json::parse(run(words("char-table --n 5 --format json")).out).at("result");
    EXPECT_EQ(io::character_table_from_json(tab).values, character_table(5).values);
    auto win = json::parse(run({"inf-companion", "--k", "2", "--rows=-1..4", "--format", "json"}).out).at("result");
    EXPECT_EQ(io::window_from_json<TPoly>(win.at("window")), infinite_companion(generic_core(2), -1, 4));
    auto ind = json::parse(run(words("polya indicator --group cyclic:6 --format json")).out).at("result");
    EXPECT_EQ(io::cycle_indicator_from_json(ind).poly, cycle_indicator(PermGroup::cyclic(6)).poly);
    auto tr = json::parse(run(words("arith trig --fn sigma --prime 5 --n 4 --format json")).out).at("result");
    auto t = io::trig_from_json<Rational>(tr);
    EXPECT_EQ(t.C, trig(local_rep(builtin::sigma(), 5, 4)).C);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run(words("nosuch")).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run(words("gfp --n 3")).code, 2);
    EXPECT_EQ(run(words("gfp --k 2 --n 3 --format yaml")).code, 2);
    EXPECT_EQ(run(words("arith rep --fn catalan --prime 2")).code, 1);
    EXPECT_EQ(run(words("arith rep --fn nosuch --n 3")).code, 1);
    EXPECT_EQ(run(words("log --seq 0,1,2")).code, 1);
    EXPECT_EQ(run(words("schur --shape 3,x")).code, 1);
    auto r = run(words("polya count --group klein:4 --colors 2"));
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("error:"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, CsvOnlyForCharacterTables) {
    EXPECT_EQ(run(words("gfp --k 2 --n 2 --format csv")).code, 2);
    EXPECT_EQ(run(words("char --shape 2,1 --format csv")).code, 2);
    EXPECT_EQ(run(words("char-table --n 2 --format csv")).code, 0);
}

TEST(Cli, MaxNFromEnvironment) {
    ::setenv("ISORING_MAX_N", "5", 1);
    EXPECT_EQ(run(words("gfp --k 2 --n 9")).code, 1);
    EXPECT_EQ(run(words("gfp --k 2 --n 5")).code, 0);
    EXPECT_EQ(run(words("gfp --k 6 --n 2")).code, 1);
    ::setenv("ISORING_MAX_N", "abc", 1);
    EXPECT_EQ(run(words("gfp --k 2 --n 2")).code, 2);
    ::unsetenv("ISORING_MAX_N");
    EXPECT_EQ(run(words("gfp --k 2 --n 9")).code, 0);
}

TEST(Cli, ReadsValuesFromStdin) {
    auto r = run(words("arith core"), "1\n2\n3\n4\n5\n");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "[2, -1]\n");
    auto s = run({"log", "--input", "-"}, "1\n1\n2\n3\n5\n8\n");
    ASSERT_EQ(s.code, 0) << s.err;
    EXPECT_EQ(s.out, "G_0 = 2\nG_1 = 1\nG_2 = 3\nG_3 = 4\nG_4 = 7\nG_5 = 11\n");
}

TEST(Cli, GroupsFromGenerators) {
    auto r = run({"polya", "count", "--perms", "(1 2 3 4);(1 3)", "--degree", "4", "--colors", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "21\n");
}

TEST(Cli, HelpExitsCleanly) {
    auto r = run(words("--help"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("gfp"), std::string::npos);
}
