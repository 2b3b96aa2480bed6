#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "pcontract/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = pcontract::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("pcontract_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    static std::string slurp(const std::string& p) {
        std::ifstream f(p);
        std::ostringstream s;
        s << f.rdbuf();
        return s.str();
    }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, GrSolveGivesAnAEdge) {
    Invocation gen = run({"gen", "--family", "Gr", "--r", "5"});
    ASSERT_EQ(gen.code, 0);
    Invocation solve = run({"solve", "--k", "1"}, gen.out);
    EXPECT_EQ(solve.code, 0) << solve.err;
    EXPECT_NE(solve.out.find("edges: 0 1\n"), std::string::npos) << solve.out;
}

TEST_F(Cli, GstarOracleYes) {
    Invocation gen = run({"gen", "--family", "Gstar", "--p", "2"});
    Invocation oracle = run({"oracle", "--k", "1"}, gen.out);
    EXPECT_EQ(oracle.code, 0) << oracle.err;
    EXPECT_EQ(oracle.out.rfind("answer yes", 0), 0u);
}

TEST_F(Cli, SolveVerifyRoundTripAndTamper) {
    ASSERT_EQ(run({"gen", "--family", "random", "--n", "9", "--m", "18", "--seed", "5", "-o", path("g.txt")}).code, 0);
    Invocation solve = run({"solve", "-i", path("g.txt"), "--k", "2", "-o", path("c.txt")});
    ASSERT_NE(solve.code, 2) << solve.err;
    Invocation ok = run({"verify", "-i", path("g.txt"), "-c", path("c.txt")});
    EXPECT_EQ(ok.code, 0) << ok.err;

    ASSERT_EQ(run({"gen", "--family", "Gr", "--r", "6", "-o", path("gr.txt")}).code, 0);
    ASSERT_EQ(run({"solve", "-i", path("gr.txt"), "--k", "1", "-o", path("gr.cert")}).code, 0);
    std::string cert = slurp(path("gr.cert"));
    auto at = cert.find("edges: 0 1");
    ASSERT_NE(at, std::string::npos);
    cert.replace(at, 10, "edges: 3 4");
    std::ofstream(path("bad.cert")) << cert;
    EXPECT_EQ(run({"verify", "-i", path("gr.txt"), "-c", path("bad.cert")}).code, 1);
    EXPECT_EQ(run({"verify", "-i", path("gr.txt"), "-c", path("gr.cert"), "--k", "2"}).code, 1);
}

TEST_F(Cli, NoAnswersExitOne) {
    Invocation gen = run({"gen", "--family", "k5sub", "--p", "2"});
    Invocation oracle = run({"oracle", "--k", "2"}, gen.out);
    EXPECT_EQ(oracle.code, 1);
    std::ofstream(path("k.txt")) << gen.out;
    std::ofstream(path("k.cert")) << oracle.out;
    EXPECT_EQ(run({"verify", "-i", path("k.txt"), "-c", path("k.cert")}).code, 0);
}

TEST_F(Cli, Determinism) {
    std::string g = run({"gen", "--family", "random", "--n", "10", "--m", "18", "--seed", "12"}).out;
    EXPECT_EQ(g, run({"gen", "--family", "random", "--n", "10", "--m", "18", "--seed", "12"}).out);
    Invocation a = run({"solve", "--k", "2", "--deterministic"}, g);
    Invocation b = run({"solve", "--k", "2", "--deterministic", "--jobs", "3"}, g);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
}

TEST_F(Cli, EmbedAndWallCertificates) {
    ASSERT_EQ(run({"gen", "--family", "wall", "--height", "4", "--noise", "3", "--seed", "1", "-o", path("w.txt"),
                   "--wall-out", path("w.wall")})
                  .code,
              0);
    EXPECT_EQ(run({"verify", "-i", path("w.txt"), "-c", path("w.wall")}).code, 0);
    ASSERT_EQ(run({"embed", "-i", path("w.txt"), "-o", path("w.emb")}).code, 0);
    EXPECT_EQ(run({"verify", "-i", path("w.txt"), "-c", path("w.emb")}).code, 0);
    std::string emb = slurp(path("w.emb"));
    std::string swapped = emb;
    auto line = swapped.find("\n9:");
    ASSERT_NE(line, std::string::npos);
    auto end = swapped.find('\n', line + 1);
    std::string rot = swapped.substr(line + 3, end - line - 3);
    std::istringstream ids(rot);
    std::vector<std::string> v;
    for (std::string x; ids >> x;) v.push_back(x);
    if (v.size() >= 3) {
        std::swap(v[0], v[1]);
        std::string joined;
        for (auto& x : v) joined += " " + x;
        swapped.replace(line + 3, end - line - 3, joined);
        std::ofstream(path("bad.emb")) << swapped;
        EXPECT_EQ(run({"verify", "-i", path("w.txt"), "-c", path("bad.emb")}).code, 1);
    }
    Invocation k5 = run({"embed"}, "0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    EXPECT_EQ(k5.code, 1);
    EXPECT_EQ(k5.out.rfind("nonplanar K5", 0), 0u);
}

TEST_F(Cli, ReduceWritesGraphTraceAndStats) {
    ASSERT_EQ(run({"gen", "--family", "wall", "--height", "11", "-o", path("w.txt"), "--wall-out", path("w.wall")}).code,
              0);
    Invocation r = run({"reduce", "-i", path("w.txt"), "--k", "0", "--hint", path("w.wall"), "-o", path("r.txt"), "--trace",
                 path("r.trace"), "--stats", path("r.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(slurp(path("r.csv")).rfind("iteration,vertices,edges,wall_height,event\n", 0), 0u);
    EXPECT_NE(slurp(path("r.trace")).find("trace: "), std::string::npos);
    EXPECT_EQ(run({"oracle", "-i", path("r.txt"), "--k", "0"}).code, run({"oracle", "-i", path("w.txt"), "--k", "0"}).code);
}

TEST_F(Cli, Errors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"solve", "--k", "-1"}, "0 1\n").code, 2);
    Invocation parse = run({"solve", "--k", "1"}, "0 1 2\n");
    EXPECT_EQ(parse.code, 2);
    EXPECT_NE(parse.err.find("parse"), std::string::npos);
    EXPECT_EQ(run({"oracle", "--k", "3", "--cap", "11"}, "0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n").code, 0);
    Invocation cap = run({"oracle", "--k", "2", "--cap", "5"}, run({"gen", "--family", "complete", "--n", "8"}).out);
    EXPECT_EQ(cap.code, 2);
    EXPECT_EQ(run({"oracle", "-i", path("missing.txt"), "--k", "0"}).code, 2);
    EXPECT_EQ(run({"gen", "--family", "nope"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}
