#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ringlat/cli.hpp"

using namespace ringlat;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    CliRun r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

TEST(Cli, CountCommands) {
    CliRun b = run({"count", "bell", "4"});
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(b.out, "15\n");
    EXPECT_EQ(run({"count", "stirling", "5", "2"}).out, "15\n");
    EXPECT_EQ(run({"count", "exal", "Z/4", "2", "3"}).out, "3\n");
    EXPECT_EQ(run({"count", "exal", "Z/4", "2", "3", "--labeled"}).out, "6\n");
}

TEST(Cli, LatticeReport) {
    CliRun r = run({"lattice", "Z/4", "Z/4 x Z/4", "--embed", "diagonal"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = r.json();
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["command"], "lattice");
    EXPECT_EQ(j["lattice"]["count"], 3);
    EXPECT_EQ(j["lattice"]["length"], 2);
    EXPECT_EQ(j["top"]["order"], 16);
}

TEST(Cli, Embeddings) {
    CliRun ff = run({"lattice", "Z/4", "Z/4 x Z/2", "--embed", "first-factor"});
    ASSERT_EQ(ff.code, 0) << ff.err;
    CliRun ex = run({"lattice", "Z/2", "Z/2 x Z/2", "--embed", "explicit:0,3"});
    ASSERT_EQ(ex.code, 0) << ex.err;
    EXPECT_EQ(ex.json()["lattice"]["count"], 2);
    EXPECT_EQ(run({"lattice", "GF(4)", "GF(4) x GF(4)", "--embed", "first-factor"}).code, 2);
    EXPECT_EQ(run({"lattice", "Z/2", "Z/2 x Z/2", "--embed", "explicit:0,1"}).code, 2);
    EXPECT_EQ(run({"lattice", "Z/2", "Z/2 x Z/2", "--embed", "sideways"}).code, 2);
}

TEST(Cli, ClassifyInert) {
    CliRun r = run({"classify", "GF(2)", "GF(4)"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = r.json();
    EXPECT_EQ(j["minimal"], "inert");
    EXPECT_EQ(j["predicates"]["integral"], true);
    EXPECT_EQ(j["predicates"]["infra_integral"], false);
    EXPECT_EQ(run({"classify", "GF(2)", "GF(2)[e]/(e^2)"}).json()["minimal"], "ramified");
}

TEST(Cli, ClosuresAndCrtAndIdealize) {
    Json c = run({"closures", "Z/4", "Z/4 x Z/4"}).json();
    EXPECT_EQ(c["sizes"], Json({4, 8, 16, 16}));

    CliRun crt = run({"crt", "Z/12", "--ideals", "(4);(3);(3)"});
    ASSERT_EQ(crt.code, 0) << crt.err;
    Json k = crt.json();
    EXPECT_EQ(k["minimality"]["minimal"], true);
    EXPECT_EQ(k["lattice_count"], 2);

    CliRun id = run({"idealize", "GF(2)", "--module", "R + R"});
    ASSERT_EQ(id.code, 0) << id.err;
    EXPECT_EQ(id.json()["submodule_count"], 5);
    EXPECT_EQ(id.json()["cyclic"], false);
}

TEST(Cli, ExitCodes) {
    CliRun syntax = run({"lattice", "Z/4 x", "Z/4"});
    EXPECT_EQ(syntax.code, 2);
    EXPECT_NE(syntax.err.find("syntax"), std::string::npos);
    EXPECT_EQ(run({"count", "bell", "13"}).code, 3);
    EXPECT_EQ(run({"lattice", "Z/2", "Z/2 x Z/2 x Z/2 x Z/2 x Z/2 x Z/2 x Z/2 x Z/2 x Z/2 x Z/2 x Z/2"}).code, 3);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"crt", "Z/12", "--ideals", "(4)"}).code, 2);
    EXPECT_EQ(run({"verify", "--suite", "s9"}).code, 2);
}

TEST(Cli, DotFile) {
    const std::string path = ::testing::TempDir() + "ringlat_cli_test.dot";
    CliRun r = run({"lattice", "GF(2)", "GF(2) x GF(2) x GF(2)", "--dot", path});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream f(path);
    std::stringstream s;
    s << f.rdbuf();
    EXPECT_NE(s.str().find("digraph"), std::string::npos);
    EXPECT_NE(s.str().find("->"), std::string::npos);
    std::remove(path.c_str());
}

TEST(Cli, VerifySuiteIsDeterministic) {
    CliRun a = run({"verify", "--suite", "s4"});
    CliRun b = run({"verify", "--suite", "s4"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    Json j = a.json();
    EXPECT_EQ(j["passed"], true);
    ASSERT_EQ(j["results"].size(), 1u);
    EXPECT_EQ(j["results"][0]["id"], 3);
    EXPECT_NE(a.err.find("criterion 3: PASS"), std::string::npos);
}
