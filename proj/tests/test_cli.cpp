#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support/fixtures.hpp"

namespace nbrecon {
namespace {

using testing::fixture_path;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

TEST(Cli, AnalyzeC6) {
  const Outcome o = run_cli({"analyze", fixture_path("c6")});
  ASSERT_EQ(o.code, 0) << o.err;
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["reconstructible"], false);
  EXPECT_EQ(j["strongly"], false);
  EXPECT_EQ(j["cancellation"], false);
  EXPECT_EQ(j["bipartite"], true);
  EXPECT_EQ(j["has_involution"], true);
  EXPECT_EQ(j["orbit_count"], 4);
  EXPECT_EQ(j["counterexample"]["alpha"], Json({3, 4, 5, 0, 1, 2}));
  EXPECT_EQ(j["counterexample"]["g_alpha_edges"], Json::parse("[[0,2],[0,4],[1,3],[1,5],[2,4],[3,5]]"));
  EXPECT_EQ(j["witness_involution"], Json({3, 4, 5, 0, 1, 2}));
}

TEST(Cli, AnalyzeLpHasNullEvidence) {
  const Outcome o = run_cli({"analyze", fixture_path("lp")});
  ASSERT_EQ(o.code, 0);
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j["reconstructible"], true);
  EXPECT_TRUE(j["counterexample"].is_null());
  EXPECT_TRUE(j["witness_involution"].is_null());
}

TEST(Cli, GalphaWritesTheTwist) {
  const Outcome o = run_cli({"galpha", fixture_path("c6"), "3 4 5 0 1 2"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(parse_graph(o.out), read_graph_file(fixture_path("2k3")));
  EXPECT_NE(o.out.find("e 0 2\ne 0 4\ne 1 3\ne 1 5\ne 2 4\ne 3 5\n"), std::string::npos);
}

TEST(Cli, GalphaRejectsNonAntiAutomorphism) {
  const Outcome o = run_cli({"galpha", fixture_path("c6"), "1 0 2 3 4 5"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("anti-automorphism"), std::string::npos);
}

TEST(Cli, ProductIsoNbhdAntTf) {
  const Outcome p = run_cli({"product", fixture_path("sql"), fixture_path("k2")});
  ASSERT_EQ(p.code, 0);
  EXPECT_TRUE(is_isomorphic(parse_graph(p.out), read_graph_file(fixture_path("q3"))));

  const Json iso = Json::parse(run_cli({"iso", fixture_path("c6"), fixture_path("2k3")}).out);
  EXPECT_EQ(iso["isomorphic"], false);
  EXPECT_TRUE(iso["witness"].is_null());
  const Json same = Json::parse(run_cli({"iso", fixture_path("c6"), fixture_path("c6")}).out);
  EXPECT_EQ(same["isomorphic"], true);
  EXPECT_EQ(same["certificates"][0], same["certificates"][1]);

  const Json nbhd = Json::parse(run_cli({"nbhd", fixture_path("2k3")}).out);
  EXPECT_EQ(nbhd["multiset"], Json::parse("[[0,2],[0,4],[1,3],[1,5],[2,4],[3,5]]"));

  EXPECT_EQ(Json::parse(run_cli({"ant", fixture_path("c6")}).out)["count"], 22);
  EXPECT_EQ(Json::parse(run_cli({"tf", fixture_path("k2")}).out)["count"], 2);
}

TEST(Cli, SmallVerifyPasses) {
  const Outcome o = run_cli({"verify", "--max-n", "3", "--loops", "--jobs", "1", "--bipartite-max-n", "4"});
  ASSERT_EQ(o.code, 0) << o.err;
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["violations"].size(), 0U);
  EXPECT_EQ(j["census"][3]["graphs"], 64);
}

TEST(Cli, ExitCodesPerErrorClass) {
  // usage
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"analyze"}).code, 2);
  EXPECT_EQ(run_cli({"analyze", fixture_path("c6"), "--bogus"}).code, 2);
  EXPECT_EQ(run_cli({"galpha", fixture_path("c6"), "3 x"}).code, 2);
  EXPECT_EQ(run_cli({"galpha", fixture_path("c6"), "0 1 2"}).code, 2);
  EXPECT_EQ(run_cli({"verify"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);

  // domain: unreadable or malformed input, capacity, invalid anti
  EXPECT_EQ(run_cli({"analyze", "/nonexistent.graph"}).code, 1);
  const std::string bad = temp_file("bad.graph", "p graph 3\ne 0 5\n");
  const Outcome parse = run_cli({"analyze", bad});
  EXPECT_EQ(parse.code, 1);
  EXPECT_NE(parse.err.find("line 2"), std::string::npos) << parse.err;
  std::string nine = "p graph 9\n";
  const std::string big = temp_file("nine.graph", nine);
  EXPECT_EQ(run_cli({"ant", big}).code, 1);
  EXPECT_EQ(run_cli({"--no-guard", "nbhd", big}).code, 0);
  EXPECT_EQ(run_cli({"verify", "--max-n", "6", "--loops"}).code, 1);
  EXPECT_EQ(run_cli({"product", big, big}).code, 1);

  // violations
  VerificationReport clean;
  EXPECT_EQ(cli::verification_exit_code(clean), 0);
  VerificationReport broken;
  broken.violation_count = 1;
  EXPECT_EQ(cli::verification_exit_code(broken), 3);
}

}  // namespace
}  // namespace nbrecon
