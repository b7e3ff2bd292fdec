#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "rainbow/formats.hpp"
#include "rainbow/graph6.hpp"
#include "test_graphs.hpp"

using namespace rainbow;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rainbow::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("rainbow_cli_" + name)).string();
}

}  // namespace

TEST(Cli, RcOfStandardGraphs) {
  EXPECT_NE(invoke({"rc", graph6_encode(testgraphs::cycle(6))}).out.find("rc=3\n"), std::string::npos);
  EXPECT_NE(invoke({"rc", graph6_encode(testgraphs::complete(5))}).out.find("rc=1\n"),
            std::string::npos);
  EXPECT_NE(invoke({"rc", graph6_encode(testgraphs::path(6))}).out.find("rc=5\n"), std::string::npos);
}

TEST(Cli, RcErrors) {
  EXPECT_EQ(invoke({"rc", "C@"}).code, rainbow::cli::kInputError);  // disconnected
  EXPECT_EQ(invoke({"rc", "not-a-graph~~"}).code, rainbow::cli::kInputError);
  EXPECT_EQ(invoke({"rc", graph6_encode(testgraphs::petersen()), "--budget", "1"}).code,
            rainbow::cli::kBudgetExhausted);
  EXPECT_EQ(invoke({"bogus"}).code, rainbow::cli::kInputError);
}

TEST(Cli, VerifyExitCodes) {
  const Graph c5 = testgraphs::cycle(5);
  const std::string g = tmp("c5.txt"), good = tmp("good.col"), bad = tmp("bad.col"),
                    broken = tmp("broken.col");
  write_text_file(g, write_edge_list(c5));
  write_text_file(good, write_coloring(c5, {3, {1, 2, 2, 3, 1}}));
  write_text_file(bad, write_coloring(c5, {1, {1, 1, 1, 1, 1}}));
  write_text_file(broken, "k=2\n0 1 1\n");
  const Outcome ok = invoke({"verify", g, good});
  EXPECT_EQ(ok.code, rainbow::cli::kOk);
  EXPECT_NE(ok.out.find("VALID paths=10"), std::string::npos) << ok.out;
  const Outcome neg = invoke({"verify", g, bad});
  EXPECT_EQ(neg.code, rainbow::cli::kNegative);
  EXPECT_NE(neg.out.find("INVALID pair"), std::string::npos);
  EXPECT_EQ(invoke({"verify", g, broken}).code, rainbow::cli::kInputError);
  EXPECT_EQ(invoke({"verify", g, tmp("missing.col")}).code, rainbow::cli::kInputError);
}

TEST(Cli, ConstructGdn) {
  const std::string prefix = tmp("g13");
  const Outcome r = invoke({"construct", "--kind", "gdn", "--n", "13", "--d", "4", "--out-prefix", prefix});
  EXPECT_EQ(r.code, rainbow::cli::kOk);
  EXPECT_NE(r.out.find("edges=16 formula=16 match"), std::string::npos) << r.out;
  EXPECT_EQ(invoke({"verify", prefix + ".g6", prefix + ".col"}).code, rainbow::cli::kOk);
  EXPECT_EQ(invoke({"construct", "--kind", "gdn", "--n", "8", "--d", "5"}).code, rainbow::cli::kInputError);
}

TEST(Cli, TndSingleCell) {
  const Outcome r = invoke({"tnd", "--n", "6", "--d", "3", "--format", "csv"});
  EXPECT_EQ(r.code, rainbow::cli::kOk);
  EXPECT_NE(r.out.find("6,3,6"), std::string::npos) << r.out;
  const Outcome j = invoke({"tnd", "--n", "6", "--d", "3", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(j.out)["t"], 6);
}

TEST(Cli, TndJsonIndependentOfWorkers) {
  const Outcome a = invoke({"tnd", "--n", "7", "--d", "3", "--format", "json", "--workers", "1"});
  const Outcome b = invoke({"tnd", "--n", "7", "--d", "3", "--format", "json", "--workers", "3"});
  EXPECT_EQ(a.code, rainbow::cli::kOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, TndBudget) {
  EXPECT_EQ(invoke({"tnd", "--n", "7", "--d", "3", "--budget", "1"}).code, rainbow::cli::kBudgetExhausted);
}

TEST(Cli, Bounds) {
  const Outcome a = invoke({"bounds", "--n", "20", "--d", "4", "--format", "csv"});
  EXPECT_EQ(a.code, rainbow::cli::kOk);
  const Outcome b = invoke({"bounds", "--n", "16", "--d", "2"});
  EXPECT_NE(b.out.find("-96.000"), std::string::npos) << b.out;
  EXPECT_NE(b.out.find("vacuous"), std::string::npos);
  EXPECT_NE(b.out.find("max degree >= 4"), std::string::npos);
  EXPECT_EQ(invoke({"bounds", "--n", "10", "--d", "9", "--format", "json"}).code, rainbow::cli::kOk);
  EXPECT_EQ(invoke({"bounds", "--n", "10", "--d", "10"}).code, rainbow::cli::kInputError);
}
