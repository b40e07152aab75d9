#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "dijklab/io.hpp"
#include "dijklab/render.hpp"
#include "test_util.hpp"

using namespace dijklab;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::dispatch(args, out, err);
  return {status, out.str(), err.str()};
}

std::string fx(const std::string& name) { return test::fixture(name).string(); }

}  // namespace

TEST(Cli, TraceClassicText) {
  const auto r = run({"trace", fx("paper8_tora.mat"), "--source", "1", "--algo", "classic", "--format", "text"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("8    | [8.00, 6]      | permanent"), std::string::npos);
  EXPECT_NE(r.out.find("7    | [10.00, 5]     | permanent"), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, TraceStableBatchHasFiveRoundsAndNotice) {
  const auto r = run({"trace", fx("paper8.mat"), "--source", "1", "--algo", "stablebatch", "--format", "text"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("Round 5"), std::string::npos);
  EXPECT_EQ(r.out.find("Round 6"), std::string::npos);
  EXPECT_NE(r.err.find("experimental"), std::string::npos);
  EXPECT_NE(r.err.find("oracle check: agrees"), std::string::npos);
}

TEST(Cli, StableBatchDisagreementIsDataNotFailure) {
  const auto r = run({"trace", fx("counterexample4.edges"), "--source", "1", "--algo", "stablebatch"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.err.find("DISAGREES with Bellman-Ford at vertices 3"), std::string::npos);
}

TEST(Cli, TraceStructuredRoundTrips) {
  const auto r = run({"trace", fx("tie4.edges"), "--source", "1", "--algo", "tiebatch", "--format", "structured"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto trace = trace_from_json(nlohmann::json::parse(r.out));
  const auto g = test::load("tie4.edges");
  EXPECT_EQ(trace, run_labeling(g, VertexId(1), SelectionStrategy::TieBatch));
}

TEST(Cli, PathPrintsRouteAndTree) {
  const auto r = run({"path", fx("paper8_tora.mat"), "--source", "1", "--target", "8"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("route: 1-2-3-6-8 (8)"), std::string::npos);
  EXPECT_NE(r.out.find("distance: 8"), std::string::npos);
  EXPECT_NE(r.out.find("0 0 1 0 2 0 0 0\n"), std::string::npos);
}

TEST(Cli, CompareReportsUnsoundFlag) {
  const auto r = run({"compare", fx("counterexample4.edges"), "--source", "1"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("stable_batch_unsound: true"), std::string::npos);
  const auto p = run({"compare", fx("paper8.mat"), "--source", "1", "--target", "8"});
  EXPECT_NE(p.out.find("stable_batch_unsound: false"), std::string::npos);
}

TEST(Cli, OracleCommand) {
  const auto r = run({"oracle", fx("paper8.mat"), "--source", "1"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("bellman-ford: 0 1 2 4 3 6 10 8"), std::string::npos);
  EXPECT_NE(r.out.find("agree: yes"), std::string::npos);
}

TEST(Cli, BenchWritesDeterministicReports) {
  const auto dir = std::filesystem::temp_directory_path() / "dijklab_cli_test";
  std::filesystem::create_directories(dir);
  std::vector<std::string> outputs;
  for (const char* name : {"a.json", "b.json"}) {
    const auto file = (dir / name).string();
    const auto r = run({"bench", "--nodes", "7", "--density", "0.6", "--graphs", "20", "--seed", "5", "--tie-bias",
                        "0.9", "--weights", "1:9", "--out", file});
    ASSERT_EQ(r.status, 0) << r.err;
    outputs.push_back(read_text_file(file));
  }
  EXPECT_EQ(outputs[0], outputs[1]);
  EXPECT_NE(outputs[0].find("\"records\""), std::string::npos);

  const auto csv = (dir / "c.csv").string();
  const auto r = run({"bench", "--nodes", "5", "--density", "1", "--graphs", "3", "--seed", "1", "--tie-bias", "1",
                      "--weights", "1:1", "--out", csv, "--format", "csv"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(read_text_file(csv).rfind("spec_index,graph_index,strategy,", 0), 0u);
  std::filesystem::remove_all(dir);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"trace", "--algo", "classic"}).status, 2);
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"trace", fx("paper8.mat"), "--source", "1", "--algo", "dijkstra"}).status, 2);
  EXPECT_EQ(run({"trace", fx("paper8.mat"), "--source", "1", "--algo", "classic", "--bogus"}).status, 2);
  EXPECT_EQ(run({"path", fx("paper8.mat"), "--source", "1"}).status, 2);
  const auto bad = run({"bench", "--nodes", "4", "--density", "0.5", "--graphs", "1", "--seed", "1", "--tie-bias",
                        "0", "--weights", "nine", "--out", "x.json"});
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.err.find("--weights"), std::string::npos);
}

TEST(Cli, InputErrorsExitOne) {
  const auto missing = run({"oracle", fx("nope.mat"), "--source", "1"});
  EXPECT_EQ(missing.status, 1);
  EXPECT_NE(missing.err.find("nope.mat"), std::string::npos);
  EXPECT_EQ(run({"oracle", fx("paper8.mat"), "--source", "9"}).status, 1);
  const auto dir = std::filesystem::temp_directory_path() / "dijklab_cli_bad.mat";
  { std::ofstream(dir) << "2\n0 1\n1 oops\n"; }
  const auto malformed = run({"trace", dir.string(), "--source", "1", "--algo", "classic"});
  EXPECT_EQ(malformed.status, 1);
  EXPECT_NE(malformed.err.find("oops"), std::string::npos);
  std::filesystem::remove(dir);
}

TEST(Cli, RepeatedInvocationsAreByteIdentical) {
  const std::vector<std::string> args{"trace", fx("paper8.mat"), "--source", "1", "--algo", "tiebatch",
                                      "--format", "structured"};
  EXPECT_EQ(run(args).out, run(args).out);
}
