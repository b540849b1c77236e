#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "straightedge/cli.hpp"

using namespace straightedge;

namespace {

std::string data(const std::string& name) { return (std::filesystem::path(STRAIGHTEDGE_TEST_DATA) / name).string(); }

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "straightedge");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CliVerify, Example) {
  Outcome r = run({"verify", data("example.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.starts_with("ON_CUBIC\n")) << r.out;
  EXPECT_NE(r.out.find("\n[P2, U, V] = 0\n"), std::string::npos) << r.out;
}

TEST(CliVerify, Negative) {
  Outcome r = run({"verify", data("negative.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.out.starts_with("NOT_ON_CUBIC\n")) << r.out;
}

TEST(CliVerify, DegenerateWithoutRetries) {
  Outcome r = run({"verify", data("collinear_quadruple.json"), "--max-retries", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.starts_with("DEGENERATE\n")) << r.out;
  EXPECT_NE(r.out.find("reason: "), std::string::npos);
  EXPECT_NE(r.err.find("retry: "), std::string::npos);
}

TEST(CliVerify, TraceToStdout) {
  Outcome r = run({"verify", data("example.json"), "--trace"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"inputs\""), std::string::npos);
}

TEST(CliVerify, PartitionAndSeed) {
  Outcome r = run({"verify", data("example.json"), "--partition", "s1=1,3,5,7,9;t1=5,7,9,2,4", "--seed", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"verify", data("example.json"), "--partition", "s1=1,2,3;t1=3,4,5,6,7"}).code, 3);
  EXPECT_EQ(run({"verify", data("example.json"), "--partition", "nonsense"}).code, 3);
}

TEST(CliVerify, InputErrors) {
  EXPECT_EQ(run({"verify", data("bad_coordinate.json")}).code, 3);
  EXPECT_EQ(run({"verify", data("eleven.json")}).code, 3);
  EXPECT_EQ(run({"verify", data("missing.json")}).code, 3);
  EXPECT_EQ(run({"verify"}).code, 3);
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliOracle, Verdicts) {
  Outcome on = run({"oracle", data("example.json")});
  EXPECT_EQ(on.code, 0);
  EXPECT_EQ(on.out, "ON_CUBIC\ndet: 0\n");
  Outcome off = run({"oracle", data("negative.json")});
  EXPECT_EQ(off.code, 1);
  EXPECT_TRUE(off.out.starts_with("NOT_ON_CUBIC\ndet: ")) << off.out;
  EXPECT_EQ(off.out.find("det: 0\n"), std::string::npos);
  Outcome eleven = run({"oracle", data("eleven.json")});
  EXPECT_EQ(eleven.code, 3);
  EXPECT_NE(eleven.err.find("expected 10 points, got 11"), std::string::npos);
}

TEST(CliCertificate, Example) {
  Outcome r = run({"certificate", data("example.json")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("reduction: [P,P2,V][P2,U,Y] = [P,P2,U][P2,V,Y]"), std::string::npos);
  EXPECT_NE(r.out.find("conclusion h(P2,V,U,P,Y): matched"), std::string::npos);
  EXPECT_NE(r.out.find("passed: 25/25"), std::string::npos);
  EXPECT_NE(r.out.find("vanishing cancelled brackets: none"), std::string::npos);
  EXPECT_NE(r.out.find("P2, U, V collinear: yes"), std::string::npos);
}

TEST(CliCertificate, EmptyRelationFile) {
  Outcome r = run({"certificate", data("example.json"), "--relations", data("relations_empty.txt")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("reduction: 1 = 1"), std::string::npos);
  EXPECT_NE(r.out.find("conclusion h(P2,V,U,P,Y): not matched"), std::string::npos);
}

TEST(CliCertificate, NegativeHasFailingRelations) {
  Outcome r = run({"certificate", data("negative.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("\nFAIL c("), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("P2, U, V collinear: no"), std::string::npos);
}

TEST(CliCertificate, AcceptsTraceDocuments) {
  auto path = std::filesystem::temp_directory_path() / "straightedge_trace.json";
  ASSERT_EQ(run({"verify", data("example.json"), "--trace", path.string()}).code, 0);
  Outcome r = run({"certificate", path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("passed: 25/25"), std::string::npos);
  std::filesystem::remove(path);
}
