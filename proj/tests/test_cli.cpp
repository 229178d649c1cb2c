#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wreathchar/cli.hpp"

using namespace wreathchar;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  const auto r = run_cli(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, CharSym) {
  const auto j = run_json({"char-sym", "--shape", "2,1", "--class", "3"});
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("value"), -1);
  EXPECT_EQ(Integer(j.at("value").get<int>()), oracle::frobenius_chi({2, 1}, {3}));
}

TEST(Cli, Hat) {
  const auto j = run_json({"hat", "--shape", "[1|1]", "--r", "2"});
  // the only partition of 4 with empty 2-core and quotient ((1),(1))
  std::vector<std::vector<int>> hits;
  for (const auto& p : oracle::partitions(4))
    if (oracle::core(p, 2).empty() && r_quotient(Partition(p), 2) == parse_rpartite("[1|1]")) hits.push_back(p);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(j.at("hat").get<std::vector<int>>(), hits[0]);
  EXPECT_EQ(run_cli({"hat", "--shape", "[1|1]", "--r", "3"}).code, 2);
}

TEST(Cli, CoreQuotientAndSign) {
  auto j = run_json({"core-quotient", "--shape", "3,1", "--r", "2"});
  EXPECT_TRUE(j.at("core").empty());
  EXPECT_EQ(j.at("quotient").get<RPartitePartition>().total(), 2);
  j = run_json({"sign", "--shape", "2,1,1", "--r", "2"});
  EXPECT_EQ(j.at("sign"), -1);
  EXPECT_EQ(run_cli({"sign", "--shape", "2,1", "--r", "2"}).code, 2);
}

TEST(Cli, CharWreathEchoesLabelling) {
  const auto j = run_json({"char-wreath", "--group", "Z6", "--shape", "[1|∅|1|∅|∅|∅]", "--color", "5", "--class", "1,1"});
  EXPECT_TRUE(j.contains("labelling"));
  EXPECT_EQ(j.at("labelling").at("labels").size(), 6u);
  // two tableaux, each contributing chi_0(5) chi_2(5) = zeta^4
  EXPECT_EQ(j.at("value").get<CyclotomicInt>(), CyclotomicInt::zeta(6, 4) * Integer(2));
  EXPECT_EQ(run_cli({"char-wreath", "--group", "Z6", "--shape", "[1|1]", "--class", "1,1"}).code, 2);
  EXPECT_EQ(run_cli({"char-wreath", "--group", "S3", "--shape", "[∅|∅|1|∅|∅|∅]", "--class", "1"}).code, 2);
}

TEST(Cli, Table) {
  const auto j = run_json({"table", "--n", "3"});
  EXPECT_EQ(j.at("values").size(), 3u);
  const auto csv = run_cli({"table", "--n", "3", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out, "shape,3,\"2,1\",\"1,1,1\"\nclass_size,2,3,1\n3,1,1,1\n\"2,1\",-1,0,2\n\"1,1,1\",1,-1,1\n");
  EXPECT_EQ(run_cli({"table", "--n", "3", "--format", "xml"}).code, 2);
}

TEST(Cli, VerifyExitCodes) {
  const auto r = run_cli({"verify", "rr", "--n", "4", "--group", "Z2"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("failure_count"), 0);
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_TRUE(j.at("parameters").contains("labelling"));
  EXPECT_FALSE(j.contains("elapsed_seconds"));

  EXPECT_EQ(run_cli({"verify", "main", "--n", "2", "--group", "Z6", "--color", "5", "--jobs", "2"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "main2", "--n", "2", "--color", "1"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "sign2", "--n", "3"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "main", "--n", "2", "--group", "Z6"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "rr", "--n", "2", "--group", "S3"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "nope", "--n", "2"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "rr", "--n", "0"}).code, 2);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"verify", "main", "--n", "2", "--group", "Z2xZ2", "--color", "1,1"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"char-sym", "--shape", "2,1", "--class", "3", "--bogus"}).code, 2);
  EXPECT_EQ(run_cli({"char-sym", "--shape", "2,x", "--class", "3"}).code, 2);
  EXPECT_EQ(run_cli({"char-sym", "--shape", "2,1", "--class", "2"}).code, 2);
  const auto help = run_cli({"--help"});
  EXPECT_EQ(help.code, 0);
  for (const char* cmd : {"char-sym", "char-wreath", "core-quotient", "hat", "sign", "table", "verify"})
    EXPECT_NE(help.out.find(cmd), std::string::npos);
  const auto vhelp = run_cli({"verify", "--help"});
  EXPECT_EQ(vhelp.code, 0);
  for (const char* flag : {"--n", "--group", "--color", "--max-failures", "--jobs", "--format"})
    EXPECT_NE(vhelp.out.find(flag), std::string::npos) << flag;
}

TEST(Cli, JsonValuesReparse) {
  const auto j = run_json({"char-wreath", "--group", "Z3", "--shape", "[1|1|1]", "--color", "1", "--class", "3"});
  const auto v = j.at("value").get<CyclotomicInt>();
  EXPECT_EQ(nlohmann::json(v), j.at("value"));
  EXPECT_EQ(j.at("shape").get<RPartitePartition>(), parse_rpartite("[1|1|1]"));
}
