#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "parkfn/cli.hpp"

using parkfn::cli::kExitNegative;
using parkfn::cli::kExitOk;
using parkfn::cli::kExitUsage;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "parkfn");
  std::ostringstream out, err;
  const int code = parkfn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_profile(const std::string& body) {
  const std::string path = ::testing::TempDir() + "parkfn_profile.json";
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Cli, ParkExamples) {
  auto a = cli({"park", "--variant", "subset", "{2},{2,3},{1,2,3}"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, "312\n");
  auto b = cli({"park", "--variant", "sp", "{2,3},{1,2,3},{2}"});
  EXPECT_EQ(b.code, kExitNegative);
  EXPECT_EQ(b.out, "car 3 failed\n");
  auto c = cli({"park", "--variant", "classical", "2,2,2"});
  EXPECT_EQ(c.code, kExitNegative);
  EXPECT_EQ(c.out, "car 3 failed\n");
  EXPECT_EQ(cli({"park", "--variant", "pf", "2,1,1"}).out, "213\n");
  EXPECT_EQ(cli({"park", "--variant", "ordered", "(2,1),(2,1)"}).out, "21\n");
}

TEST(Cli, ParkRejectsFamiliesOutsideTheVariant) {
  EXPECT_EQ(cli({"park", "--variant", "ipf", "{1,3},{2}"}).code, kExitUsage);
  EXPECT_EQ(cli({"park", "--variant", "ksp", "-k", "2", "{1},{1,2}"}).code, kExitUsage);
  EXPECT_EQ(cli({"park", "--variant", "ksp", "{1,2},{1,2}"}).code, kExitUsage);
  EXPECT_EQ(cli({"park", "--variant", "sp", "{1},{"}).code, kExitUsage);
}

TEST(Cli, Stats) {
  auto r = cli({"stats", "31524"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("permutation: 31524\n"), std::string::npos);
  EXPECT_NE(r.out.find("inv: 4\n"), std::string::npos);
  EXPECT_NE(r.out.find("a: 1,1,3,1,2\n"), std::string::npos);
  auto j = nlohmann::json::parse(cli({"stats", "31524", "--format", "json"}).out);
  EXPECT_EQ(j.at("a"), nlohmann::json::parse("[1,1,3,1,2]"));
  auto bad = cli({"stats", "311"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, Count) {
  EXPECT_EQ(cli({"count", "--variant", "sp", "-n", "3"}).out, "168\n");
  EXPECT_EQ(cli({"count", "--variant", "ipf", "-n", "3"}).out, "96\n");
  EXPECT_EQ(cli({"count", "--variant", "kipf", "-k", "2", "-n", "3", "--outcome", "123"}).out, "2\n");
  EXPECT_EQ(cli({"count", "--variant", "pf", "--outcome", "213"}).out, "3\n");
  EXPECT_EQ(cli({"count", "--variant", "kipf", "-n", "3"}).code, kExitUsage);
  EXPECT_EQ(cli({"count", "--variant", "nope", "-n", "3"}).code, kExitUsage);
  EXPECT_EQ(cli({"count", "--variant", "sp", "-n", "100000"}).code, kExitUsage);
  const std::string path = write_profile(R"({"n": 3, "allowed": [[1,2],[3],[1,3]]})");
  EXPECT_EQ(cli({"count", "--variant", "lsp", "--profile", path}).out, "12\n");
  EXPECT_EQ(cli({"count", "--variant", "kint", "--profile", path, "--outcome", "213"}).out, "4\n");
  EXPECT_EQ(cli({"count", "--variant", "lopf", "--profile", path}).out, "378\n");
}

TEST(Cli, Table) {
  auto r = cli({"table", "--variant", "kipf", "--from", "2", "--to", "5", "-k", "n-1", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "variant,n,k,count\nkipf,2,1,2\nkipf,3,2,4\nkipf,4,3,8\nkipf,5,4,16\n");
  auto j = nlohmann::json::parse(cli({"table", "--variant", "sp", "--from", "1", "--to", "3", "--format", "json"}).out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j.at(2).at("count"), "168");
  EXPECT_TRUE(j.at(2).at("k").is_null());
  auto all = cli({"table", "--variant", "ksp", "--from", "1", "--to", "3", "-k", "all", "--format", "csv"});
  EXPECT_EQ(all.out, "variant,n,k,count\nksp,1,1,1\nksp,2,1,2\nksp,2,2,1\nksp,3,1,6\nksp,3,2,18\nksp,3,3,1\n");
}

TEST(Cli, VerifyAndOracle) {
  auto v = cli({"verify", "--suite", "variants", "--max-n", "3"});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_NE(v.out.find("0 failed"), std::string::npos);
  EXPECT_EQ(v.out.substr(v.out.size() - 5), "PASS\n");
  EXPECT_EQ(cli({"verify", "--suite", "profiles"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "--suite", "profiles", "-n", "3", "--trials", "50", "--seed", "1"}).code, kExitOk);
  auto j = nlohmann::json::parse(cli({"verify", "--suite", "identities", "--max-n", "4", "--format", "json"}).out);
  EXPECT_TRUE(j.at("all_passed").get<bool>());

  auto o = cli({"oracle", "--variant", "kipf", "-k", "2", "-n", "3", "--format", "csv"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("123,2\n"), std::string::npos);
  EXPECT_EQ(o.out.find("132,"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
  EXPECT_EQ(cli({"count", "--variant", "sp", "-n", "x"}).code, kExitUsage);
}
