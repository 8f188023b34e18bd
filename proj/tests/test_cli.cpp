#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "quivercount");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = quivercount::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, TreesListsCatalog) {
  const auto r = run({"trees", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["entries"].size(), 3u);
  std::vector<int> auts;
  for (const auto& e : j["entries"]) auts.push_back(e["aut"]);
  std::sort(auts.begin(), auts.end());
  EXPECT_EQ(auts, (std::vector<int>{1, 2, 2}));

  EXPECT_EQ(nlohmann::json::parse(run({"trees", "1", "--format", "json"}).out)["entries"].size(), 1u);
  const auto csv = lines(run({"trees", "5", "--format", "csv"}).out);
  EXPECT_EQ(csv.size(), 1u + 27u);
  EXPECT_EQ(csv.front(), "index,quiver,aut,windings,code");
}

TEST(Cli, TreesGuard) {
  const auto r = run({"trees", "9"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("resource"), std::string::npos);
}

TEST(Cli, TmTableRows) {
  const auto r = run({"tm-table", "--dmax", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 5u);
  EXPECT_EQ(l[0], "d=1: 1");
  EXPECT_EQ(l[2], "d=3: 4*C(g,2) + C(g,1)");
  EXPECT_EQ(l[4], "d=5: 400*C(g,4) + 428*C(g,3) + 93*C(g,2) + C(g,1)");
  EXPECT_EQ(run({"tm-table", "--dmax", "7"}).code, 2);
}

TEST(Cli, TmCountAndBrute) {
  const auto r = run({"tm-count", "5:1>0,2>0,3>0,4>0", "--dim-vector", "2,1,1,1,1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["classes"].size(), 6u);
  const auto b = run({"tm-brute", "4", "--g", "2", "--format", "json"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(nlohmann::json::parse(b.out)["count"], 22);
}

TEST(Cli, Kac) {
  const auto r = run({"kac", "S2", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).front(), "A(q) = q^5 + q^3");
  const auto j = nlohmann::json::parse(run({"kac", "3:1>0,1>0,2>1", "--dim-vector", "2,2,1", "--format", "json"}).out);
  EXPECT_EQ(j["coeffs"], nlohmann::json::parse("[2,2,1]"));
  EXPECT_EQ(j["skip_chars"], nlohmann::json::parse("[2]"));
  EXPECT_EQ(run({"kac-table", "--g", "2", "--dmax", "3", "--format", "csv"}).code, 0);
}

TEST(Cli, Compare) {
  const auto r = run({"compare", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  EXPECT_EQ(l.front(), "d,g,tm,kac_at_one,difference,relation");
  EXPECT_NE(std::find(l.begin(), l.end(), "6,2,450,449,1,greater"), l.end());
  bool found = false;
  for (const auto& row : l) found = found || row.rfind("4,3,", 0) == 0 && row.find(",0,equal") != std::string::npos;
  EXPECT_TRUE(found);
}

TEST(Cli, VerifyAllSingleCheck) {
  const auto r = run({"verify-all", "--only", "cayley", "--dmax", "8", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["checks"].size(), 8u);
  EXPECT_TRUE(j["passed"]);
  EXPECT_EQ(run({"verify-all", "--only", "nonsense"}).code, 3);
}

TEST(Cli, BadInput) {
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"kac", "S2"}).code, 3);
  EXPECT_EQ(run({"tm-count", "Q?", "3"}).code, 3);
  EXPECT_EQ(run({"trees", "3", "--format", "xml"}).code, 3);
  EXPECT_EQ(run({"kac", "A2", "--dim-vector", "1,x"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
  for (const std::vector<std::string> args : {std::vector<std::string>{"tm-brute", "3", "--g", "2", "--format", "json"},
                                              std::vector<std::string>{"orbit-poly", "4", "--format", "csv"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}
