#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "cli.hpp"

using namespace sigma0;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "sigma0");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

nlohmann::ordered_json one_record(const Result& r) {
  const auto ls = lines(r.out);
  EXPECT_EQ(ls.size(), 1u) << r.out;
  return nlohmann::ordered_json::parse(ls.at(0));
}

} // namespace

TEST(Cli, Sigma0OfSmallGroups) {
  auto r = run({"sigma0", "S5", "--format", "jsonl"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = one_record(r);
  EXPECT_EQ(j["value"], "6");
  EXPECT_EQ(j["status"], "optimal");
  r = run({"sigma0", "C6", "--format", "jsonl"});
  EXPECT_EQ(one_record(r)["value"], "2");
  r = run({"sigma0", "C8", "--format", "jsonl"});
  EXPECT_EQ(one_record(r)["value"], "inf");
  r = run({"sigma0", "S5", "--mode", "catalog", "--format", "jsonl"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(one_record(r)["value"], "6");
}

TEST(Cli, ClassCoverOfS6) {
  const auto r = run({"sigma0", "S6", "--class", "2,2,2", "--format", "jsonl"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = one_record(r);
  EXPECT_EQ(j["class"], "(2,2,2)");
  EXPECT_EQ(j["status"], "optimal");
}

TEST(Cli, CountValuesAndGuard) {
  auto r = run({"count", "--n", "14", "--family", "W7", "--class", "8,4,2", "--format", "jsonl"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(one_record(r)["count"], "3175200");
  r = run({"count", "--n", "11", "--family", "X1", "--class", "4,4,2,1", "--format", "jsonl"});
  EXPECT_EQ(one_record(r)["count"], "56700");
  r = run({"count", "--n", "10", "--family", "X2", "--class", "4,4,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("count: 1260"), std::string::npos) << r.out;
  r = run({"count", "--n", "8", "--family", "W4", "--class", "4,4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("sum to n/2"), std::string::npos) << r.err;
  r = run({"count", "--n", "14", "--family", "W7", "--class", "8,4,2", "--human"});
  EXPECT_NE(r.out.find("3,175,200"), std::string::npos);
  r = run({"count", "--n", "14", "--family", "W7", "--class", "8,4,2", "--human", "--format", "csv"});
  EXPECT_EQ(r.out.find("3,175,200"), std::string::npos);
}

TEST(Cli, VerifyExitCodes) {
  auto r = run({"verify", "unbeatable", "--n", "10"});
  EXPECT_EQ(r.code, 0) << r.out;
  r = run({"verify", "f-char", "--max", "500"});
  EXPECT_EQ(r.code, 0) << r.out;
  r = run({"verify", "s10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("skipped"), std::string::npos);
  r = run({"verify", "unbeatable", "--n", "7"});
  EXPECT_EQ(r.code, 1);
  r = run({"verify", "no-such-check"});
  EXPECT_EQ(r.code, 2);
  r = run({"verify", "power2", "--n", "12"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"table", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"sigma0", "S5", "--budget", "0s"}).code, 2);
  EXPECT_EQ(run({"sigma0", "Q99"}).code, 2);
  EXPECT_EQ(run({"sigma0", "A5", "--class", "5"}).code, 2);
  EXPECT_EQ(run({"table", "--max", "65"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, JsonLinesRoundTrip) {
  const auto r = run({"verify", "all", "--format", "jsonl"});
  EXPECT_EQ(r.code, 1); // the n = 7 report fails
  const auto ls = lines(r.out);
  ASSERT_GT(ls.size(), 30u);
  for (const auto& l : ls) EXPECT_EQ(to_json(report_from_json(nlohmann::ordered_json::parse(l))).dump(), l);
  EXPECT_EQ(run({"verify", "all", "--format", "jsonl"}).out, r.out);
  for (const auto& l : lines(run({"table", "--format", "jsonl"}).out))
    EXPECT_EQ(nlohmann::ordered_json::parse(l).dump(), l);
}

TEST(Cli, TableRows) {
  const auto r = run({"table", "--max", "24", "--format", "jsonl"});
  ASSERT_EQ(r.code, 0);
  std::map<std::string, nlohmann::ordered_json> by_n;
  for (const auto& l : lines(r.out)) {
    auto j = nlohmann::ordered_json::parse(l);
    by_n[j["n"].dump()] = j;
  }
  EXPECT_EQ(by_n["4"]["sigma0"], "4");
  EXPECT_EQ(by_n["8"]["sigma0"], "36");
  EXPECT_EQ(by_n["16"]["sigma0"], Nat(1 + binomial(16, 8) / 2).str());
  EXPECT_EQ(by_n["6"]["sigma0"], "7");
  const auto b = bounds_3_2a(3);
  EXPECT_EQ(by_n["24"]["low"], b.c1.str());
  EXPECT_EQ(by_n["24"]["high"], b.c2.str());
}

TEST(Cli, SolveInstanceFile) {
  const std::string path = ::testing::TempDir() + "sigma0_cli_instance.txt";
  {
    std::ofstream f(path);
    f << "universe 4\nset 0 a: 0,1\nset 1 b: 2,3\nset 2 c: 1,2\nset 3 d: 0\n";
  }
  auto r = run({"solve", path, "--format", "jsonl"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = one_record(r);
  EXPECT_EQ(j["value"], "2");
  EXPECT_EQ(j["cover"], nlohmann::ordered_json::parse(R"(["a","b"])"));
  {
    std::ofstream f(path);
    f << "universe 2\nset 1 a: 0\n";
  }
  EXPECT_EQ(run({"solve", path}).code, 2);
  std::remove(path.c_str());
}

TEST(Cli, ListsCorpusAndCatalog) {
  const auto r = run({"list", "--format", "jsonl"});
  ASSERT_EQ(r.code, 0);
  std::size_t corpus = 0, primitive = 0;
  for (const auto& l : lines(r.out)) {
    const auto j = nlohmann::ordered_json::parse(l);
    (j["kind"] == "corpus" ? corpus : primitive) += 1;
  }
  EXPECT_GE(corpus, 15u);
  EXPECT_GT(primitive, 0u);
}
