#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace delkit::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "delkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(CliCount, Methods) {
  EXPECT_EQ(run_cli({"count", "--y", "11000", "--x", "110"}).out, "3\n");
  EXPECT_EQ(run_cli({"count", "--y", "0000111100001111", "--x", "0011", "--method", "runs"}).out,
            "300\n");
  EXPECT_EQ(run_cli({"count", "--y", "101", "--x", "101", "--method", "oracle"}).out, "1\n");
}

TEST(CliCount, Masks) {
  const auto r = run_cli({"count", "--y", "11000", "--x", "110", "--masks"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"3", "{1, 2, 3}", "{1, 2, 4}", "{1, 2, 5}"}));
}

TEST(CliCount, Json) {
  const auto r = run_cli({"count", "--y", "11000", "--x", "110", "--masks", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["schema"], "delkit.count");
  EXPECT_EQ(doc["version"], 1);
  EXPECT_EQ(doc["omega"], 3);
  EXPECT_EQ(doc["masks"].size(), 3U);
}

TEST(CliCount, HugeCountsAreStringsInJson) {
  const std::string y(100, '0');
  const std::string x(50, '0');
  const auto doc = nlohmann::json::parse(run_cli({"--format", "json", "count", "--y", y, "--x", x}).out);
  EXPECT_EQ(doc["omega"], "100891344545564193334812497256");
}

TEST(CliCount, UsageErrors) {
  EXPECT_EQ(run_cli({"count", "--y", "12", "--x", "1"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"count", "--y", "10"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"count", "--y", "10", "--x", "1", "--method", "magic"}).code, kExitUsage);
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"bogus"}).code, kExitUsage);
}

TEST(CliDistribution, Csv) {
  const auto r = run_cli({"distribution", "--x", "110", "--n", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"x,n,mu,upsilon,weight,count",
                                                   "110,5,40,16,1,6", "110,5,40,16,2,3",
                                                   "110,5,40,16,3,4", "110,5,40,16,4,1",
                                                   "110,5,40,16,6,2"}));
  EXPECT_EQ(lines(run_cli({"distribution", "--x", "1", "--n", "1"}).out).back(), "1,1,1,1,1,1");
}

TEST(CliDistribution, ByClusterJson) {
  const auto doc = nlohmann::json::parse(
      run_cli({"distribution", "--x", "101", "--n", "5", "--by-cluster", "--format", "json"}).out);
  EXPECT_EQ(doc["schema"], "delkit.distribution");
  std::uint64_t strings = 0;
  std::uint64_t weight = 0;
  for (const auto& row : doc["rows"]) {
    strings += row["count"].get<std::uint64_t>();
    weight += row["count"].get<std::uint64_t>() * row["weight"].get<std::uint64_t>();
  }
  EXPECT_EQ(strings, 16U);
  EXPECT_EQ(weight, 40U);
}

TEST(CliDistribution, BudgetPrecedence) {
  ::setenv("DELKIT_BUDGET", "4", 1);
  EXPECT_EQ(run_cli({"distribution", "--x", "1", "--n", "5"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"--max-n", "5", "distribution", "--x", "1", "--n", "5"}).code, kExitOk);
  ::setenv("DELKIT_BUDGET", "four", 1);
  EXPECT_EQ(run_cli({"distribution", "--x", "1", "--n", "3"}).code, kExitUsage);
  ::unsetenv("DELKIT_BUDGET");
  EXPECT_EQ(run_cli({"distribution", "--x", "1", "--n", "5"}).code, kExitOk);
}

TEST(CliSweep, Rows) {
  const auto r = run_cli({"sweep", "--m", "5", "--n", "8", "--alpha", "2"});
  ASSERT_EQ(r.code, kExitOk);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 33U);
  EXPECT_EQ(rows[0], "x,n,shannon,renyi_2,min_entropy");
  // The lowest Shannon entropy belongs to the two constant strings.
  double lowest = 1e9;
  std::vector<std::string> argmin;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto comma = rows[i].find(',');
    const std::string x = rows[i].substr(0, comma);
    const double h = std::stod(rows[i].substr(rows[i].find(',', comma + 1) + 1));
    if (h < lowest - 1e-9) {
      lowest = h;
      argmin = {x};
    } else if (h < lowest + 1e-9) {
      argmin.push_back(x);
    }
  }
  EXPECT_EQ(argmin, (std::vector<std::string>{"00000", "11111"}));
}

TEST(CliSweep, TrivialAndSymmetric) {
  EXPECT_EQ(lines(run_cli({"sweep", "--m", "1", "--n", "1"}).out),
            (std::vector<std::string>{"x,n,shannon,renyi_2,min_entropy", "0,1,0,0,0", "1,1,0,0,0"}));
  const auto rows = lines(run_cli({"sweep", "--m", "3", "--n", "5"}).out);
  auto value = [&](const std::string& x) {
    for (const auto& r : rows) {
      if (r.rfind(x + ",", 0) == 0) return r.substr(x.size());
    }
    return std::string();
  };
  EXPECT_EQ(value("110"), value("001"));
}

TEST(CliSweep, ThreadCountDoesNotChangeOutput) {
  const auto one = run_cli({"sweep", "--m", "6", "--n", "9", "--alpha", "0.5,2,3"});
  const auto four = run_cli({"sweep", "--m", "6", "--n", "9", "--alpha", "0.5,2,3", "--threads", "4"});
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(run_cli({"sweep", "--m", "13", "--n", "14"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"sweep", "--m", "2", "--n", "4", "--alpha", "1"}).code, kExitUsage);
}

TEST(CliGchain, Chains) {
  const auto rows = lines(run_cli({"gchain", "--x", "101010", "--deletions", "2"}).out);
  ASSERT_EQ(rows.size(), 7U);
  EXPECT_EQ(rows[0], "step,x,H");
  EXPECT_EQ(rows.back().substr(0, 9), "5,000000,");
  double previous = 1e9;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double h = std::stod(rows[i].substr(rows[i].rfind(',') + 1));
    EXPECT_LT(h, previous - 1e-9);
    previous = h;
  }
  EXPECT_EQ(lines(run_cli({"gchain", "--x", "0000"}).out).size(), 2U);
  const auto short_chain = lines(run_cli({"gchain", "--x", "110", "--deletions", "1"}).out);
  ASSERT_EQ(short_chain.size(), 3U);
  EXPECT_EQ(short_chain[2].substr(0, 6), "1,000,");
}

TEST(CliVerify, Suites) {
  for (const char* suite : {"identityB", "identityC", "lemma1", "lemma4", "clusters", "initials",
                            "singletons", "entropy-min"}) {
    const auto r = run_cli({"verify", "--suite", suite, "--max-m", "6"});
    EXPECT_EQ(r.code, kExitOk) << suite;
    const auto rows = lines(r.out);
    ASSERT_GT(rows.size(), 1U) << suite;
    EXPECT_EQ(rows[0], "suite,case,lhs,rhs,ok");
    for (std::size_t i = 1; i < rows.size(); ++i) {
      ASSERT_EQ(rows[i].substr(rows[i].rfind(',') + 1), "true") << rows[i];
    }
  }
  EXPECT_EQ(run_cli({"verify", "--suite", "nonsense"}).code, kExitUsage);
}

TEST(CliVerify, JsonAll) {
  const auto r = run_cli({"--format", "json", "verify", "--max-m", "4"});
  EXPECT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["schema"], "delkit.verify");
  for (const auto& row : doc["rows"]) ASSERT_TRUE(row["ok"].get<bool>());
}

TEST(CliOutput, WritesFileAndIsDeterministic) {
  const auto path = std::filesystem::temp_directory_path() / "delkit_cli_test.csv";
  const auto r = run_cli({"--out", path.string(), "distribution", "--x", "0110", "--n", "7"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  EXPECT_EQ(file.str(), run_cli({"distribution", "--x", "0110", "--n", "7"}).out);
  std::filesystem::remove(path);
  EXPECT_EQ(run_cli({"--out", "/nonexistent/dir/file.csv", "count", "--y", "1", "--x", "1"}).code,
            kExitUsage);
}

}  // namespace
}  // namespace delkit::cli
