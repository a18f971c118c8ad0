#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "degensum/cli.hpp"
#include "degensum/lambda_poly.hpp"
#include "degensum/sums.hpp"

namespace degensum {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliSum, SingleMethodPlain) {
  auto r = run({"sum", "--k", "2", "--n", "3", "--lambda", "0", "--method", "direct"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "14\n");
  r = run({"sum", "--k", "1", "--n", "0", "--lambda", "1/2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
}

TEST(CliSum, AllMethodsSymbolicJson) {
  const auto r = run({"sum", "--k", "2", "--n", "3", "--symbolic", "--method", "all", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["agreement"], true);
  EXPECT_EQ(doc["lambda"], "symbolic");
  EXPECT_EQ(doc["values"].size(), 6u);
  for (SumMethod m : kAllSumMethods) EXPECT_EQ(doc["values"][std::string(to_string(m))], "14 - 6*L");
}

TEST(CliSum, AllMethodsPlainAndCsv) {
  auto r = run({"sum", "--k", "2", "--n", "3", "--lambda", "symbolic", "--method", "all"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("rec_prob"), std::string::npos);
  EXPECT_NE(r.out.find("agreement"), std::string::npos);
  r = run({"sum", "--k", "2", "--n", "3", "--lambda", "1", "--method", "all", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "method,value");
  EXPECT_NE(r.out.find("stirling,8\n"), std::string::npos);
}

TEST(CliSum, JsonValuesRoundTrip) {
  for (const std::vector<std::string>& lam : {std::vector<std::string>{"--symbolic"},
                                              std::vector<std::string>{"--lambda", "-2/3"}}) {
    std::vector<std::string> args = {"sum", "--k", "6", "--n", "9", "--method", "all", "--format", "json"};
    args.insert(args.end(), lam.begin(), lam.end());
    const auto r = run(args);
    ASSERT_EQ(r.code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    for (const auto& [name, value] : doc["values"].items()) {
      const std::string text = value.get<std::string>();
      if (lam.front() == "--symbolic") {
        EXPECT_EQ(LambdaPoly::parse(text), sum_direct(SymbolicLambda{}, 6, Integer(9))) << name;
      } else {
        EXPECT_EQ(Rational::parse(text), sum_direct(FixedLambda{Rational::make(-2, 3)}, 6, Integer(9))) << name;
      }
    }
  }
}

TEST(CliSum, UsageErrors) {
  EXPECT_EQ(run({"sum", "--k", "2", "--n", "3", "--lambda", "1/x"}).code, cli::kUsage);
  EXPECT_EQ(run({"sum", "--k", "2", "--n", "3", "--lambda", "1/0"}).code, cli::kUsage);
  EXPECT_EQ(run({"sum", "--k", "0", "--n", "3", "--lambda", "0"}).code, cli::kUsage);
  EXPECT_EQ(run({"sum", "--k", "2", "--n", "-1", "--lambda", "0"}).code, cli::kUsage);
  EXPECT_EQ(run({"sum", "--k", "2", "--n", "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"sum", "--k", "2", "--n", "3", "--lambda", "0", "--symbolic"}).code, cli::kUsage);
  EXPECT_EQ(run({"sum", "--k", "2", "--n", "3", "--lambda", "0", "--method", "magic"}).code, cli::kUsage);
  EXPECT_EQ(run({"sum", "--k", "2", "--n", "3", "--lambda", "0", "--bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"sum", "--k", "2", "--n", "3", "--lambda", "0", "--format", "xml"}).code, cli::kUsage);
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
}

TEST(CliHelp, MentionsSymbolicLetterAndExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("letter L"), std::string::npos);
}

TEST(CliTables, BernoulliSymbolicCsv) {
  const auto r = run({"bernoulli", "--max-n", "2", "--symbolic", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,value\n0,1\n1,-1/2 + 1/2*L\n2,1/6 - 1/6*L^2\n");
}

TEST(CliTables, BernoulliPolynomialAtX) {
  const auto r = run({"bernoulli", "--max-n", "1", "--lambda", "0", "--x", "0", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc[1]["n"], 1);
  EXPECT_EQ(doc[1]["value"], "-1/2");
  EXPECT_EQ(run({"bernoulli", "--max-n", "1", "--lambda", "0", "--x", "zz"}).code, cli::kUsage);
}

TEST(CliTables, StirlingPlainAndJson) {
  auto r = run({"stirling", "--max-n", "3", "--symbolic"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1 - 3*L + 2*L^2"), std::string::npos);
  r = run({"stirling", "--max-n", "2", "--lambda", "0", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 6u);
  EXPECT_EQ(doc[4]["n"], 2);
  EXPECT_EQ(doc[4]["k"], 1);
  EXPECT_EQ(doc[4]["value"], "1");
  r = run({"stirling", "--max-n", "2", "--lambda", "1/2", "--format", "csv"});
  EXPECT_EQ(r.out, "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,1/2\n2,2,1\n");
}

TEST(CliVerify, GridPasses) {
  auto r = run({"verify", "--max-k", "6", "--max-n", "12", "--lambdas", "0,1,1/2"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("failures 0"), std::string::npos);
  r = run({"verify", "--max-k", "1", "--max-n", "1", "--lambdas", "0", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_GE(doc["cases_run"].get<int>(), 1);
  EXPECT_TRUE(doc["failures"].empty());
}

TEST(CliVerify, InjectedFaultFailsWithNamedIdentity) {
  const auto r = run({"verify", "--max-k", "3", "--max-n", "4", "--lambdas", "0", "--inject-fault", "stirling"});
  EXPECT_EQ(r.code, cli::kDisagreement);
  EXPECT_NE(r.out.find("FAIL stirling_defining"), std::string::npos);
}

TEST(CliVerify, ThreadsEnvironmentVariable) {
  ::setenv("DEGENSUM_THREADS", "3", 1);
  const auto threaded = run({"verify", "--max-k", "3", "--max-n", "4", "--lambdas", "0,2", "--inject-fault", "stirling"});
  ::setenv("DEGENSUM_THREADS", "0", 1);
  const auto bad = run({"verify", "--max-k", "2", "--max-n", "2"});
  ::unsetenv("DEGENSUM_THREADS");
  const auto serial = run({"verify", "--max-k", "3", "--max-n", "4", "--lambdas", "0,2", "--inject-fault", "stirling"});
  EXPECT_EQ(threaded.out, serial.out);
  EXPECT_EQ(bad.code, cli::kUsage);
}

TEST(CliMoment, ExactOnly) {
  const auto r = run({"moment", "--dist", "uniform:3", "--k", "2", "--lambda", "0", "--samples", "0", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["exact_direct"], "7/2");
  EXPECT_EQ(doc["exact_survival"], "7/2");
  EXPECT_TRUE(doc["mc_estimate"].is_null());
}

TEST(CliMoment, MonteCarloDeterministic) {
  const std::vector<std::string> args = {"moment", "--dist", "uniform:3", "--k", "2", "--lambda", "0",
                                         "--samples", "100000", "--seed", "1"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(run({"moment", "--dist", "uniform:3", "--k", "2", "--lambda", "0", "--samples",
                                              "100000", "--seed", "1", "--format", "json"})
                                             .out);
  EXPECT_LE(std::abs(doc["mc_estimate"].get<double>() - 3.5), 4 * doc["mc_stderr"].get<double>());
}

TEST(CliMoment, PmfFile) {
  const std::string path = ::testing::TempDir() + "degensum_cli_point5.json";
  {
    std::ofstream out(path);
    out << R"({"support": [5], "probs": ["1"]})";
  }
  const auto r = run({"moment", "--dist", "file:" + path, "--k", "3", "--lambda", "1/2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("exact_direct,90\n"), std::string::npos);
  EXPECT_NE(r.out.find("exact_survival,90\n"), std::string::npos);
  EXPECT_NE(r.out.find("mc_stderr,0\n"), std::string::npos);
  std::remove(path.c_str());
}

TEST(CliMoment, DataAndUsageErrors) {
  const std::string path = ::testing::TempDir() + "degensum_cli_bad.json";
  {
    std::ofstream out(path);
    out << R"({"support": [0, 1], "probs": ["1/2", "1/3"]})";
  }
  const auto bad = run({"moment", "--dist", path, "--k", "2", "--lambda", "0"});
  EXPECT_EQ(bad.code, cli::kData);
  EXPECT_NE(bad.err.find("probabilities_sum_to_one"), std::string::npos);
  std::remove(path.c_str());
  EXPECT_EQ(run({"moment", "--dist", "file:/nonexistent/x.json", "--k", "2", "--lambda", "0"}).code, cli::kData);
  EXPECT_EQ(run({"moment", "--dist", "uniform:x", "--k", "2", "--lambda", "0"}).code, cli::kUsage);
  EXPECT_EQ(run({"moment", "--dist", "uniform:3", "--k", "0", "--lambda", "0"}).code, cli::kUsage);
  EXPECT_EQ(run({"moment", "--dist", "uniform:3", "--k", "2", "--lambda", "1/0"}).code, cli::kUsage);
}

}  // namespace
}  // namespace degensum
