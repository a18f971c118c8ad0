#include <algorithm>

#include <gtest/gtest.h>

#include "degensum/verify.hpp"
#include "test_support.hpp"

namespace degensum {
namespace {

TEST(Verify, SmallGridPasses) {
  VerifyOptions opts;
  opts.max_k = 4;
  opts.max_n = 6;
  opts.lambdas = {Rational(0), Rational(1), testing::q(1, 2)};
  const auto outcome = run_verify(opts);
  EXPECT_GT(outcome.cases_run, 0u);
  EXPECT_TRUE(outcome.failures.empty()) << outcome.failures.front().identity << " " << outcome.failures.front().params;
  EXPECT_EQ(outcome.exit_code(), 0);
}

TEST(Verify, MinimalGridRunsCases) {
  VerifyOptions opts;
  opts.max_k = 1;
  opts.max_n = 1;
  opts.lambdas = {Rational(0)};
  const auto outcome = run_verify(opts);
  EXPECT_GE(outcome.cases_run, 1u);
  EXPECT_EQ(outcome.exit_code(), 0);
}

TEST(Verify, SymbolicGridPasses) {
  VerifyOptions opts;
  opts.max_k = 4;
  opts.max_n = 5;
  opts.lambdas = {testing::q(-2, 3)};
  opts.symbolic = true;
  const auto outcome = run_verify(opts);
  EXPECT_TRUE(outcome.failures.empty());
}

TEST(Verify, CorruptedStirlingTableIsDetected) {
  VerifyOptions opts;
  opts.max_k = 4;
  opts.max_n = 5;
  opts.lambdas = {Rational(0), testing::q(1, 2)};
  opts.symbolic = true;
  opts.fault = "stirling";
  const auto outcome = run_verify(opts);
  EXPECT_NE(outcome.exit_code(), 0);
  auto has = [&](const std::string& name) {
    return std::any_of(outcome.failures.begin(), outcome.failures.end(),
                       [&](const VerifyFailure& f) { return f.identity == name; });
  };
  EXPECT_TRUE(has("stirling_defining"));
  EXPECT_TRUE(has("stirling_linear_solve"));
  EXPECT_TRUE(has("six_way_agreement"));
  EXPECT_TRUE(has("stirling_lambda0_classical"));
  EXPECT_FALSE(has("vandermonde"));
  EXPECT_TRUE(std::is_sorted(outcome.failures.begin(), outcome.failures.end(), [](const auto& a, const auto& b) {
    return std::tie(a.identity, a.params) < std::tie(b.identity, b.params);
  }));
}

TEST(Verify, ResultsIndependentOfThreadCount) {
  VerifyOptions opts;
  opts.max_k = 3;
  opts.max_n = 4;
  opts.lambdas = {Rational(0), Rational(3)};
  opts.fault = "stirling";
  opts.threads = 1;
  const auto serial = run_verify(opts);
  opts.threads = 4;
  const auto parallel = run_verify(opts);
  EXPECT_EQ(serial.cases_run, parallel.cases_run);
  EXPECT_EQ(serial.failures, parallel.failures);
}

TEST(Verify, RegistryNamesEveryIdentity) {
  const auto names = verify_identity_names();
  for (const char* expected : {"vandermonde", "reflection", "stirling_defining", "stirling_linear_solve",
                               "bernoulli_difference", "six_way_agreement", "lambda0_bridge", "lambda1_bridge",
                               "telescoping", "degree_bound", "survival_identity", "uniform_chain", "monte_carlo"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), expected), names.end()) << expected;
  }
}

TEST(Verify, RejectsBadOptions) {
  VerifyOptions opts;
  opts.max_k = 0;
  EXPECT_THROW(run_verify(opts), std::invalid_argument);
  opts.max_k = 2;
  opts.fault = "bernoulli";
  EXPECT_THROW(run_verify(opts), std::invalid_argument);
}

}  // namespace
}  // namespace degensum
