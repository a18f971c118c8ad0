#pragma once

/**
 * @file verify.hpp
 * @brief Identity registry and grid runner behind `degensum verify`.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degensum/rational.hpp"

namespace degensum {

struct VerifyOptions {
  std::size_t max_k = 6;
  std::size_t max_n = 12;
  std::vector<Rational> lambdas{Rational(0), Rational(1), Rational::make(1, 2)};
  bool symbolic = false;
  std::uint64_t seed = 1;
  unsigned threads = 1;  // 0: hardware concurrency
  /// Test hook: "stirling" corrupts one Stirling table entry before the run.
  std::optional<std::string> fault;
};

struct VerifyFailure {
  std::string identity;
  std::string params;
  std::string expected;
  std::string got;

  friend bool operator==(const VerifyFailure&, const VerifyFailure&) = default;
};

struct VerifyOutcome {
  std::size_t cases_run = 0;
  std::vector<VerifyFailure> failures;  // sorted by identity, then params

  /// 0 when every identity held, 2 (mathematical disagreement) otherwise.
  int exit_code() const { return failures.empty() ? 0 : 2; }
};

/// Names of every registered identity, in registry order.
std::vector<std::string> verify_identity_names();

/// Runs every registered identity over the grid. Results do not depend on
/// the thread count.
VerifyOutcome run_verify(const VerifyOptions& options);

}  // namespace degensum
