#pragma once

/**
 * @file probmoment.hpp
 * @brief Degenerate moments E[(X)_{k,lambda}] of finite-support,
 *        nonnegative integer-valued random variables.
 *
 * Two exact routes (direct expectation and the survival-weighted telescoping
 * sum) plus a seeded Monte Carlo estimate.
 *
 * Monte Carlo sampling uses std::mt19937_64 seeded with the given seed. Each
 * uniform variate is (word >> 11) * 2^-53, and the sample is the first
 * support point whose cumulative probability (converted to double once,
 * last entry pinned to 1.0) exceeds that variate.
 */

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degensum/rational.hpp"

namespace degensum {

/// Raised when a PMF violates one of its invariants; `invariant()` names it.
class PmfError : public std::runtime_error {
 public:
  PmfError(std::string invariant, const std::string& detail)
      : std::runtime_error(invariant + ": " + detail), invariant_(std::move(invariant)) {}

  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

struct PmfEntry {
  Integer value;
  Rational probability;
};

class FinitePMF {
 public:
  /// Validates: nonempty, values nonnegative and strictly ascending,
  /// probabilities nonnegative and summing to exactly 1.
  static FinitePMF make(std::vector<PmfEntry> entries);

  const std::vector<PmfEntry>& entries() const { return entries_; }
  const Integer& max_support() const { return entries_.back().value; }

 private:
  explicit FinitePMF(std::vector<PmfEntry> entries) : entries_(std::move(entries)) {}

  std::vector<PmfEntry> entries_;
};

/// Uniform on {0, 1, ..., n}.
FinitePMF uniform_pmf(const Integer& n);
FinitePMF point_mass(const Integer& m);

/// P{X > x}.
Rational survival(const FinitePMF& pmf, const Integer& x);

/// sum_x (x)_{k,lambda} P{X = x}.
Rational moment_exact(const FinitePMF& pmf, std::size_t k, const Rational& lam);

/// sum_{x=0}^{max-1} ((x+1)_{k,lambda} - (x)_{k,lambda}) P{X > x}.
Rational moment_survival(const FinitePMF& pmf, std::size_t k, const Rational& lam);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(samples)
};

/// Bit-reproducible for a given seed. With samples == 1 the standard error is 0.
McEstimate moment_mc(const FinitePMF& pmf, std::size_t k, const Rational& lam, std::uint64_t samples,
                     std::uint64_t seed);

struct MomentReport {
  std::size_t k = 0;
  Rational lambda;
  Rational exact_direct;
  Rational exact_survival;
  double mc_estimate = 0.0;
  double mc_stderr = 0.0;
  std::uint64_t samples = 0;  // 0: Monte Carlo skipped
  std::uint64_t seed = 0;

  bool exact_agree() const { return exact_direct == exact_survival; }
};

MomentReport moment_report(const FinitePMF& pmf, std::size_t k, const Rational& lam, std::uint64_t samples,
                           std::uint64_t seed);

/// Parses {"support": [ints], "probs": ["p/q", ...]}.
FinitePMF parse_pmf_json(std::string_view text);
FinitePMF load_pmf_file(const std::string& path);

}  // namespace degensum
