#pragma once

/**
 * @file special_numbers.hpp
 * @brief Degenerate Bernoulli numbers/polynomials, degenerate Stirling
 *        numbers of the second kind, and the classical Bernoulli layer.
 *
 * Degenerate Bernoulli numbers come from the coefficient recurrence of
 * beta(t) * (e_lambda(t) - 1) = t, which for N >= 2 reads
 *
 *   beta_{N-1} = -(1/N) * sum_{j=2}^{N} C(N, j) (1)_{j,lambda} beta_{N-j}.
 *
 * Degenerate Stirling numbers come from the triangle recurrence
 *
 *   {n+1, k} = {n, k-1} + (k - n*lambda) {n, k},
 *
 * which follows from (x)_{n+1,lambda} = (x)_{n,lambda}(x - n*lambda) and
 * x (x)_k = (x)_{k+1} + k (x)_k.
 */

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "degensum/degen_core.hpp"
#include "degensum/ring.hpp"

namespace degensum {

template <ScalarRing R>
struct BernoulliTable {
  std::vector<Scalar<R>> values;  // values[n] = beta_{n,lambda}
};

template <ScalarRing R>
struct StirlingTriangle {
  std::vector<std::vector<Scalar<R>>> rows;  // rows[n][k], 0 <= k <= n
};

namespace detail {

// Appends beta_{size}, ..., beta_{max_n} to values (values must hold beta_0.. already, or be empty).
template <ScalarRing R>
void extend_bernoulli(const R& ring, std::vector<Scalar<R>>& values, std::size_t max_n) {
  if (values.empty()) values.push_back(one(ring));
  if (values.size() > max_n) return;
  // (1)_{j,lambda} for j up to max_n + 1.
  std::vector<Scalar<R>> ones;
  ones.reserve(max_n + 2);
  const Scalar<R> unit = one(ring);
  for (std::size_t j = 0; j <= max_n + 1; ++j) ones.push_back(degen_falling(ring, unit, j));
  for (std::size_t m = values.size(); m <= max_n; ++m) {
    const std::size_t big_n = m + 1;
    Scalar<R> acc = zero(ring);
    for (std::size_t j = 2; j <= big_n; ++j) {
      acc = acc + scale(ring, binomial(big_n, static_cast<long>(j)), ones[j] * values[big_n - j]);
    }
    values.push_back(ring.div_exact_int(-acc, Integer(static_cast<unsigned long>(big_n))));
  }
}

template <ScalarRing R>
void extend_stirling(const R& ring, std::vector<std::vector<Scalar<R>>>& rows, std::size_t max_n) {
  if (rows.empty()) rows.push_back({one(ring)});
  const Scalar<R> lam = ring.lambda_element();
  while (rows.size() <= max_n) {
    const std::size_t n = rows.size() - 1;
    const auto& prev = rows.back();
    std::vector<Scalar<R>> next;
    next.reserve(n + 2);
    for (std::size_t k = 0; k <= n + 1; ++k) {
      Scalar<R> entry = zero(ring);
      if (k >= 1) entry = prev[k - 1];
      if (k <= n) {
        const Scalar<R> weight = ring.embed_int(Integer(static_cast<unsigned long>(k))) -
                                 ring.embed_int(Integer(static_cast<unsigned long>(n))) * lam;
        entry = entry + weight * prev[k];
      }
      next.push_back(std::move(entry));
    }
    rows.push_back(std::move(next));
  }
}

}  // namespace detail

/// beta_{0,lambda} .. beta_{max_n,lambda}.
template <ScalarRing R>
BernoulliTable<R> degen_bernoulli_numbers(std::size_t max_n, const R& ring) {
  BernoulliTable<R> table;
  detail::extend_bernoulli(ring, table.values, max_n);
  return table;
}

/// Stirling rows 0..max_n.
template <ScalarRing R>
StirlingTriangle<R> degen_stirling_triangle(std::size_t max_n, const R& ring) {
  StirlingTriangle<R> triangle;
  detail::extend_stirling(ring, triangle.rows, max_n);
  return triangle;
}

/**
 * Memoized Bernoulli and Stirling tables for one ring instantiation.
 *
 * Lookups beyond the current bound extend the tables under an exclusive
 * lock; all other lookups take a shared lock and return copies, so one
 * instance can serve concurrent workers.
 */
template <ScalarRing R>
class SpecialNumbers {
 public:
  explicit SpecialNumbers(R ring) : ring_(std::move(ring)) {}

  const R& ring() const { return ring_; }

  Scalar<R> bernoulli(std::size_t n) const {
    ensure_bernoulli(n);
    std::shared_lock lock(mutex_);
    return bernoulli_[n];
  }

  std::vector<Scalar<R>> bernoulli_prefix(std::size_t max_n) const {
    ensure_bernoulli(max_n);
    std::shared_lock lock(mutex_);
    return {bernoulli_.begin(), bernoulli_.begin() + static_cast<std::ptrdiff_t>(max_n + 1)};
  }

  /// {n brace k}_lambda; zero outside 0 <= k <= n.
  Scalar<R> stirling2(std::size_t n, long k) const {
    if (k < 0 || static_cast<std::size_t>(k) > n) return zero(ring_);
    ensure_stirling(n);
    std::shared_lock lock(mutex_);
    return stirling_[n][static_cast<std::size_t>(k)];
  }

  std::vector<Scalar<R>> stirling_row(std::size_t n) const {
    ensure_stirling(n);
    std::shared_lock lock(mutex_);
    return stirling_[n];
  }

  /// Test hook: replaces one Stirling entry so that the verify harness can
  /// be shown to detect a corrupted table.
  void override_stirling_for_testing(std::size_t n, std::size_t k, Scalar<R> value) {
    ensure_stirling(n);
    std::unique_lock lock(mutex_);
    stirling_.at(n).at(k) = std::move(value);
  }

 private:
  void ensure_bernoulli(std::size_t n) const {
    {
      std::shared_lock lock(mutex_);
      if (bernoulli_.size() > n) return;
    }
    std::unique_lock lock(mutex_);
    detail::extend_bernoulli(ring_, bernoulli_, n);
  }

  void ensure_stirling(std::size_t n) const {
    {
      std::shared_lock lock(mutex_);
      if (stirling_.size() > n) return;
    }
    std::unique_lock lock(mutex_);
    detail::extend_stirling(ring_, stirling_, n);
  }

  R ring_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<Scalar<R>> bernoulli_;
  mutable std::vector<std::vector<Scalar<R>>> stirling_;
};

/// beta_{n,lambda}(x) = sum_k C(n,k) beta_{k,lambda} (x)_{n-k,lambda}.
template <ScalarRing R>
Scalar<R> degen_bernoulli_poly(std::size_t n, const Scalar<R>& x, const SpecialNumbers<R>& tables) {
  const R& ring = tables.ring();
  const auto betas = tables.bernoulli_prefix(n);
  Scalar<R> acc = zero(ring);
  for (std::size_t k = 0; k <= n; ++k) {
    acc = acc + scale(ring, binomial(n, static_cast<long>(k)), betas[k] * degen_falling(ring, x, n - k));
  }
  return acc;
}

template <ScalarRing R>
Scalar<R> degen_bernoulli_poly(std::size_t n, const Scalar<R>& x, const R& ring) {
  return degen_bernoulli_poly(n, x, SpecialNumbers<R>(ring));
}

template <ScalarRing R>
Scalar<R> degen_stirling2(std::size_t n, long k, const R& ring) {
  if (k < 0 || static_cast<std::size_t>(k) > n) return zero(ring);
  return degen_stirling_triangle(n, ring).rows[n][static_cast<std::size_t>(k)];
}

/// Classical Bernoulli numbers B_0..B_max_n (B_1 = -1/2), from
/// sum_{j=0}^{m} C(m+1, j) B_j = 0.
std::vector<Rational> classical_bernoulli_numbers(std::size_t max_n);

/// Coefficients of B_m(u) in increasing powers of u.
std::vector<Rational> classical_bernoulli_poly_coeffs(std::size_t m);

/// Classical Stirling numbers of the second kind, rows 0..max_n.
std::vector<std::vector<Integer>> classical_stirling2(std::size_t max_n);

}  // namespace degensum
