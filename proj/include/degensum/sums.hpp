#pragma once

/**
 * @file sums.hpp
 * @brief Six algorithms for S_{k,lambda}(n) = sum_{j=1}^{n} (j)_{k,lambda},
 *        the classical lambda = 0 power-sum formulas, and the agreement report.
 *
 * The three recurrences build S_0..S_k bottom-up with S_{0,lambda}(n) = n.
 */

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degensum/degen_core.hpp"
#include "degensum/ring.hpp"
#include "degensum/special_numbers.hpp"

namespace degensum {

enum class SumMethod { direct, bernoulli, stirling, rec_a, rec_b, rec_prob };

inline constexpr std::array<SumMethod, 6> kAllSumMethods = {
    SumMethod::direct, SumMethod::bernoulli, SumMethod::stirling,
    SumMethod::rec_a,  SumMethod::rec_b,     SumMethod::rec_prob};

std::string_view to_string(SumMethod method);
std::optional<SumMethod> parse_sum_method(std::string_view name);

namespace detail {

inline void require_positive_k(std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be a positive integer");
}

inline Integer to_integer(std::size_t v) { return Integer(static_cast<unsigned long>(v)); }

// (1)_{j,lambda} for j = 0..max_j.
template <ScalarRing R>
std::vector<Scalar<R>> unit_falling(const R& ring, std::size_t max_j) {
  std::vector<Scalar<R>> out;
  out.reserve(max_j + 1);
  for (std::size_t j = 0; j <= max_j; ++j) out.push_back(degen_falling(ring, one(ring), j));
  return out;
}

}  // namespace detail

/// Definition: sum of (j)_{k,lambda} for j = 1..n.
template <ScalarRing R>
Scalar<R> sum_direct(const R& ring, std::size_t k, const Integer& n) {
  detail::require_positive_k(k);
  Scalar<R> acc = zero(ring);
  for (Integer j = 1; j <= n; ++j) acc = acc + degen_falling(ring, ring.embed_int(j), k);
  return acc;
}

/// S_k(n) = 1/(k+1) sum_{l=0}^{k} C(k+1, l) (n+1)_{k+1-l,lambda} beta_{l,lambda}.
template <ScalarRing R>
Scalar<R> sum_via_bernoulli(const SpecialNumbers<R>& tables, std::size_t k, const Integer& n) {
  detail::require_positive_k(k);
  const R& ring = tables.ring();
  const auto betas = tables.bernoulli_prefix(k);
  const Scalar<R> top = ring.embed_int(n + 1);
  Scalar<R> acc = zero(ring);
  for (std::size_t l = 0; l <= k; ++l) {
    acc = acc + scale(ring, binomial(k + 1, static_cast<long>(l)), degen_falling(ring, top, k + 1 - l) * betas[l]);
  }
  return ring.div_exact_int(acc, detail::to_integer(k + 1));
}

/// S_k(n) = sum_{l=1}^{k} {k brace l}_lambda C(n+1, l+1) l!.
template <ScalarRing R>
Scalar<R> sum_via_stirling(const SpecialNumbers<R>& tables, std::size_t k, const Integer& n) {
  detail::require_positive_k(k);
  const R& ring = tables.ring();
  const auto row = tables.stirling_row(k);
  Scalar<R> acc = zero(ring);
  for (std::size_t l = 1; l <= k; ++l) {
    acc = acc + scale(ring, binomial(n + 1, detail::to_integer(l + 1)) * factorial(l), row[l]);
  }
  return acc;
}

/// S_0..S_k by
/// S_k = [(n+1)_{k+1} - (1)_{k+1}]/(k+1) - 1/(k+1) sum_{r<k} C(k+1,r) (1)_{k+1-r} S_r.
template <ScalarRing R>
std::vector<Scalar<R>> sum_rec_a_prefix(const R& ring, std::size_t k, const Integer& n) {
  const auto ones = detail::unit_falling(ring, k + 1);
  const Scalar<R> top = ring.embed_int(n + 1);
  std::vector<Scalar<R>> s{ring.embed_int(n)};
  for (std::size_t m = 1; m <= k; ++m) {
    Scalar<R> acc = degen_falling(ring, top, m + 1) - ones[m + 1];
    for (std::size_t r = 0; r < m; ++r) {
      acc = acc - scale(ring, binomial(m + 1, static_cast<long>(r)), ones[m + 1 - r] * s[r]);
    }
    s.push_back(ring.div_exact_int(acc, detail::to_integer(m + 1)));
  }
  return s;
}

/// S_0..S_k by
/// S_k = (n)_{k+1}/(k+1) + 1/(k+1) sum_{r<k} C(k+1,r) (-1)^{k+1-r} <1>_{k+1-r} S_r.
template <ScalarRing R>
std::vector<Scalar<R>> sum_rec_b_prefix(const R& ring, std::size_t k, const Integer& n) {
  std::vector<Scalar<R>> rising;
  rising.reserve(k + 2);
  for (std::size_t j = 0; j <= k + 1; ++j) rising.push_back(degen_rising(ring, one(ring), j));
  const Scalar<R> base = ring.embed_int(n);
  std::vector<Scalar<R>> s{base};
  for (std::size_t m = 1; m <= k; ++m) {
    Scalar<R> acc = degen_falling(ring, base, m + 1);
    for (std::size_t r = 0; r < m; ++r) {
      const Scalar<R> term = scale(ring, binomial(m + 1, static_cast<long>(r)), rising[m + 1 - r] * s[r]);
      acc = (m + 1 - r) % 2 == 0 ? acc + term : acc - term;
    }
    s.push_back(ring.div_exact_int(acc, detail::to_integer(m + 1)));
  }
  return s;
}

/// S_0..S_k by the survival-sum recurrence
/// S_k = n (n+1)_k/(k+1) - 1/(k+1) sum_{r=1}^{k-1} (1)_{k+1-r} C(k, r-1) S_r
///       - lambda/(k+1) sum_{r=1}^{k-1} r C(k, r) (1)_{k-r} S_r.
template <ScalarRing R>
std::vector<Scalar<R>> sum_rec_prob_prefix(const R& ring, std::size_t k, const Integer& n) {
  const auto ones = detail::unit_falling(ring, k + 1);
  const Scalar<R> lam = ring.lambda_element();
  const Scalar<R> top = ring.embed_int(n + 1);
  std::vector<Scalar<R>> s{ring.embed_int(n)};
  for (std::size_t m = 1; m <= k; ++m) {
    Scalar<R> acc = ring.embed_int(n) * degen_falling(ring, top, m);
    Scalar<R> weighted = zero(ring);
    for (std::size_t r = 1; r < m; ++r) {
      acc = acc - scale(ring, binomial(m, static_cast<long>(r) - 1), ones[m + 1 - r] * s[r]);
      weighted = weighted + scale(ring, detail::to_integer(r) * binomial(m, static_cast<long>(r)), ones[m - r] * s[r]);
    }
    acc = acc - lam * weighted;
    s.push_back(ring.div_exact_int(acc, detail::to_integer(m + 1)));
  }
  return s;
}

template <ScalarRing R>
Scalar<R> sum_rec_a(const R& ring, std::size_t k, const Integer& n) {
  detail::require_positive_k(k);
  return sum_rec_a_prefix(ring, k, n).back();
}

template <ScalarRing R>
Scalar<R> sum_rec_b(const R& ring, std::size_t k, const Integer& n) {
  detail::require_positive_k(k);
  return sum_rec_b_prefix(ring, k, n).back();
}

template <ScalarRing R>
Scalar<R> sum_rec_prob(const R& ring, std::size_t k, const Integer& n) {
  detail::require_positive_k(k);
  return sum_rec_prob_prefix(ring, k, n).back();
}

template <ScalarRing R>
Scalar<R> sum_via_bernoulli(const R& ring, std::size_t k, const Integer& n) {
  return sum_via_bernoulli(SpecialNumbers<R>(ring), k, n);
}

template <ScalarRing R>
Scalar<R> sum_via_stirling(const R& ring, std::size_t k, const Integer& n) {
  return sum_via_stirling(SpecialNumbers<R>(ring), k, n);
}

template <ScalarRing R>
Scalar<R> sum_with(SumMethod method, const SpecialNumbers<R>& tables, std::size_t k, const Integer& n) {
  const R& ring = tables.ring();
  switch (method) {
    case SumMethod::direct: return sum_direct(ring, k, n);
    case SumMethod::bernoulli: return sum_via_bernoulli(tables, k, n);
    case SumMethod::stirling: return sum_via_stirling(tables, k, n);
    case SumMethod::rec_a: return sum_rec_a(ring, k, n);
    case SumMethod::rec_b: return sum_rec_b(ring, k, n);
    case SumMethod::rec_prob: return sum_rec_prob(ring, k, n);
  }
  throw std::logic_error("unknown sum method");
}

template <ScalarRing R>
struct SumReport {
  std::size_t k = 0;
  Integer n;
  std::string lambda;  // rational text or "symbolic"
  std::vector<std::pair<SumMethod, Scalar<R>>> values;
  bool agreement = true;
};

/// Runs every method; disagreement is reported through `agreement`.
template <ScalarRing R>
SumReport<R> sum_all_methods(const SpecialNumbers<R>& tables, std::size_t k, const Integer& n) {
  detail::require_positive_k(k);
  SumReport<R> report;
  report.k = k;
  report.n = n;
  report.lambda = tables.ring().describe();
  for (SumMethod m : kAllSumMethods) report.values.emplace_back(m, sum_with(m, tables, k, n));
  for (const auto& [method, value] : report.values) {
    if (!(value == report.values.front().second)) report.agreement = false;
  }
  return report;
}

template <ScalarRing R>
SumReport<R> sum_all_methods(const R& ring, std::size_t k, const Integer& n) {
  return sum_all_methods(SpecialNumbers<R>(ring), k, n);
}

enum class FaulhaberVariant { bernoulli_formula, rec_41, rec_42, rec_conclusion, integral };

inline constexpr std::array<FaulhaberVariant, 5> kAllFaulhaberVariants = {
    FaulhaberVariant::bernoulli_formula, FaulhaberVariant::rec_41, FaulhaberVariant::rec_42,
    FaulhaberVariant::rec_conclusion, FaulhaberVariant::integral};

std::string_view to_string(FaulhaberVariant variant);

/// Classical power sum 1^m + ... + n^m, m >= 1.
Rational faulhaber_classical(std::size_t m, const Integer& n, FaulhaberVariant variant);

}  // namespace degensum
