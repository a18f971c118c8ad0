#pragma once

/**
 * @file degen_core.hpp
 * @brief Degenerate falling/rising factorials, ordinary falling factorials
 *        and binomial coefficients.
 *
 * All products are accumulated left to right, one ring multiplication per
 * factor, with the same code path for fixed and symbolic lambda.
 */

#include <cstddef>
#include <string_view>

#include "degensum/ring.hpp"

namespace degensum {

enum class FactorialKind { degenerate_falling, degenerate_rising, ordinary_falling };

std::string_view to_string(FactorialKind kind);

/// Product of x + sign*i*step for i = 0..n-1; one when n == 0.
template <ScalarRing R>
Scalar<R> factorial(const R& ring, FactorialKind kind, const Scalar<R>& x, std::size_t n) {
  Scalar<R> acc = one(ring);
  if (n == 0) return acc;
  const Scalar<R> step = kind == FactorialKind::ordinary_falling ? one(ring) : ring.lambda_element();
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar<R> offset = ring.embed_int(Integer(static_cast<unsigned long>(i))) * step;
    acc = acc * (kind == FactorialKind::degenerate_rising ? x + offset : x - offset);
  }
  return acc;
}

/// (x)_{n,lambda} = x(x - lambda)...(x - (n-1)lambda).
template <ScalarRing R>
Scalar<R> degen_falling(const R& ring, const Scalar<R>& x, std::size_t n) {
  return factorial(ring, FactorialKind::degenerate_falling, x, n);
}

/// <x>_{n,lambda} = x(x + lambda)...(x + (n-1)lambda).
template <ScalarRing R>
Scalar<R> degen_rising(const R& ring, const Scalar<R>& x, std::size_t n) {
  return factorial(ring, FactorialKind::degenerate_rising, x, n);
}

/// (x)_n = x(x - 1)...(x - n + 1).
template <ScalarRing R>
Scalar<R> falling(const R& ring, const Scalar<R>& x, std::size_t n) {
  return factorial(ring, FactorialKind::ordinary_falling, x, n);
}

/// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
Integer binomial(const Integer& n, const Integer& k);
Integer binomial(unsigned long n, long k);

Integer factorial(unsigned long n);

}  // namespace degensum
