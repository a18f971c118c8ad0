#pragma once

/**
 * @file oracles.hpp
 * @brief Independent reference routes used to cross-check the main
 *        algorithms. None of these share code paths with the tables or the
 *        sum methods they check.
 */

#include <cstddef>
#include <vector>

#include "degensum/degen_core.hpp"
#include "degensum/ring.hpp"

namespace degensum::oracle {

/// Row n of the degenerate Stirling triangle, obtained by forward
/// substitution in the lower-triangular system
///   sum_k c_k (x)_k = (x)_{n,lambda},  x = 0..n,
/// whose diagonal entries are (x)_x = x!.
template <ScalarRing R>
std::vector<Scalar<R>> stirling_row_by_linear_solve(const R& ring, std::size_t n) {
  std::vector<Scalar<R>> c;
  c.reserve(n + 1);
  for (std::size_t x = 0; x <= n; ++x) {
    const Scalar<R> xs = ring.embed_int(Integer(static_cast<unsigned long>(x)));
    Scalar<R> rhs = degen_falling(ring, xs, n);
    for (std::size_t k = 0; k < x; ++k) rhs = rhs - falling(ring, xs, k) * c[k];
    c.push_back(ring.div_exact_int(rhs, factorial(x)));
  }
  return c;
}

/// sum_{j=1}^{n} (j)_k = k! C(n+1, k+1) (hockey stick).
inline Integer falling_power_sum_closed_form(std::size_t k, const Integer& n) {
  return factorial(k) * binomial(n + 1, Integer(static_cast<unsigned long>(k + 1)));
}

}  // namespace degensum::oracle
