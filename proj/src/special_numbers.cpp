#include "degensum/special_numbers.hpp"

namespace degensum {

std::vector<Rational> classical_bernoulli_numbers(std::size_t max_n) {
  std::vector<Rational> b{Rational(1)};
  for (std::size_t m = 1; m <= max_n; ++m) {
    Rational acc;
    for (std::size_t j = 0; j < m; ++j) acc += Rational(binomial(m + 1, static_cast<long>(j))) * b[j];
    b.push_back(-acc / Rational(m + 1));
  }
  return b;
}

std::vector<Rational> classical_bernoulli_poly_coeffs(std::size_t m) {
  const auto b = classical_bernoulli_numbers(m);
  // B_m(u) = sum_k C(m,k) B_k u^{m-k}
  std::vector<Rational> coeffs(m + 1);
  for (std::size_t k = 0; k <= m; ++k) coeffs[m - k] = Rational(binomial(m, static_cast<long>(k))) * b[k];
  return coeffs;
}

std::vector<std::vector<Integer>> classical_stirling2(std::size_t max_n) {
  std::vector<std::vector<Integer>> rows{{Integer(1)}};
  for (std::size_t n = 0; n < max_n; ++n) {
    std::vector<Integer> next(n + 2, Integer(0));
    for (std::size_t k = 1; k <= n + 1; ++k) {
      next[k] = rows[n][k - 1];
      if (k <= n) next[k] += Integer(static_cast<unsigned long>(k)) * rows[n][k];
    }
    rows.push_back(std::move(next));
  }
  return rows;
}

}  // namespace degensum
