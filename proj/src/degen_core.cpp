#include "degensum/degen_core.hpp"

#include <stdexcept>

namespace degensum {

std::string_view to_string(FactorialKind kind) {
  switch (kind) {
    case FactorialKind::degenerate_falling: return "degenerate_falling";
    case FactorialKind::degenerate_rising: return "degenerate_rising";
    case FactorialKind::ordinary_falling: return "ordinary_falling";
  }
  return "?";
}

Integer binomial(const Integer& n, const Integer& k) {
  if (sgn(n) < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (sgn(k) < 0 || k > n) return Integer(0);
  const Integer m = (k > n - k) ? Integer(n - k) : k;
  Integer result(1);
  // result holds C(n - m + i, i) after step i, so each division is exact.
  for (Integer i = 1; i <= m; ++i) {
    result *= n - m + i;
    mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), i.get_mpz_t());
  }
  return result;
}

Integer binomial(unsigned long n, long k) { return binomial(Integer(n), Integer(k)); }

Integer factorial(unsigned long n) {
  Integer result(1);
  for (unsigned long i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace degensum
