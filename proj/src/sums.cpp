#include "degensum/sums.hpp"

namespace degensum {

std::string_view to_string(SumMethod method) {
  switch (method) {
    case SumMethod::direct: return "direct";
    case SumMethod::bernoulli: return "bernoulli";
    case SumMethod::stirling: return "stirling";
    case SumMethod::rec_a: return "rec_a";
    case SumMethod::rec_b: return "rec_b";
    case SumMethod::rec_prob: return "rec_prob";
  }
  return "?";
}

std::optional<SumMethod> parse_sum_method(std::string_view name) {
  for (SumMethod m : kAllSumMethods) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view to_string(FaulhaberVariant variant) {
  switch (variant) {
    case FaulhaberVariant::bernoulli_formula: return "bernoulli_formula";
    case FaulhaberVariant::rec_41: return "rec_41";
    case FaulhaberVariant::rec_42: return "rec_42";
    case FaulhaberVariant::rec_conclusion: return "rec_conclusion";
    case FaulhaberVariant::integral: return "integral";
  }
  return "?";
}

namespace {

Rational binom_q(std::size_t n, long k) { return Rational(binomial(n, k)); }

// 1/(m+1) sum_{l=0}^{m} C(m+1, l) B_l (n+1)^{m+1-l}
Rational classical_bernoulli_formula(std::size_t m, const Integer& n) {
  const auto b = classical_bernoulli_numbers(m);
  const Rational top(n + 1);
  Rational acc;
  for (std::size_t l = 0; l <= m; ++l) acc += binom_q(m + 1, static_cast<long>(l)) * b[l] * pow(top, m + 1 - l);
  return acc / Rational(m + 1);
}

// Integrates B_m(u) term by term over [0, n+1].
Rational classical_integral(std::size_t m, const Integer& n) {
  const auto coeffs = classical_bernoulli_poly_coeffs(m);
  const Rational upper(n + 1);
  Rational acc;
  for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * pow(upper, i + 1) / Rational(i + 1);
  return acc;
}

std::vector<Rational> classical_rec_41(std::size_t m, const Integer& n) {
  const Rational top(n + 1);
  std::vector<Rational> s{Rational(n)};
  for (std::size_t k = 1; k <= m; ++k) {
    Rational acc = pow(top, k + 1) - Rational(1);
    for (std::size_t r = 0; r < k; ++r) acc -= binom_q(k + 1, static_cast<long>(r)) * s[r];
    s.push_back(acc / Rational(k + 1));
  }
  return s;
}

std::vector<Rational> classical_rec_42(std::size_t m, const Integer& n) {
  const Rational base(n);
  std::vector<Rational> s{base};
  for (std::size_t k = 1; k <= m; ++k) {
    Rational acc = pow(base, k + 1) / Rational(k + 1);
    for (std::size_t r = 0; r < k; ++r) {
      const Rational sign = (k - r + 1) % 2 == 0 ? Rational(1) : Rational(-1);
      acc += binom_q(k, static_cast<long>(r)) * sign / Rational(k - r + 1) * s[r];
    }
    s.push_back(acc);
  }
  return s;
}

std::vector<Rational> classical_rec_conclusion(std::size_t m, const Integer& n) {
  const Rational top(n + 1);
  std::vector<Rational> s{Rational(n)};
  for (std::size_t k = 1; k <= m; ++k) {
    Rational acc = Rational(n) * pow(top, k);
    for (std::size_t r = 1; r < k; ++r) acc -= binom_q(k, static_cast<long>(r) - 1) * s[r];
    s.push_back(acc / Rational(k + 1));
  }
  return s;
}

}  // namespace

Rational faulhaber_classical(std::size_t m, const Integer& n, FaulhaberVariant variant) {
  detail::require_positive_k(m);
  switch (variant) {
    case FaulhaberVariant::bernoulli_formula: return classical_bernoulli_formula(m, n);
    case FaulhaberVariant::rec_41: return classical_rec_41(m, n).back();
    case FaulhaberVariant::rec_42: return classical_rec_42(m, n).back();
    case FaulhaberVariant::rec_conclusion: return classical_rec_conclusion(m, n).back();
    case FaulhaberVariant::integral: return classical_integral(m, n);
  }
  throw std::logic_error("unknown Faulhaber variant");
}

}  // namespace degensum
