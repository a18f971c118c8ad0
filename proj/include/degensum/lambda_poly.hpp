#pragma once

/**
 * @file lambda_poly.hpp
 * @brief Dense univariate polynomials in the formal variable lambda.
 *
 * Coefficient i is the coefficient of lambda^i. The canonical zero
 * polynomial stores no coefficients at all; every nonzero polynomial has a
 * nonzero last coefficient. Equality is structural on that canonical form.
 */

#include <string>
#include <string_view>
#include <vector>

#include "degensum/rational.hpp"

namespace degensum {

class LambdaPoly {
 public:
  LambdaPoly() = default;
  LambdaPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  explicit LambdaPoly(std::vector<Rational> coefficients);

  /// The polynomial "lambda".
  static LambdaPoly lambda();

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Index of the last nonzero coefficient; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of lambda^i (zero past the degree).
  Rational coefficient(std::size_t i) const;

  /// Horner evaluation at a fixed lambda.
  Rational eval(const Rational& lam) const;

  /// Coefficient-wise division by a nonzero integer.
  LambdaPoly div_exact(const Integer& m) const;

  LambdaPoly& operator+=(const LambdaPoly& o);
  LambdaPoly& operator-=(const LambdaPoly& o);
  LambdaPoly& operator*=(const LambdaPoly& o);

  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
  friend LambdaPoly operator-(const LambdaPoly& a);
  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) = default;

  /// "c0 + c1*L + c2*L^2", zero terms omitted, unit coefficients elided
  /// ("L", "-L^3", "1 - L"); the zero polynomial prints "0".
  std::string to_string() const;
  /// Inverse of to_string; also accepts explicit unit coefficients ("1*L").
  static LambdaPoly parse(std::string_view text);

  /// JSON array form: one rational string per power, starting at lambda^0.
  std::vector<std::string> coefficient_strings() const;
  static LambdaPoly from_coefficient_strings(const std::vector<std::string>& coeffs);

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

inline Rational poly_eval(const LambdaPoly& p, const Rational& lam) { return p.eval(lam); }

inline std::string to_text(const LambdaPoly& p) { return p.to_string(); }

}  // namespace degensum
