#pragma once

/**
 * @file ring.hpp
 * @brief The scalar ring contract every formula in the library is generic over.
 *
 * A ring object carries the meaning of lambda. FixedLambda evaluates at a
 * concrete rational lambda; SymbolicLambda keeps lambda as a formal
 * variable so that every identity is checked for all lambda at once.
 */

#include <concepts>
#include <string>

#include "degensum/lambda_poly.hpp"
#include "degensum/rational.hpp"

namespace degensum {

template <class R>
concept ScalarRing = requires(const R& ring, const typename R::value_type& a, const Integer& m) {
  typename R::value_type;
  { ring.embed_int(m) } -> std::same_as<typename R::value_type>;
  { ring.lambda_element() } -> std::same_as<typename R::value_type>;
  { ring.div_exact_int(a, m) } -> std::same_as<typename R::value_type>;
  { ring.describe() } -> std::convertible_to<std::string>;
  { a + a } -> std::convertible_to<typename R::value_type>;
  { a - a } -> std::convertible_to<typename R::value_type>;
  { a * a } -> std::convertible_to<typename R::value_type>;
  { -a } -> std::convertible_to<typename R::value_type>;
  { a == a } -> std::convertible_to<bool>;
};

template <ScalarRing R>
using Scalar = typename R::value_type;

/// Rationals with lambda fixed to a concrete value.
struct FixedLambda {
  using value_type = Rational;

  Rational lambda;

  Rational embed_int(const Integer& m) const { return Rational(m); }
  Rational lambda_element() const { return lambda; }
  /// Throws ZeroDenominatorError when m == 0.
  Rational div_exact_int(const Rational& s, const Integer& m) const { return s / Rational(m); }
  std::string describe() const { return lambda.to_string(); }
};

/// Polynomials in lambda with rational coefficients.
struct SymbolicLambda {
  using value_type = LambdaPoly;

  LambdaPoly embed_int(const Integer& m) const { return LambdaPoly(Rational(m)); }
  LambdaPoly lambda_element() const { return LambdaPoly::lambda(); }
  LambdaPoly div_exact_int(const LambdaPoly& s, const Integer& m) const { return s.div_exact(m); }
  std::string describe() const { return "symbolic"; }
};

static_assert(ScalarRing<FixedLambda>);
static_assert(ScalarRing<SymbolicLambda>);

template <ScalarRing R>
Scalar<R> zero(const R& ring) {
  return ring.embed_int(Integer(0));
}

template <ScalarRing R>
Scalar<R> one(const R& ring) {
  return ring.embed_int(Integer(1));
}

/// Convenience: integer-valued scalar times a ring element.
template <ScalarRing R>
Scalar<R> scale(const R& ring, const Integer& m, const Scalar<R>& s) {
  return ring.embed_int(m) * s;
}

}  // namespace degensum
