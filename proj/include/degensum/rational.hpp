#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision integers and normalized rationals.
 *
 * Rational is always kept in lowest terms with a positive denominator;
 * zero is 0/1. Text form is "p/q", or "p" when q = 1.
 */

#include <compare>
#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace degensum {

using Integer = mpz_class;

/// Raised when a fraction would get a zero denominator.
class ZeroDenominatorError : public std::domain_error {
 public:
  ZeroDenominatorError() : std::domain_error("zero denominator") {}
};

/// Raised on malformed text input for any ring value.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Integer parse_integer(std::string_view text);

class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  Rational(T v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  /// p/q in lowest terms; throws ZeroDenominatorError when q == 0.
  static Rational make(const Integer& p, const Integer& q);

  /// Accepts "p", "-p", "p/q" (q may be negative; result is normalized).
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  std::string to_string() const { return value_.get_str(); }
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

/// Integer power, exponent >= 0.
Rational pow(const Rational& base, unsigned long exponent);

inline std::string to_text(const Rational& r) { return r.to_string(); }

}  // namespace degensum
