#include "degensum/rational.hpp"

#include <cctype>

namespace degensum {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digits(s)) {
    throw ParseError("malformed integer: '" + std::string(text) + "'");
  }
  Integer v(std::string(s), 10);
  return negative ? Integer(-v) : v;
}

Rational Rational::make(const Integer& p, const Integer& q) {
  if (sgn(q) == 0) throw ZeroDenominatorError();
  Rational r;
  r.value_ = mpq_class(p, q);
  r.value_.canonicalize();
  return r;
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  const Integer p = parse_integer(s.substr(0, slash));
  const Integer q = parse_integer(s.substr(slash + 1));
  return make(p, q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ZeroDenominatorError();
  value_ /= o.value_;
  return *this;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational result(1);
  for (unsigned long i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace degensum
