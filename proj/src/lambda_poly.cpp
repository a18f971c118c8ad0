#include "degensum/lambda_poly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace degensum {

LambdaPoly::LambdaPoly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

LambdaPoly::LambdaPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

LambdaPoly LambdaPoly::lambda() { return LambdaPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

void LambdaPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational LambdaPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational LambdaPoly::eval(const Rational& lam) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= lam;
    acc += *it;
  }
  return acc;
}

LambdaPoly LambdaPoly::div_exact(const Integer& m) const {
  if (sgn(m) == 0) throw ZeroDenominatorError();
  const Rational divisor(m);
  LambdaPoly out = *this;
  for (auto& c : out.coeffs_) c /= divisor;
  return out;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

LambdaPoly& LambdaPoly::operator*=(const LambdaPoly& o) {
  *this = *this * o;
  return *this;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LambdaPoly(std::move(out));
}

LambdaPoly operator-(const LambdaPoly& a) {
  LambdaPoly out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string LambdaPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += magnitude.to_string();
      continue;
    }
    if (magnitude != Rational(1)) out += magnitude.to_string() + "*";
    out += "L";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

// One signed term: [coef]["*"]["L"["^"e]].
void add_term(std::vector<Rational>& acc, bool negative, std::string_view term, std::string_view whole) {
  auto fail = [&] { throw ParseError("malformed lambda polynomial: '" + std::string(whole) + "'"); };
  if (term.empty()) fail();
  Rational coef(1);
  std::size_t power = 0;
  const auto l = term.find('L');
  if (l == std::string_view::npos) {
    coef = Rational::parse(term);
  } else {
    std::string_view head = term.substr(0, l);
    std::string_view tail = term.substr(l + 1);
    if (!head.empty()) {
      if (head.back() != '*') fail();
      head.remove_suffix(1);
      coef = Rational::parse(head);
    }
    power = 1;
    if (!tail.empty()) {
      if (tail.front() != '^') fail();
      const Integer e = parse_integer(tail.substr(1));
      if (sgn(e) < 0 || !e.fits_ulong_p()) fail();
      power = e.get_ui();
    }
  }
  if (acc.size() <= power) acc.resize(power + 1);
  acc[power] += negative ? -coef : coef;
}

}  // namespace

LambdaPoly LambdaPoly::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw ParseError("empty lambda polynomial");
  std::vector<Rational> acc;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    bool negative = false;
    if (compact[pos] == '+' || compact[pos] == '-') {
      negative = compact[pos] == '-';
      ++pos;
    }
    // A term ends at the next sign that is not part of an exponent or a
    // fraction denominator.
    std::size_t end = pos;
    while (end < compact.size()) {
      const char c = compact[end];
      if ((c == '+' || c == '-') && end > pos && compact[end - 1] != '/' && compact[end - 1] != '^') break;
      ++end;
    }
    add_term(acc, negative, std::string_view(compact).substr(pos, end - pos), text);
    pos = end;
  }
  return LambdaPoly(std::move(acc));
}

std::vector<std::string> LambdaPoly::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_string());
  return out;
}

LambdaPoly LambdaPoly::from_coefficient_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rational> values;
  values.reserve(coeffs.size());
  for (const auto& s : coeffs) values.push_back(Rational::parse(s));
  return LambdaPoly(std::move(values));
}

}  // namespace degensum
