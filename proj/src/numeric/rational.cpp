#include "symspace/numeric/rational.hpp"

#include <cctype>
#include <utility>

#include "symspace/errors.hpp"

namespace symspace {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw Error(ErrorCode::ParseError, "malformed rational \"" + std::string(whole) + "\"");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::ZeroDivision, "rational with zero denominator");
  value_ = mpq_class(num, 1);
  value_ /= den;
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw Error(ErrorCode::ZeroDivision, "rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    std::string_view d = text.substr(slash + 1);
    if (!d.empty() && (d[0] == '-' || d[0] == '+')) {
      throw Error(ErrorCode::ParseError, "malformed rational \"" + std::string(text) + "\"");
    }
    den = parse_integer(d, text);
  }
  if (den == 0) {
    throw Error(ErrorCode::ZeroDivision, "rational \"" + std::string(text) + "\" has zero denominator");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDivision, "inverse of zero");
  mpq_class q = 1 / value_;
  return Rational(std::move(q));
}

std::string Rational::str() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::ZeroDivision, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& x) {
  mpq_class q = -x.value_;
  Rational r;
  r.value_ = std::move(q);
  return r;
}

}  // namespace symspace
