#include "symspace/numeric/qsqrt2.hpp"

#include <algorithm>

#include "symspace/errors.hpp"

namespace symspace {

int QSqrt2::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sa == sb) return sa;
  if (sa == 0) return sb;
  if (sb == 0) return sa;
  // Opposite signs: compare a^2 with 2 b^2.
  Rational n = norm();
  return n.sign() * sa;
}

QSqrt2 QSqrt2::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDivision, "inverse of zero in Q(sqrt 2)");
  Rational n = norm();
  return {a_ / n, -b_ / n};
}

std::string QSqrt2::str() const {
  if (b_.is_zero()) return a_.str();
  std::string s = a_.is_zero() ? std::string() : a_.str() + (b_.sign() > 0 ? "+" : "");
  return s + b_.str() + "*sqrt2";
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& rhs) {
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& rhs) {
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& rhs) {
  Rational a = a_ * rhs.a_ + Rational(2) * b_ * rhs.b_;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& rhs) { return *this *= rhs.inverse(); }

namespace {

long magnitude_bits(const Rational& r) {
  if (r.is_zero()) return 0;
  long num = static_cast<long>(mpz_sizeinbase(r.numerator().get_mpz_t(), 2));
  long den = static_cast<long>(mpz_sizeinbase(r.denominator().get_mpz_t(), 2));
  return std::max(0L, num - den + 1);
}

}  // namespace

Real qsqrt2_to_real(const QSqrt2& x, long precision_bits) {
  long guard = std::max(magnitude_bits(x.rational_part()), magnitude_bits(x.sqrt2_part())) + 16;
  Real wide;
  {
    PrecisionScope scope(precision_bits + guard);
    Real root2 = sqrt(Real(2));
    wide = Real(x.rational_part()) + Real(x.sqrt2_part()) * root2;
  }
  PrecisionScope scope(precision_bits);
  Real out;
  mpfr_set(out.raw(), wide.raw(), MPFR_RNDN);
  return out;
}

}  // namespace symspace
