#pragma once

#include <ostream>
#include <string>

#include "symspace/numeric/rational.hpp"
#include "symspace/numeric/real.hpp"

namespace symspace {

/// Element a + b*sqrt(2) of the quadratic field Q(sqrt 2), exact.
class QSqrt2 {
 public:
  QSqrt2() = default;
  template <std::integral I>
  QSqrt2(I value) : a_(value) {}  // NOLINT: implicit by intent
  QSqrt2(Rational a) : a_(std::move(a)) {}  // NOLINT: Q embeds in Q(sqrt 2)
  QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt2 sqrt2() { return {0, 1}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  /// Exact sign of a + b*sqrt(2).
  int sign() const;
  QSqrt2 conjugate() const { return {a_, -b_}; }
  /// Field norm a^2 - 2 b^2.
  Rational norm() const { return a_ * a_ - Rational(2) * b_ * b_; }
  QSqrt2 inverse() const;

  /// "a", "b*sqrt2" or "a+b*sqrt2" with rational components.
  std::string str() const;

  QSqrt2& operator+=(const QSqrt2& rhs);
  QSqrt2& operator-=(const QSqrt2& rhs);
  QSqrt2& operator*=(const QSqrt2& rhs);
  QSqrt2& operator/=(const QSqrt2& rhs);

  friend QSqrt2 operator+(QSqrt2 lhs, const QSqrt2& rhs) { return lhs += rhs; }
  friend QSqrt2 operator-(QSqrt2 lhs, const QSqrt2& rhs) { return lhs -= rhs; }
  friend QSqrt2 operator*(QSqrt2 lhs, const QSqrt2& rhs) { return lhs *= rhs; }
  friend QSqrt2 operator/(QSqrt2 lhs, const QSqrt2& rhs) { return lhs /= rhs; }
  friend QSqrt2 operator-(const QSqrt2& x) { return {-x.a_, -x.b_}; }

  friend bool operator==(const QSqrt2&, const QSqrt2&) = default;

  friend std::ostream& operator<<(std::ostream& os, const QSqrt2& x) { return os << x.str(); }

 private:
  Rational a_;
  Rational b_;
};

/// Value of `x` within 2^(-precision_bits+2) absolute, rounded to
/// `precision_bits`. Intermediate work uses enough guard bits to absorb the
/// cancellation in a + b*sqrt(2).
Real qsqrt2_to_real(const QSqrt2& x, long precision_bits);

}  // namespace symspace
