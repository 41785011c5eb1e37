#pragma once

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include "symspace/numeric/rational.hpp"

namespace symspace {

inline constexpr long kDefaultPrecisionBits = 128;

/// Working precision for every Real created on the current thread.
long current_precision_bits();

/// Sets the thread's working precision for its lifetime and restores the
/// previous value on exit. One check runs under one scope; Reals created
/// under different scopes are never mixed.
class PrecisionScope {
 public:
  explicit PrecisionScope(long bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  long previous_;
};

/// High-precision binary floating point backed by MPFR, round-to-nearest.
class Real {
 public:
  Real();
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  template <std::integral I>
  Real(I value) : Real() {  // NOLINT: implicit by intent
    mpfr_set_si(v_, static_cast<long>(value), MPFR_RNDN);
  }
  explicit Real(double value);
  explicit Real(const Rational& value);

  /// Parses a decimal literal such as "1e-9". Throws Error(ParseError).
  static Real parse(std::string_view text);

  long precision_bits() const { return static_cast<long>(mpfr_get_prec(v_)); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Scientific notation with `digits` significant decimal digits.
  std::string str(int digits = 20) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator-(const Real& x);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  friend Real sqrt(const Real& x);
  friend Real abs(const Real& x);
  friend Real log2(const Real& x);

  friend std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(); }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

Real sqrt(const Real& x);
Real abs(const Real& x);
Real log2(const Real& x);
Real max(const Real& a, const Real& b);

/// Sign of `x` decided with the given absolute slack: values within slack count as 0.
int sign_with_slack(const Real& x, const Real& slack);

}  // namespace symspace
