#include "symspace/numeric/real.hpp"

#include <array>
#include <string>

#include "symspace/errors.hpp"

namespace symspace {

namespace {
thread_local long t_precision_bits = kDefaultPrecisionBits;
}

long current_precision_bits() { return t_precision_bits; }

PrecisionScope::PrecisionScope(long bits) : previous_(t_precision_bits) {
  if (bits < MPFR_PREC_MIN || bits > 1 << 16) {
    throw Error(ErrorCode::ConfigError, "precision_bits out of range: " + std::to_string(bits));
  }
  t_precision_bits = bits;
}

PrecisionScope::~PrecisionScope() { t_precision_bits = previous_; }

Real::Real() {
  mpfr_init2(v_, t_precision_bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real::Real(double value) : Real() { mpfr_set_d(v_, value, MPFR_RNDN); }

Real::Real(const Rational& value) : Real() { mpfr_set_q(v_, value.value().get_mpq_t(), MPFR_RNDN); }

Real Real::parse(std::string_view text) {
  std::string s(text);
  Real r;
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == s.c_str() || *end != '\0') {
    throw Error(ErrorCode::ParseError, "malformed decimal \"" + s + "\"");
  }
  return r;
}

std::string Real::str(int digits) const {
  std::array<char, 128> buf{};
  std::string fmt = "%." + std::to_string(digits - 1) + "Re";
  mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), v_);
  return std::string(buf.data());
}

Real& Real::operator+=(const Real& rhs) {
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::ZeroDivision, "division by zero");
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real operator-(const Real& x) {
  Real r(x);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw Error(ErrorCode::NotPositiveDefinite, "square root of a negative number");
  Real r;
  mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r;
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real log2(const Real& x) {
  Real r;
  mpfr_log2(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

int sign_with_slack(const Real& x, const Real& slack) {
  if (abs(x) <= slack) return 0;
  return x.sign();
}

}  // namespace symspace
