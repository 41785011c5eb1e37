#pragma once

#include <concepts>
#include <type_traits>

#include "symspace/numeric/qsqrt2.hpp"
#include "symspace/numeric/rational.hpp"
#include "symspace/numeric/real.hpp"

namespace symspace {

template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, QSqrt2> || std::same_as<T, Real>;

/// Exact scalars compare by equality and never consult a tolerance.
template <Scalar T>
inline constexpr bool is_exact_v = !std::same_as<T, Real>;

inline Real to_real(const Rational& x) { return Real(x); }
inline Real to_real(const QSqrt2& x) { return qsqrt2_to_real(x, current_precision_bits()); }
inline const Real& to_real(const Real& x) { return x; }

template <Scalar T>
T from_rational(const Rational& x) {
  if constexpr (std::same_as<T, Real>) {
    return Real(x);
  } else {
    return T(x);
  }
}

inline int sign_of(const Rational& x) { return x.sign(); }
inline int sign_of(const QSqrt2& x) { return x.sign(); }
inline int sign_of(const Real& x) { return x.sign(); }

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const QSqrt2& x) { return x.is_zero(); }
inline bool is_zero(const Real& x) { return x.is_zero(); }

inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(const QSqrt2& x) { return x.str(); }
inline std::string to_string(const Real& x) { return x.str(); }

}  // namespace symspace
