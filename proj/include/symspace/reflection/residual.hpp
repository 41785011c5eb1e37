#pragma once

#include <string>

#include "symspace/numeric/spd.hpp"

namespace symspace {

/// A distance measured by some check. `exact` residuals come from exact
/// arithmetic and pass only when they are exactly zero; the others pass when
/// they are within the policy's abs_tol.
struct Residual {
  Real value;
  bool exact = true;

  static Residual exact_zero() { return {}; }

  bool is_exact_zero() const { return exact && value.is_zero(); }
  bool within(const TolerancePolicy& policy) const { return exact ? value.is_zero() : value <= policy.abs_tol; }

  /// "exact-zero" or 20 significant digits.
  std::string str() const { return is_exact_zero() ? "exact-zero" : value.str(20); }

  /// Worst of two residuals: larger value, exact only if both are.
  friend Residual worst(const Residual& a, const Residual& b) { return {max(a.value, b.value), a.exact && b.exact}; }
};

}  // namespace symspace
