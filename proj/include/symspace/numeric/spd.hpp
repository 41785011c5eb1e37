#pragma once

#include <optional>
#include <string>

#include "symspace/numeric/matrix.hpp"

namespace symspace {

/// Tolerance consulted by every approximate comparison. Distances are
/// Frobenius norms; exact scalar kinds never look at it.
struct TolerancePolicy {
  Real abs_tol = Real::parse("1e-9");
};

/// Largest |m(i,j) - m(j,i)|.
Real symmetry_defect(const Matrix<Real>& m);

/// Index (1-based) of the first leading principal minor that is not
/// strictly positive, or nullopt when all are. Exact scalars decide exactly.
template <Scalar T>
std::optional<std::size_t> first_nonpositive_minor(const Matrix<T>& m) {
  auto minors = leading_minors(m);
  for (std::size_t k = 0; k < minors.size(); ++k)
    if (sign_of(minors[k]) <= 0) return k + 1;
  return std::nullopt;
}

template <Scalar T>
bool is_positive_definite(const Matrix<T>& m) {
  return !first_nonpositive_minor(m).has_value();
}

/// Symmetric positive-definite square root.
///
/// n = 1 is the scalar root. n = 2 uses the closed form
/// S = (M + sqrt(det M) I) / sqrt(tr M + 2 sqrt(det M)), which for det M = 1
/// is (M + I) / sqrt(tr M + 2). Larger n runs a Denman-Beavers iteration
/// until successive iterates differ by less than abs_tol / 10 (at most 200
/// steps). The result always satisfies ||S*S - M|| <= abs_tol.
///
/// Throws NotSymmetric, NotPositiveDefinite (naming the failing minor) or
/// NoConvergence.
Matrix<Real> spd_sqrt(const Matrix<Real>& m, const TolerancePolicy& policy);

struct OrthogonalityResidual {
  bool special_orthogonal = false;
  Real orthogonality;  ///< ||g g^T - I||
  Real determinant;    ///< |det g - 1|
};

OrthogonalityResidual is_special_orthogonal(const Matrix<Real>& g, const TolerancePolicy& policy);

struct PolarDecomposition {
  Matrix<Real> spd_part;
  Matrix<Real> orth_part;
};

/// g = spd_part * orth_part with spd_part = spd_sqrt(g g^T). Throws
/// SingularInput when det g <= abs_tol.
PolarDecomposition polar_decompose(const Matrix<Real>& g, const TolerancePolicy& policy);

}  // namespace symspace
