#include "symspace/numeric/spd.hpp"

#include <string>

namespace symspace {

Real symmetry_defect(const Matrix<Real>& m) {
  Real worst;
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = i + 1; j < m.n(); ++j) worst = max(worst, abs(m(i, j) - m(j, i)));
  return worst;
}

namespace {

Matrix<Real> symmetrized(const Matrix<Real>& m) { return (m + m.transpose()) * Real(Real(1) / Real(2)); }

Matrix<Real> denman_beavers(const Matrix<Real>& m, const TolerancePolicy& policy) {
  const Real threshold = policy.abs_tol / Real(10);
  const Real half = Real(1) / Real(2);
  Matrix<Real> y = m;
  Matrix<Real> z = Matrix<Real>::identity(m.n());
  for (int step = 0; step < 200; ++step) {
    Matrix<Real> y_next = (y + inverse(z)) * half;
    Matrix<Real> z_next = (z + inverse(y)) * half;
    Real delta = frobenius_norm(Matrix<Real>(y_next - y));
    y = std::move(y_next);
    z = std::move(z_next);
    if (delta < threshold) return y;
  }
  throw Error(ErrorCode::NoConvergence, "Denman-Beavers iteration did not settle within 200 steps");
}

}  // namespace

Matrix<Real> spd_sqrt(const Matrix<Real>& m, const TolerancePolicy& policy) {
  Real defect = symmetry_defect(m);
  if (defect > policy.abs_tol) {
    throw Error(ErrorCode::NotSymmetric, "asymmetry " + defect.str() + " exceeds tolerance");
  }
  if (auto k = first_nonpositive_minor(m)) {
    throw Error(ErrorCode::NotPositiveDefinite, "leading minor " + std::to_string(*k) + " is not positive");
  }
  const std::size_t n = m.n();
  Matrix<Real> root(n);
  if (n == 1) {
    root(0, 0) = sqrt(m(0, 0));
  } else if (n == 2) {
    Real s = sqrt(determinant(m));
    Real scale = sqrt(m.trace() + Real(2) * s);
    root = (m + Matrix<Real>::identity(2) * s) * Real(Real(1) / scale);
  } else {
    root = denman_beavers(m, policy);
  }
  root = symmetrized(root);
  Real residual = frobenius_norm(Matrix<Real>(root * root - m));
  if (residual > policy.abs_tol) {
    throw Error(ErrorCode::NoConvergence, "square root residual " + residual.str() + " exceeds tolerance");
  }
  return root;
}

OrthogonalityResidual is_special_orthogonal(const Matrix<Real>& g, const TolerancePolicy& policy) {
  OrthogonalityResidual r;
  r.orthogonality = frobenius_norm(Matrix<Real>(g * g.transpose() - Matrix<Real>::identity(g.n())));
  r.determinant = abs(determinant(g) - Real(1));
  r.special_orthogonal = r.orthogonality <= policy.abs_tol && r.determinant <= policy.abs_tol;
  return r;
}

PolarDecomposition polar_decompose(const Matrix<Real>& g, const TolerancePolicy& policy) {
  Real det = determinant(g);
  if (det <= policy.abs_tol) {
    throw Error(ErrorCode::SingularInput, "polar decomposition needs det g > 0, got " + det.str());
  }
  Matrix<Real> p = spd_sqrt(symmetrized(g * g.transpose()), policy);
  Matrix<Real> k = inverse(p) * g;
  return {std::move(p), std::move(k)};
}

}  // namespace symspace
