#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "symspace/reflection/checks.hpp"

namespace symspace {

/// SL_n with the Cartan involution theta(g) = (g^T)^{-1}. The fixed
/// subgroup K = G^theta is SO(n).
class CartanGroupModel {
 public:
  explicit CartanGroupModel(std::size_t n) : n_(n) {
    if (n == 0) throw Error(ErrorCode::DimensionMismatch, "group dimension must be at least 1");
  }

  std::size_t n() const { return n_; }
  std::string name() const { return "SL" + std::to_string(n_); }

  template <Scalar S>
  bool contains(const Matrix<S>& g, const TolerancePolicy& policy = {}) const {
    if (g.n() != n_) return false;
    if constexpr (is_exact_v<S>) {
      return determinant(g) == S(1);
    } else {
      return abs(determinant(g) - Real(1)) <= policy.abs_tol;
    }
  }

  template <Scalar S>
  Matrix<S> involution(const Matrix<S>& g) const {
    return inverse(g).transpose();
  }

  /// g in K iff theta(g) = g, i.e. g g^T = I.
  template <Scalar S>
  bool in_fixed_subgroup(const Matrix<S>& g, const TolerancePolicy& policy = {}) const {
    Matrix<S> defect = g * g.transpose() - Matrix<S>::identity(g.n());
    if constexpr (is_exact_v<S>) {
      return defect == Matrix<S>(g.n());
    } else {
      return frobenius_norm(defect) <= policy.abs_tol;
    }
  }

  /// Random shear products in SL_n(Q).
  std::vector<Matrix<Rational>> sample(std::uint64_t seed, std::size_t count) const;

  template <Scalar S>
  SpdSpace<S> space(const TolerancePolicy& policy = {}) const {
    return SpdSpace<S>(n_, policy);
  }

 private:
  std::size_t n_;
};

/// Rational rotation (I - A)(I + A)^{-1} for a skew-symmetric A.
Matrix<Rational> cayley_rotation(const Matrix<Rational>& skew);

struct InvolutionLawReport {
  bool involutive = true;    ///< theta(theta(g)) = g
  bool automorphism = true;  ///< theta(gh) = theta(g) theta(h)
  std::size_t checked = 0;
};

/// Exact check of the involution laws on sampled pairs.
InvolutionLawReport check_involution_laws(const CartanGroupModel& model, std::uint64_t seed, std::size_t count);

/// tau(g) = g theta(g)^{-1}, which is g g^T here. Throws Error(NotInGroup).
template <Scalar S>
Matrix<S> twist(const CartanGroupModel& model, const Matrix<S>& g, const TolerancePolicy& policy = {}) {
  if (!model.contains(g, policy)) {
    throw Error(ErrorCode::NotInGroup, to_string(g) + " is not in " + model.name());
  }
  return g * inverse(model.involution(g));
}

/// A coset gK: any representative plus its canonical coordinate tau(g).
/// Cosets compare through the canonical coordinate only.
template <Scalar S>
struct Coset {
  Matrix<S> representative;
  SpdPoint<S> canonical;
};

template <Scalar S>
Coset<S> make_coset(const CartanGroupModel& model, Matrix<S> g, const TolerancePolicy& policy = {}) {
  Matrix<S> p = twist(model, g, policy);
  return {std::move(g), SpdPoint<S>::trusted(std::move(p))};
}

template <Scalar S>
Residual coset_distance(const CartanGroupModel& model, const Coset<S>& a, const Coset<S>& b) {
  return model.space<S>().distance(a.canonical, b.canonical);
}

/// Distance between the two ways of computing gK.hK: canonical part of the
/// representative tau(g) theta(h), and P Q^{-1} P on canonical parts.
template <Scalar S>
Residual gk_reflect_agreement(const CartanGroupModel& model, const Coset<S>& g, const Coset<S>& h,
                              const TolerancePolicy& policy = {}) {
  Matrix<S> rep = twist(model, g.representative, policy) * model.involution(h.representative);
  auto via_rep = SpdPoint<S>::trusted(rep * rep.transpose());
  return model.space<S>().distance(via_rep, model.space<S>().reflect(g.canonical, h.canonical));
}

/// gK.hK = tau(g) theta(h) K. Throws std::logic_error if the representative
/// route and the canonical route P Q^{-1} P disagree.
template <Scalar S>
Coset<S> gk_reflect(const CartanGroupModel& model, const Coset<S>& g, const Coset<S>& h,
                    const TolerancePolicy& policy = {}) {
  Matrix<S> rep = twist(model, g.representative, policy) * model.involution(h.representative);
  Coset<S> out = make_coset(model, std::move(rep), policy);
  auto expected = model.space<S>().reflect(g.canonical, h.canonical);
  if (!model.space<S>().distance(out.canonical, expected).within(policy)) {
    throw std::logic_error("gk_reflect: representative and canonical coordinates disagree");
  }
  return out;
}

struct Rs4CriterionReport {
  std::size_t checked = 0;
  std::size_t twists_in_k = 0;  ///< samples with tau(g) in K (all must be tau(g) = I)
  std::size_t violations = 0;   ///< tau(g) in K but tau(g) != I
  /// SPD intersect O(n) = {I}: a positive-definite orthogonal matrix has
  /// all eigenvalues equal to 1. Certified for every Cartan model.
  bool analytic_certificate = true;

  bool pass() const { return violations == 0 && analytic_certificate; }
};

/// K cap tau(G) = {e}, checked exactly on identity, rational rotations and
/// random shear products.
Rs4CriterionReport check_rs4_criterion(const CartanGroupModel& model, std::uint64_t seed, std::size_t count);

/// gK -> phi(g)K for a homomorphism phi that commutes with the involutions.
/// On canonical coordinates this is P -> phi(P), because
/// phi(g) phi(g)^T = phi(g g^T).
template <Scalar S>
class CosetMap {
 public:
  using GroupMap = std::function<Matrix<S>(const Matrix<S>&)>;

  CosetMap(CartanGroupModel source, CartanGroupModel target, GroupMap phi, Residual morphism_residual)
      : source_(source), target_(target), phi_(std::move(phi)), morphism_residual_(std::move(morphism_residual)) {}

  SpdPoint<S> operator()(const SpdPoint<S>& p) const { return SpdPoint<S>::trusted(phi_(p.matrix())); }

  Coset<S> operator()(const Coset<S>& c) const {
    return {phi_(c.representative), SpdPoint<S>::trusted(phi_(c.canonical.matrix()))};
  }

  const Matrix<S> group_map(const Matrix<S>& g) const { return phi_(g); }
  const CartanGroupModel& source() const { return source_; }
  const CartanGroupModel& target() const { return target_; }
  /// Largest |phi(x.y) - phi(x).phi(y)| seen while building the map.
  const Residual& morphism_residual() const { return morphism_residual_; }

 private:
  CartanGroupModel source_;
  CartanGroupModel target_;
  GroupMap phi_;
  Residual morphism_residual_;
};

/// Induced morphism of symmetric spaces for a group map `phi`.
///
/// The homomorphism property and theta-equivariance are checked on
/// `checks` random pairs (hard errors NotInGroup, NotHomomorphism,
/// InvolutionNotRespected with the witness in the message); the result is
/// then checked to preserve the reflection map on `checks` point pairs.
template <Scalar S>
CosetMap<S> induce_morphism(const CartanGroupModel& source, const CartanGroupModel& target,
                            typename CosetMap<S>::GroupMap phi, std::uint64_t seed, const TolerancePolicy& policy = {},
                            std::size_t checks = 20) {
  auto close = [&](const Matrix<S>& a, const Matrix<S>& b) {
    if constexpr (is_exact_v<S>) {
      return a == b;
    } else {
      return frobenius_norm(Matrix<S>(a - b)) <= policy.abs_tol;
    }
  };
  auto gs = source.sample(seed, 2 * checks);
  for (std::size_t k = 0; k < checks; ++k) {
    Matrix<S> g = from_rational<S>(gs[2 * k]);
    Matrix<S> h = from_rational<S>(gs[2 * k + 1]);
    Matrix<S> pg = phi(g);
    if (!target.contains(pg, policy)) {
      throw Error(ErrorCode::NotInGroup, "phi(" + to_string(g) + ") is not in " + target.name());
    }
    if (!close(phi(g * h), pg * phi(h))) {
      throw Error(ErrorCode::NotHomomorphism, "phi(gh) != phi(g)phi(h) at g = " + to_string(g));
    }
    if (!close(phi(source.involution(g)), target.involution(pg))) {
      throw Error(ErrorCode::InvolutionNotRespected, "phi(theta g) != theta(phi g) at g = " + to_string(g));
    }
  }
  CosetMap<S> map(source, target, phi, Residual::exact_zero());
  auto src = source.space<S>(policy);
  auto dst = target.space<S>(policy);
  auto pts = src.sample(seed + 1, 2 * checks);
  Residual worst_seen{Real(0), is_exact_v<S>};
  for (std::size_t k = 0; k < checks; ++k) {
    const auto& x = pts[2 * k];
    const auto& y = pts[2 * k + 1];
    worst_seen = worst(worst_seen, dst.distance(map(src.reflect(x, y)), dst.reflect(map(x), map(y))));
  }
  if (!worst_seen.within(policy)) {
    throw Error(ErrorCode::InvolutionNotRespected, "induced map does not preserve the reflection map");
  }
  return CosetMap<S>(source, target, std::move(phi), worst_seen);
}

struct BasepointSymmetryReport {
  std::size_t checked = 0;
  Residual max_residual;
  bool holds = true;
};

/// sigma_o(gK) = theta(g)K on samples; on canonical coordinates Q -> Q^{-1}.
template <Scalar S>
BasepointSymmetryReport basepoint_symmetry_is_involution_map(const CartanGroupModel& model, std::uint64_t seed,
                                                             std::size_t count, const TolerancePolicy& policy = {}) {
  auto space = model.space<S>(policy);
  const auto o = space.basepoint();
  BasepointSymmetryReport out;
  out.max_residual = Residual{Real(0), is_exact_v<S>};
  for (const auto& gq : model.sample(seed, count)) {
    auto c = make_coset(model, from_rational<S>(gq), policy);
    auto via_theta = make_coset(model, model.involution(c.representative), policy);
    out.max_residual = worst(out.max_residual, space.distance(space.reflect(o, c.canonical), via_theta.canonical));
    ++out.checked;
  }
  out.holds = out.max_residual.within(policy);
  return out;
}

}  // namespace symspace
