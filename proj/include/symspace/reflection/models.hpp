#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "symspace/numeric/spd.hpp"
#include "symspace/reflection/residual.hpp"
#include "symspace/reflection/sampling.hpp"

namespace symspace {

/// A concrete reflection space: point type, reflection map, basepoint,
/// deterministic sampler and a distance used for approximate equality.
template <class M>
concept SpaceModel = requires(const M& m, const typename M::Point& x, std::uint64_t seed, std::size_t count) {
  typename M::Point;
  { m.reflect(x, x) } -> std::same_as<typename M::Point>;
  { m.basepoint() } -> std::same_as<typename M::Point>;
  { m.sample(seed, count) } -> std::same_as<std::vector<typename M::Point>>;
  { m.distance(x, x) } -> std::same_as<Residual>;
  { m.name() } -> std::convertible_to<std::string>;
};

template <SpaceModel M>
typename M::Point reflect(const M& model, const typename M::Point& x, const typename M::Point& y) {
  return model.reflect(x, y);
}

template <SpaceModel M>
bool approx_equal(const M& model, const typename M::Point& x, const typename M::Point& y,
                  const TolerancePolicy& policy) {
  return model.distance(x, y).within(policy);
}

/// The line with x.y = 2x - y over exact rationals, basepoint 0.
class GeodesicLine {
 public:
  using Point = Rational;

  Point basepoint() const { return Rational(0); }
  Point reflect(const Point& x, const Point& y) const { return Rational(2) * x - y; }
  std::vector<Point> sample(std::uint64_t seed, std::size_t count) const;
  Residual distance(const Point& x, const Point& y) const { return {Real((x - y).abs()), true}; }
  std::string name() const { return "geodesic"; }
};

/// Symmetric positive-definite matrix of determinant 1: the canonical
/// coordinate g g^T of a coset gK in SL_n / SO(n).
template <Scalar S>
class SpdPoint {
 public:
  /// Validates symmetry, det = 1 and positive definiteness (exactly for
  /// exact scalars, within `policy` for Real). Throws Error(InvalidPoint).
  static SpdPoint make(Matrix<S> m, const TolerancePolicy& policy = {}) {
    if constexpr (is_exact_v<S>) {
      if (!is_symmetric_exactly(m)) throw Error(ErrorCode::InvalidPoint, "matrix is not symmetric");
      if (!(determinant(m) == S(1))) throw Error(ErrorCode::InvalidPoint, "determinant is not 1");
    } else {
      if (symmetry_defect(m) > policy.abs_tol) throw Error(ErrorCode::InvalidPoint, "matrix is not symmetric");
      if (abs(determinant(m) - Real(1)) > policy.abs_tol) {
        throw Error(ErrorCode::InvalidPoint, "determinant is not 1");
      }
    }
    if (auto k = first_nonpositive_minor(m)) {
      throw Error(ErrorCode::InvalidPoint, "leading minor " + std::to_string(*k) + " is not positive");
    }
    return SpdPoint(std::move(m));
  }

  /// Wraps a matrix already known to be a valid point (results of the
  /// reflection map, images under embeddings).
  static SpdPoint trusted(Matrix<S> m) { return SpdPoint(std::move(m)); }

  const Matrix<S>& matrix() const { return m_; }
  std::size_t n() const { return m_.n(); }

  friend bool operator==(const SpdPoint& a, const SpdPoint& b) { return a.m_ == b.m_; }

 private:
  explicit SpdPoint(Matrix<S> m) : m_(std::move(m)) {}
  Matrix<S> m_;
};

template <Scalar S>
std::string to_string(const SpdPoint<S>& p) {
  return to_string(p.matrix());
}

/// SL_n / SO(n) in SPD coordinates: P.Q = P Q^{-1} P, basepoint I.
template <Scalar S>
class SpdSpace {
 public:
  using Point = SpdPoint<S>;
  using ScalarType = S;

  explicit SpdSpace(std::size_t n, TolerancePolicy policy = {}) : n_(n), policy_(std::move(policy)) {}

  std::size_t dimension() const { return n_; }
  const TolerancePolicy& policy() const { return policy_; }

  Point basepoint() const { return Point::trusted(Matrix<S>::identity(n_)); }

  Point reflect(const Point& x, const Point& y) const {
    check(x);
    check(y);
    return Point::trusted(x.matrix() * inverse(y.matrix()) * x.matrix());
  }

  /// Validated point from a raw matrix. Throws Error(InvalidPoint).
  Point point(Matrix<S> m) const {
    if (m.n() != n_) throw Error(ErrorCode::InvalidPoint, "point has wrong dimension");
    return Point::make(std::move(m), policy_);
  }

  /// P = g g^T for random shear products g (see random_shear_product).
  std::vector<Point> sample(std::uint64_t seed, std::size_t count) const {
    Rng rng(seed);
    std::vector<Point> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      Matrix<Rational> g = random_shear_product(n_, rng);
      out.push_back(Point::trusted(from_rational<S>(Matrix<Rational>(g * g.transpose()))));
    }
    return out;
  }

  Residual distance(const Point& x, const Point& y) const {
    return {frobenius_norm(Matrix<S>(x.matrix() - y.matrix())), is_exact_v<S>};
  }

  std::string name() const { return "sl" + std::to_string(n_); }

 private:
  void check(const Point& p) const {
    if (p.n() != n_) throw Error(ErrorCode::InvalidPoint, "point has wrong dimension");
  }

  std::size_t n_;
  TolerancePolicy policy_;
};

/// Negative control: P.Q = P Q P. Violates RS1 and RS2 away from I.
template <Scalar S>
class BrokenSpdSpace {
 public:
  using Point = SpdPoint<S>;
  using ScalarType = S;

  explicit BrokenSpdSpace(std::size_t n) : inner_(n) {}

  Point basepoint() const { return inner_.basepoint(); }
  Point reflect(const Point& x, const Point& y) const {
    return Point::trusted(x.matrix() * y.matrix() * x.matrix());
  }
  std::vector<Point> sample(std::uint64_t seed, std::size_t count) const { return inner_.sample(seed, count); }
  Residual distance(const Point& x, const Point& y) const { return inner_.distance(x, y); }
  std::string name() const { return "broken-" + inner_.name(); }

 private:
  SpdSpace<S> inner_;
};

}  // namespace symspace
