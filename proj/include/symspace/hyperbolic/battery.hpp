#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "symspace/gk/construction.hpp"

namespace symspace {

Matrix<Rational> upper_shear(const Rational& t);  ///< [[1,t],[0,1]]
Matrix<Rational> lower_shear(const Rational& t);  ///< [[1,0],[t,1]]

/// The three SPD det-1 matrices whose products give the shears:
///   A(t) = (1/sqrt2) [[3t, -1], [-1, 1/t]]
///   B(t) = [[1/t, 1], [1, 2t]]
///   C    = diag(1/sqrt2, sqrt2)
/// with A(t) B(t) C = [[1,t],[0,1]] and C B(t) A(t) = [[1,0],[t,1]].
struct LemmaMatrices {
  Rational t;
  Matrix<QSqrt2> a{2};
  Matrix<QSqrt2> b{2};
  Matrix<QSqrt2> c{2};
  /// Exact leading-minor test. A and B are positive definite only for t > 0.
  bool a_positive_definite = false;
  bool b_positive_definite = false;
};

/// Throws ZeroParameter for t = 0. Symmetry and det = 1 are checked exactly.
LemmaMatrices lemma_matrices(const Rational& t);

struct IdentityCheck {
  std::string name;
  Matrix<QSqrt2> lhs{2};
  Matrix<QSqrt2> rhs{2};
  bool holds() const { return lhs == rhs; }
};

struct MatrixLemmaReport {
  Rational t;
  std::vector<IdentityCheck> identities;

  bool all_hold() const {
    for (const auto& i : identities)
      if (!i.holds()) return false;
    return true;
  }
};

/// Exact check in Q(sqrt2) of A B C = U(t), C B A = L(t), C A(t) C = A(t/2)
/// and C^{-1} B(t) C^{-1} = B(t/2). Valid for every t != 0.
MatrixLemmaReport verify_matrix_lemma(const Rational& t);

/// a(t), b(t), c: the SPD square roots of A(t), B(t), C in Real.
struct SquareRoots {
  Matrix<Real> a{2};
  Matrix<Real> b{2};
  Matrix<Real> c{2};
};

/// Throws ZeroParameter, or NotPositiveDefinite for t < 0.
SquareRoots lemma_square_roots(const Rational& t, const TolerancePolicy& policy);

enum class GeneratorKind { XPlus, XMinus };

std::string to_string(GeneratorKind kind);

/// x+(t) = tr_[a(t)] o tr_[b(t)] o tr_[c] and x-(t) = tr_[c] o tr_[b(t)] o tr_[a(t)].
///
/// The letters are the canonical coordinates [h] = h h^T of the square
/// roots. `word` evaluates them from the Real roots; `exact_word` uses
/// A(t), B(t), C themselves, which is the same point set in Q(sqrt2).
struct GeneratorWord {
  GeneratorKind kind = GeneratorKind::XPlus;
  Rational t;
  SquareRoots roots;
  TransvectionWord<SpdPoint<Real>> word;
  TransvectionWord<SpdPoint<QSqrt2>> exact_word;
  Matrix<Rational> shear{2};  ///< the matrix it acts by
  ActionCheck action_check;   ///< word vs Q -> U Q U^T on samples
};

/// Throws ZeroParameter, NotPositiveDefinite (t < 0), or std::logic_error
/// when the sampled action disagrees with the shear.
GeneratorWord build_generator(GeneratorKind kind, const Rational& t, const TolerancePolicy& policy,
                              std::uint64_t seed = 0, std::size_t count = 20);

/// tr_[c] in Real and exactly.
TransvectionWord<SpdPoint<Real>> tr_c_word(const TolerancePolicy& policy);
TransvectionWord<SpdPoint<QSqrt2>> tr_c_word_exact();

struct CommutatorReport {
  Rational t;
  ActionCheck commutator;  ///< [tr_c, x+(t)] vs x+(t/2) x+(t)^{-1}
  ActionCheck reduced;     ///< tr_c x+(t) tr_c^{-1} vs x+(t/2)
  ActionCheck mirrored;    ///< [x-(t), tr_c^{-1}] vs x-(t) x-(t/2)^{-1}
  /// Action matrices of both sides of each identity, evaluated exactly.
  Matrix<QSqrt2> commutator_matrix{2};
  Matrix<QSqrt2> expected_matrix{2};  ///< U(-t/2)
  bool exact_match = false;

  bool all_hold() const { return commutator.holds && reduced.holds && mirrored.holds && exact_match; }
};

/// Throws ZeroParameter / NotPositiveDefinite unless t > 0.
CommutatorReport verify_commutator_identity(const Rational& t, std::uint64_t seed, std::size_t count,
                                            const TolerancePolicy& policy);

struct So2Report {
  Rational t;
  OrthogonalityResidual a_side;  ///< a(t/2)^{-1} c^2 a(t)
  OrthogonalityResidual b_side;  ///< b(t/2)^{-1} c^{-2} b(t)
  /// Algebraic certificate: g g^T collapses to a(t/2)^{-1} A(t/2) a(t/2)^{-1}
  /// because C A(t) C = A(t/2) exactly (and likewise for B).
  bool a_conjugation_exact = false;
  bool b_conjugation_exact = false;
  Real a_certificate_residual;  ///< ||a(t/2)^{-1} A(t/2) a(t/2)^{-1} - I||
  Real b_certificate_residual;

  bool pass(const TolerancePolicy& policy) const {
    return a_side.special_orthogonal && b_side.special_orthogonal && a_conjugation_exact && b_conjugation_exact &&
           a_certificate_residual <= policy.abs_tol && b_certificate_residual <= policy.abs_tol;
  }
};

So2Report verify_so2_residuals(const Rational& t, const TolerancePolicy& policy);

enum class ShearSide { Upper, Lower };

struct Shear {
  ShearSide side = ShearSide::Upper;
  Rational t;
  Matrix<Rational> matrix() const { return side == ShearSide::Upper ? upper_shear(t) : lower_shear(t); }
};

/// (A(t), B(t), C) for upper or (C, B(t), A(t)) for lower, exact product
/// equal to the shear. Throws ZeroParameter, or NotPositiveDefinite for t < 0.
std::array<Matrix<QSqrt2>, 3> factor_shear_spd(const Rational& t, ShearSide side);

/// At most four non-trivial shears whose product is g in SL_2(Q):
/// g = U((a-1)/c) L(c) U((d-1)/c) when c != 0, else L(-1) times that
/// decomposition of L(1) g. Throws NotUnimodular.
std::vector<Shear> shear_decomposition(const Matrix<Rational>& g);

/// SPD det-1 factors of one shear with either sign of parameter: positive
/// parameters use factor_shear_spd, negative ones the inverted factors
/// U(-s) = C^{-1} B(s)^{-1} A(s)^{-1} and L(-s) = A(s)^{-1} B(s)^{-1} C^{-1}.
/// `trace` receives one human-readable line.
std::vector<Matrix<QSqrt2>> signed_shear_spd_factors(const Shear& shear, std::string* trace = nullptr);

struct SpdSquareFactorization {
  std::vector<Matrix<QSqrt2>> factors;  ///< tau(h_i) = h_i^2, exact
  std::vector<Matrix<Real>> roots;      ///< h_i
  int sign = 1;                         ///< product equals sign * g
  std::vector<std::string> trace;       ///< one line per shear
  Residual residual;                    ///< ||prod h_i^2 - sign g|| in Real
};

/// g = tau(h_1) ... tau(h_m) with SPD h_i and m <= 12. Negative shears use
/// the inverted factors U(-s) = C^{-1} B(s)^{-1} A(s)^{-1}, so the sign is
/// always +1. Throws NotUnimodular or FactorizationFailed (with trace).
SpdSquareFactorization factor_sl2_spd_squares(const Matrix<Rational>& g, const TolerancePolicy& policy);

/// (x+(1) o x-(-1) o x+(1))^2 with x-(-1) encoded as x-(1)^{-1}. Acts by
/// [[0,1],[-1,0]]^2 = -I, which fixes every point of the hyperbolic plane.
TransvectionWord<SpdPoint<Real>> minus_identity_word(const TolerancePolicy& policy);
TransvectionWord<SpdPoint<QSqrt2>> minus_identity_word_exact();

}  // namespace symspace
