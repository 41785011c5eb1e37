#include <gtest/gtest.h>

#include "symspace/gk/construction.hpp"

using namespace symspace;

namespace {

const TolerancePolicy kPolicy{};

Matrix<Rational> block_embed(const Matrix<Rational>& g) {
  Matrix<Rational> out = Matrix<Rational>::identity(3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out(i, j) = g(i, j);
  return out;
}

}  // namespace

TEST(CartanGroup, InvolutionLaws) {
  for (std::size_t n : {2u, 3u}) {
    auto r = check_involution_laws(CartanGroupModel(n), 5, 200);
    EXPECT_TRUE(r.involutive);
    EXPECT_TRUE(r.automorphism);
    EXPECT_EQ(r.checked, 200u);
  }
}

TEST(CartanGroup, FixedSubgroupIsSpecialOrthogonal) {
  CartanGroupModel sl2(2);
  Matrix<Rational> rot{{Rational(3, 5), Rational(-4, 5)}, {Rational(4, 5), Rational(3, 5)}};
  EXPECT_TRUE(sl2.in_fixed_subgroup(rot));
  EXPECT_EQ(sl2.involution(rot), rot);
  EXPECT_FALSE(sl2.in_fixed_subgroup(Matrix<Rational>{{1, 1}, {0, 1}}));
}

TEST(Twist, Examples) {
  CartanGroupModel sl2(2);
  EXPECT_EQ(twist(sl2, Matrix<Rational>::identity(2)), Matrix<Rational>::identity(2));
  Matrix<Rational> sym{{2, 1}, {1, 1}};
  EXPECT_EQ(twist(sl2, sym), sym * sym);
  EXPECT_EQ(twist(sl2, Matrix<Rational>{{1, 1}, {0, 1}}), (Matrix<Rational>{{2, 1}, {1, 1}}));
  try {
    twist(sl2, Matrix<Rational>{{2, 0}, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInGroup);
  }
}

TEST(GkReflect, BasepointAndRs1) {
  CartanGroupModel sl2(2);
  auto o = make_coset(sl2, Matrix<Rational>::identity(2));
  auto h = make_coset(sl2, Matrix<Rational>{{1, 2}, {0, 1}});
  auto r = gk_reflect(sl2, o, h);
  EXPECT_EQ(r.representative, sl2.involution(h.representative));
  EXPECT_EQ(r.canonical.matrix(), inverse(h.canonical.matrix()));
  auto x = make_coset(sl2, Matrix<Rational>{{1, 0}, {Rational(3, 2), 1}});
  EXPECT_TRUE(coset_distance(sl2, gk_reflect(sl2, x, x), x).is_exact_zero());
}

TEST(GkReflect, DiagonalAgainstShearPoint) {
  // P = diag(2,1/2) = tau(diag(sqrt2, 1/sqrt2)), Q = [[2,1],[1,1]] = tau([[1,1],[0,1]]).
  CartanGroupModel sl2(2);
  QSqrt2 r2 = QSqrt2::sqrt2();
  auto g = make_coset(sl2, Matrix<QSqrt2>::diagonal({r2, r2.inverse()}));
  auto h = make_coset(sl2, to_qsqrt2(Matrix<Rational>{{1, 1}, {0, 1}}));
  EXPECT_EQ(g.canonical.matrix(), to_qsqrt2(Matrix<Rational>{{2, 0}, {0, Rational(1, 2)}}));
  auto r = gk_reflect(sl2, g, h);
  // Oracle: Q^{-1} = [[1,-1],[-1,2]], P Q^{-1} P = [[4,-1],[-1,1/2]].
  Matrix<Rational> expected{{4, -1}, {-1, Rational(1, 2)}};
  Matrix<Rational> p{{2, 0}, {0, Rational(1, 2)}};
  Matrix<Rational> q_inv{{1, -1}, {-1, 2}};
  EXPECT_EQ(q_inv, inverse(Matrix<Rational>{{2, 1}, {1, 1}}));
  EXPECT_EQ(p * q_inv * p, expected);
  EXPECT_EQ(r.canonical.matrix(), to_qsqrt2(expected));
  EXPECT_EQ(determinant(expected), Rational(1));
}

TEST(GkReflect, RepresentativeAndCanonicalRoutesAgree) {
  for (std::size_t n : {2u, 3u}) {
    CartanGroupModel model(n);
    auto gs = model.sample(13, 2000);
    for (std::size_t k = 0; k < 1000; ++k) {
      auto g = make_coset(model, to_real(gs[2 * k]));
      auto h = make_coset(model, to_real(gs[2 * k + 1]));
      ASSERT_TRUE(gk_reflect_agreement(model, g, h, kPolicy).within(kPolicy));
    }
    auto ge = make_coset(model, gs[0]);
    auto he = make_coset(model, gs[1]);
    EXPECT_TRUE(gk_reflect_agreement(model, ge, he).is_exact_zero());
  }
}

TEST(GkReflect, SpdModelsPassAxiomBattery) {
  for (std::size_t n : {2u, 3u}) {
    CartanGroupModel model(n);
    EXPECT_TRUE(check_axioms(model.space<Real>(kPolicy), 21, 1000, kPolicy).all_pass());
    auto exact = check_axioms(model.space<Rational>(), 21, 100, kPolicy);
    EXPECT_TRUE(exact.all_pass());
    EXPECT_TRUE(exact.axioms[2].residual.is_exact_zero());
  }
}

// tr_{gK}(hK) = (tau(g) h)K.
TEST(GkReflect, TransvectionActsByTwist) {
  CartanGroupModel sl2(2);
  auto space = sl2.space<Real>(kPolicy);
  auto gs = sl2.sample(3, 200);
  for (std::size_t k = 0; k < 100; ++k) {
    auto g = make_coset(sl2, to_real(gs[2 * k]));
    auto h = make_coset(sl2, to_real(gs[2 * k + 1]));
    auto tr = TransvectionWord<SpdPoint<Real>>::elementary(g.canonical, space.basepoint());
    auto expected = make_coset(sl2, Matrix<Real>(twist(sl2, g.representative, kPolicy) * h.representative), kPolicy);
    ASSERT_TRUE(space.distance(word_act(space, tr, h.canonical), expected.canonical).within(kPolicy));
  }
}

TEST(Rs4Criterion, Cartan) {
  for (std::size_t n : {2u, 3u}) {
    auto r = check_rs4_criterion(CartanGroupModel(n), 4, 200);
    EXPECT_TRUE(r.pass());
    EXPECT_TRUE(r.analytic_certificate);
    EXPECT_EQ(r.checked, 401u);
    // Identity and every rational rotation give tau(g) = I; a shear product
    // can collapse to the identity too.
    EXPECT_GE(r.twists_in_k, 201u);
    EXPECT_EQ(r.violations, 0u);
  }
}

TEST(Rs4Criterion, NonOrthogonalTwistIsOutsideK) {
  CartanGroupModel sl2(2);
  auto t = to_real(twist(sl2, Matrix<Rational>{{1, 1}, {0, 1}}));
  EXPECT_GT(is_special_orthogonal(t, kPolicy).orthogonality, kPolicy.abs_tol);
}

TEST(InduceMorphism, Identity) {
  CartanGroupModel sl2(2);
  auto map = induce_morphism<Rational>(sl2, sl2, [](const Matrix<Rational>& g) { return g; }, 1);
  auto p = sl2.space<Rational>().sample(2, 1)[0];
  EXPECT_EQ(map(p), p);
  EXPECT_TRUE(map.morphism_residual().is_exact_zero());
}

TEST(InduceMorphism, BlockEmbeddingIsMorphism) {
  CartanGroupModel sl2(2), sl3(3);
  auto exact = induce_morphism<Rational>(sl2, sl3, block_embed, 7, kPolicy, 100);
  EXPECT_TRUE(exact.morphism_residual().is_exact_zero());
  auto real_map = induce_morphism<Real>(
      sl2, sl3, [](const Matrix<Real>& g) {
        Matrix<Real> out = Matrix<Real>::identity(3);
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j) out(i, j) = g(i, j);
        return out;
      },
      7, kPolicy, 100);
  EXPECT_LE(real_map.morphism_residual().value, kPolicy.abs_tol);
}

TEST(InduceMorphism, FunctorialityOnManyPairs) {
  CartanGroupModel sl2(2), sl3(3);
  auto map = induce_morphism<Rational>(sl2, sl3, block_embed, 7);
  auto src = sl2.space<Rational>();
  auto dst = sl3.space<Rational>();
  auto pts = src.sample(77, 2000);
  for (std::size_t k = 0; k < 1000; ++k) {
    ASSERT_EQ(map(src.reflect(pts[2 * k], pts[2 * k + 1])), dst.reflect(map(pts[2 * k]), map(pts[2 * k + 1])));
  }
}

TEST(InduceMorphism, NonOrthogonalConjugationRejected) {
  CartanGroupModel sl2(2);
  Matrix<Rational> s{{1, 1}, {0, 1}};
  Matrix<Rational> s_inv = inverse(s);
  try {
    induce_morphism<Rational>(sl2, sl2, [&](const Matrix<Rational>& g) { return s * g * s_inv; }, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvolutionNotRespected);
    EXPECT_NE(std::string(e.what()).find("at g = [["), std::string::npos);
  }
}

TEST(InduceMorphism, NonHomomorphismRejected) {
  CartanGroupModel sl2(2);
  try {
    induce_morphism<Rational>(sl2, sl2, [](const Matrix<Rational>& g) { return g.transpose(); }, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHomomorphism);
  }
}

TEST(BasepointSymmetry, IsInversion) {
  CartanGroupModel sl2(2);
  auto space = sl2.space<Rational>();
  EXPECT_EQ(space.reflect(space.basepoint(), space.basepoint()), space.basepoint());
  auto q = space.point(Matrix<Rational>{{2, 0}, {0, Rational(1, 2)}});
  EXPECT_EQ(space.reflect(space.basepoint(), q).matrix(), (Matrix<Rational>{{Rational(1, 2), 0}, {0, 2}}));
  auto exact = basepoint_symmetry_is_involution_map<Rational>(sl2, 9, 200);
  EXPECT_TRUE(exact.holds);
  EXPECT_TRUE(exact.max_residual.is_exact_zero());
  auto approx = basepoint_symmetry_is_involution_map<Real>(CartanGroupModel(3), 9, 200, kPolicy);
  EXPECT_TRUE(approx.holds);
}
