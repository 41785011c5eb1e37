#include <gtest/gtest.h>

#include "symspace/reflection/checks.hpp"

using namespace symspace;

namespace {

const TolerancePolicy kPolicy{};

template <Scalar S>
SpdPoint<S> pt(const Matrix<Rational>& m) {
  return SpdPoint<S>::make(from_rational<S>(m));
}

Matrix<Rational> a_of_one_squared() {
  // A(1) = (1/sqrt2)[[3,-1],[-1,1]] so A(1)^2 = (1/2)[[10,-4],[-4,2]].
  return Matrix<Rational>{{5, -2}, {-2, 1}};
}

}  // namespace

TEST(Reflect, GeodesicLine) {
  GeodesicLine line;
  EXPECT_EQ(reflect(line, Rational(1), Rational(3)), Rational(-1));
}

TEST(Reflect, BasepointIsInversion) {
  SpdSpace<Rational> h(2);
  auto q = pt<Rational>(Matrix<Rational>{{2, 1}, {1, 1}});
  EXPECT_EQ(reflect(h, h.basepoint(), q).matrix(), inverse(q.matrix()));
}

TEST(Reflect, DiagonalPointOnBasepoint) {
  SpdSpace<Rational> h(2);
  auto p = pt<Rational>(Matrix<Rational>{{2, 0}, {0, Rational(1, 2)}});
  EXPECT_EQ(reflect(h, p, h.basepoint()).matrix(), (Matrix<Rational>{{4, 0}, {0, Rational(1, 4)}}));
}

TEST(Reflect, InvalidPoints) {
  SpdSpace<Rational> h(2);
  EXPECT_THROW(h.point(Matrix<Rational>{{1, 1}, {0, 1}}), Error);
  EXPECT_THROW(h.point(Matrix<Rational>{{2, 0}, {0, 1}}), Error);
  EXPECT_THROW(h.point(Matrix<Rational>{{-1, 0}, {0, -1}}), Error);
  EXPECT_THROW(h.point(Matrix<Rational>::identity(3)), Error);
  SpdSpace<Rational> x(3);
  EXPECT_THROW(reflect(x, x.basepoint(), h.basepoint()), Error);
}

TEST(Axioms, GeodesicExact) {
  auto report = check_axioms(GeodesicLine{}, 7, 1000, kPolicy);
  EXPECT_TRUE(report.all_pass());
  for (std::size_t k = 0; k < 3; ++k) EXPECT_TRUE(report.axioms[k].residual.is_exact_zero());
  EXPECT_EQ(report.axioms[3].violations, 0u);
}

TEST(Axioms, Sl2RealAndExactSubsample) {
  auto real = check_axioms(SpdSpace<Real>(2), 1, 1000, kPolicy);
  EXPECT_TRUE(real.all_pass());
  for (std::size_t k = 0; k < 3; ++k) EXPECT_LE(real.axioms[k].residual.value, kPolicy.abs_tol);
  auto exact = check_axioms(SpdSpace<Rational>(2), 1, 200, kPolicy);
  EXPECT_TRUE(exact.all_pass());
  for (std::size_t k = 0; k < 3; ++k) EXPECT_TRUE(exact.axioms[k].residual.is_exact_zero());
}

TEST(Axioms, Sl3) {
  EXPECT_TRUE(check_axioms(SpdSpace<Real>(3), 3, 300, kPolicy).all_pass());
  EXPECT_TRUE(check_axioms(SpdSpace<Rational>(3), 3, 100, kPolicy).all_pass());
}

TEST(Axioms, BrokenModelFailsRS2) {
  auto report = check_axioms(BrokenSpdSpace<Rational>(2), 1, 50, kPolicy);
  EXPECT_FALSE(report.all_pass());
  EXPECT_FALSE(report.axioms[1].pass);
  EXPECT_GT(report.axioms[1].violations, 0u);
}

TEST(WordAct, EmptyAndBasepoint) {
  SpdSpace<Rational> h(2);
  auto q = pt<Rational>(Matrix<Rational>{{2, 1}, {1, 1}});
  EXPECT_EQ(word_act(h, ReflectionWord<SpdPoint<Rational>>{}, q), q);
  EXPECT_EQ(word_act(h, ReflectionWord<SpdPoint<Rational>>({h.basepoint()}), q).matrix(), inverse(q.matrix()));
}

TEST(WordAct, ElementaryTransvectionOfA1) {
  // tr_{[a(1)]}(o) = A(1) I A(1) = A(1)^2, with A(1) in Q(sqrt2).
  SpdSpace<QSqrt2> h(2);
  QSqrt2 inv_r2(0, Rational(1, 2));
  Matrix<QSqrt2> a1 = Matrix<QSqrt2>{{3, -1}, {-1, 1}} * inv_r2;
  auto w = TransvectionWord<SpdPoint<QSqrt2>>::elementary(h.point(a1), h.basepoint());
  EXPECT_EQ(word_act(h, w, h.basepoint()).matrix(), to_qsqrt2(a_of_one_squared()));
  EXPECT_EQ(a1 * a1, to_qsqrt2(a_of_one_squared()));
}

TEST(WordAct, RespectsConcatenation) {
  SpdSpace<Rational> h(2);
  auto pts = h.sample(9, 40);
  for (int k = 0; k < 10; ++k) {
    ReflectionWord<SpdPoint<Rational>> w1({pts[k], pts[k + 1], pts[k + 2]});
    ReflectionWord<SpdPoint<Rational>> w2({pts[k + 3], pts[k + 4]});
    const auto& y = pts[k + 20];
    EXPECT_EQ(word_act(h, w1 * w2, y), word_act(h, w1, word_act(h, w2, y)));
  }
}

TEST(ActionMatrix, MatchesLetterByLetterAction) {
  SpdSpace<Rational> h(2);
  auto pts = h.sample(4, 12);
  ReflectionWord<SpdPoint<Rational>> even({pts[0], pts[1], pts[2], pts[3]});
  auto am = action_matrix(even, 2);
  EXPECT_FALSE(am.inverts);
  const auto& q = pts[10];
  EXPECT_EQ(word_act(h, even, q).matrix(), am.matrix * q.matrix() * am.matrix.transpose());
  ReflectionWord<SpdPoint<Rational>> odd({pts[0], pts[1], pts[2]});
  auto ao = action_matrix(odd, 2);
  EXPECT_TRUE(ao.inverts);
  EXPECT_EQ(word_act(h, odd, q).matrix(), ao.matrix * inverse(q.matrix()) * ao.matrix.transpose());
}

TEST(TransvectionWord, OddLengthRejected) {
  SpdSpace<Rational> h(2);
  EXPECT_THROW(TransvectionWord<SpdPoint<Rational>>(ReflectionWord<SpdPoint<Rational>>({h.basepoint()})), Error);
}

TEST(TransvectionWord, ElementaryFactorsReassemble) {
  // sigma_p sigma_q = tr_p tr_q^{-1} as actions.
  SpdSpace<Rational> h(2);
  auto pts = h.sample(21, 2);
  auto o = h.basepoint();
  using TW = TransvectionWord<SpdPoint<Rational>>;
  TW w(ReflectionWord<SpdPoint<Rational>>({pts[0], pts[1]}));
  auto factors = w.elementary_factors();
  ASSERT_EQ(factors.size(), 2u);
  EXPECT_EQ(factors[1].second, -1);
  TW rebuilt = TW::elementary(factors[0].first, o) * TW::elementary(factors[1].first, o).inverse();
  EXPECT_TRUE(words_equal_as_actions(h, w, rebuilt, 3, 20, kPolicy).holds);
}

TEST(ConjugationFormula, SingleLetterAndEmpty) {
  SpdSpace<Real> h(2);
  auto pts = h.sample(5, 2);
  using W = ReflectionWord<SpdPoint<Real>>;
  auto r = check_conjugation_formula(h, W({pts[0]}), pts[1], kPolicy, 1, 50);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(check_conjugation_formula(h, W{}, pts[1], kPolicy).holds);
  EXPECT_TRUE(check_conjugation_formula(GeodesicLine{}, ReflectionWord<Rational>({Rational(3, 2)}), Rational(5),
                                        kPolicy)
                  .max_residual.is_exact_zero());
}

// Long words amplify rounding far beyond 1e-9 at 128 bits (entries reach
// 1e30 after a dozen reflections), so lengths up to 6 run exactly.
TEST(ConjugationFormula, RandomWordsExact) {
  SpdSpace<Rational> h(2);
  GeodesicLine line;
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    auto len = static_cast<std::size_t>(uniform_int(rng, 0, 6));
    auto pts = h.sample(1000 + trial, len + 1);
    ReflectionWord<SpdPoint<Rational>> alpha(std::vector<SpdPoint<Rational>>(pts.begin(), pts.begin() + len));
    auto r = check_conjugation_formula(h, alpha, pts.back(), kPolicy, trial, 10);
    EXPECT_TRUE(r.max_residual.is_exact_zero());
    auto lp = line.sample(2000 + trial, len + 1);
    ReflectionWord<Rational> la(std::vector<Rational>(lp.begin(), lp.begin() + len));
    EXPECT_TRUE(check_conjugation_formula(line, la, lp.back(), kPolicy).max_residual.is_exact_zero());
  }
}

TEST(ConjugationFormula, SingleLetterRealWords) {
  SpdSpace<Real> h(2);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t len = 1;
    auto pts = h.sample(3000 + trial, len + 1);
    ReflectionWord<SpdPoint<Real>> alpha(std::vector<SpdPoint<Real>>(pts.begin(), pts.begin() + len));
    auto r = check_conjugation_formula(h, alpha, pts.back(), kPolicy, trial, 100);
    EXPECT_TRUE(r.holds) << r.max_residual.str();
  }
}

TEST(ConjugationFormula, FourLetterWordAtWiderPrecision) {
  PrecisionScope scope(256);
  TolerancePolicy policy;
  SpdSpace<Real> h(2, policy);
  auto pts = h.sample(4242, 5);
  ReflectionWord<SpdPoint<Real>> alpha(std::vector<SpdPoint<Real>>(pts.begin(), pts.begin() + 4));
  auto r = check_conjugation_formula(h, alpha, pts.back(), policy, 1, 100);
  EXPECT_TRUE(r.holds) << r.max_residual.str();
  EXPECT_EQ(r.samples, 100u);
}

TEST(WordsEqual, SelfAndInvolution) {
  SpdSpace<Real> h(2);
  auto pts = h.sample(8, 3);
  using W = ReflectionWord<SpdPoint<Real>>;
  W w({pts[0], pts[1], pts[2]});
  auto self = words_equal_as_actions(h, w, w, 1, 20, kPolicy);
  EXPECT_TRUE(self.holds);
  EXPECT_TRUE(self.max_residual.value.is_zero());
  EXPECT_TRUE(words_equal_as_actions(h, W({pts[0], pts[0]}), W{}, 1, 20, kPolicy).holds);
  EXPECT_FALSE(words_equal_as_actions(h, W({pts[0], pts[1]}), W{}, 1, 20, kPolicy).holds);
}

// Restricted transvections along the line add: tr_x tr_y = tr_{x+y}.
TEST(WordsEqual, GeodesicTransvectionsAreAdditive) {
  GeodesicLine line;
  auto pts = line.sample(17, 2000);
  const Rational o = line.basepoint();
  using TW = TransvectionWord<Rational>;
  for (std::size_t k = 0; k < 1000; ++k) {
    const auto& x = pts[2 * k];
    const auto& y = pts[2 * k + 1];
    auto r = words_equal_as_actions(line, TW::elementary(x, o) * TW::elementary(y, o), TW::elementary(x + y, o),
                                    k, 5, kPolicy);
    ASSERT_TRUE(r.max_residual.is_exact_zero());
  }
}

// sigma_o tr_x^{-1} sigma_o acts as tr_x.
TEST(WordsEqual, BasepointConjugationInvertsTransvection) {
  SpdSpace<Real> h(2);
  auto o = h.basepoint();
  auto pts = h.sample(31, 10);
  using TW = TransvectionWord<SpdPoint<Real>>;
  for (const auto& x : pts) {
    auto tr = TW::elementary(x, o);
    EXPECT_TRUE(words_equal_as_actions(h, conjugate_by_reflection(o, tr.inverse()), tr, 2, 100, kPolicy).holds);
  }
}

TEST(StabilizerCentralizer, Examples) {
  SpdSpace<QSqrt2> h(2);
  auto o = h.basepoint();
  using TW = TransvectionWord<SpdPoint<QSqrt2>>;
  auto empty = check_stabilizer_centralizer(h, TW{}, kPolicy);
  EXPECT_TRUE(empty.fixes_basepoint);
  EXPECT_TRUE(empty.centralizes);

  // A word acting by the quarter-turn rotation: tr_P tr_Q^{-1} with P Q^{-1} = rot... build from shears:
  // U(1) L(-1) U(1) = [[0,1],[-1,0]], U(t) = A B C, L(-1) = (C B A)^{-1}.
  QSqrt2 inv_r2(0, Rational(1, 2));
  Matrix<QSqrt2> a = Matrix<QSqrt2>{{3, -1}, {-1, 1}} * inv_r2;
  Matrix<QSqrt2> b = to_qsqrt2(Matrix<Rational>{{1, 1}, {1, 2}});
  Matrix<QSqrt2> c = Matrix<QSqrt2>::diagonal({inv_r2, QSqrt2::sqrt2()});
  auto xp = TW::product_of_elementary({h.point(a), h.point(b), h.point(c)}, o);
  auto xm = TW::product_of_elementary({h.point(c), h.point(b), h.point(a)}, o);
  auto rot = xp * xm.inverse() * xp;
  EXPECT_EQ(action_matrix(rot, 2), to_qsqrt2(Matrix<Rational>{{0, 1}, {-1, 0}}));
  auto r = check_stabilizer_centralizer(h, rot, kPolicy);
  EXPECT_TRUE(r.fixes_basepoint);
  EXPECT_TRUE(r.centralizes);
  EXPECT_TRUE(r.consistent());

  auto moving = check_stabilizer_centralizer(h, TW::elementary(h.point(a), o), kPolicy);
  EXPECT_FALSE(moving.fixes_basepoint);
  EXPECT_FALSE(moving.centralizes);
  EXPECT_TRUE(moving.consistent());
}
