#include <gtest/gtest.h>

#include <random>

#include "symspace/numeric/spd.hpp"
#include "symspace/reflection/sampling.hpp"

using namespace symspace;

namespace {

Matrix<Real> R(const Matrix<Rational>& m) { return to_real(m); }

Real frob(const Matrix<Real>& m) { return frobenius_norm(m); }

const TolerancePolicy kPolicy{};

}  // namespace

TEST(Rational, ParseAndCanonicalForm) {
  EXPECT_EQ(Rational::parse("2/4"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-3/6").str(), "-1/2");
  EXPECT_EQ(Rational::parse(" 7 ").str(), "7");
  EXPECT_EQ(Rational(6, -4).denominator(), 2);
  EXPECT_EQ(Rational(6, -4).numerator(), -3);
}

TEST(Rational, MalformedInputs) {
  try {
    Rational::parse("1/0");
    FAIL() << "expected ZeroDivision";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroDivision);
  }
  EXPECT_THROW(Rational::parse("abc"), Error);
  EXPECT_THROW(Rational::parse("1/-2"), Error);
  EXPECT_THROW(Rational::parse(""), Error);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(QSqrt2, SignIsExact) {
  EXPECT_EQ(QSqrt2(3, -2).sign(), 1);   // 3 - 2.828...
  EXPECT_EQ(QSqrt2(-3, 2).sign(), -1);
  EXPECT_EQ(QSqrt2(1, -1).sign(), -1);
  EXPECT_EQ(QSqrt2(0, 0).sign(), 0);
  // 99/70 is just above sqrt 2.
  EXPECT_EQ(QSqrt2(Rational(99, 70), -1).sign(), 1);
  EXPECT_EQ(QSqrt2(Rational(140, 99), -1).sign(), -1);
}

TEST(QSqrt2, SqrtTwoSquaresToTwo) {
  EXPECT_EQ(QSqrt2::sqrt2() * QSqrt2::sqrt2(), QSqrt2(2));
  EXPECT_EQ(QSqrt2::sqrt2().inverse(), QSqrt2(0, Rational(1, 2)));
}

// Field axioms verified exactly on random elements, no tolerance anywhere.
TEST(QSqrt2, ExactFieldProperties) {
  Rng rng(11);
  auto draw = [&] { return QSqrt2(random_line_rational(rng), random_line_rational(rng)); };
  for (int i = 0; i < 500; ++i) {
    QSqrt2 x = draw(), y = draw(), z = draw();
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x * y, y * x);
    if (!x.is_zero()) {
      EXPECT_EQ(x * x.inverse(), QSqrt2(1));
    }
  }
}

TEST(QSqrt2, ToRealExamples) {
  const long bits = 128;
  PrecisionScope scope(bits);
  const Real bound = Real(1) / Real(Rational(mpq_class(mpz_class(1) << (bits - 2))));
  EXPECT_EQ(qsqrt2_to_real(QSqrt2(1), bits), Real(1));
  Real root2 = qsqrt2_to_real(QSqrt2::sqrt2(), bits);
  EXPECT_EQ(root2.str(9), "1.41421356e+00");
  // Oracle: 3 - 2 sqrt2 lies in [3 - 2*1.4142135623730950489, 3 - 2*1.4142135623730950488].
  Real v = qsqrt2_to_real(QSqrt2(3, -2), bits);
  Real lo(Rational::parse("3") - Rational(2) * Rational::parse("14142135623730950489/10000000000000000000"));
  Real hi(Rational::parse("3") - Rational(2) * Rational::parse("14142135623730950488/10000000000000000000"));
  EXPECT_GE(v, lo);
  EXPECT_LE(v, hi);
  EXPECT_EQ(v.str(9), "1.71572875e-01");
}

TEST(QSqrt2, ToRealSurvivesCancellation) {
  // (x - y sqrt2) for a large Pell solution: tiny value, huge parts.
  // 665857^2 - 2*470832^2 = 1, so the value is 1/(665857 + 470832 sqrt2).
  QSqrt2 x(665857, -470832);
  const long bits = 128;
  PrecisionScope scope(bits);
  Real got = qsqrt2_to_real(x, bits);
  Real expected = qsqrt2_to_real(x.inverse(), bits);
  expected = Real(1) / expected;
  EXPECT_LT(abs(got - expected), Real(1) / Real(Rational(mpq_class(mpz_class(1) << 126))));
}

TEST(QSqrt2, ToRealIsMonotone) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    QSqrt2 x(random_line_rational(rng), random_line_rational(rng));
    QSqrt2 y(random_line_rational(rng), random_line_rational(rng));
    if ((x - y).sign() < 0) std::swap(x, y);
    EXPECT_GE(qsqrt2_to_real(x, 128), qsqrt2_to_real(y, 128));
  }
}

TEST(Matrix, DeterminantAndInverseExact) {
  Matrix<Rational> m{{2, 0, 1}, {0, 1, 0}, {1, 0, 1}};
  EXPECT_EQ(determinant(m), Rational(1));
  EXPECT_EQ(m * inverse(m), Matrix<Rational>::identity(3));
  Matrix<Rational> singular{{1, 2}, {2, 4}};
  EXPECT_EQ(determinant(singular), Rational(0));
  EXPECT_THROW(inverse(singular), Error);
}

TEST(Matrix, ParseRationalMatrix) {
  auto m = parse_rational_matrix("1,1/2;0,2");
  EXPECT_EQ(m(0, 1), Rational(1, 2));
  EXPECT_EQ(m(1, 1), Rational(2));
  EXPECT_THROW(parse_rational_matrix("1,2;3"), Error);
}

TEST(SpdSqrt, Identity) {
  auto s = spd_sqrt(Matrix<Real>::identity(2), kPolicy);
  EXPECT_LE(frob(s - Matrix<Real>::identity(2)), kPolicy.abs_tol);
}

TEST(SpdSqrt, Diagonal) {
  auto m = R(Matrix<Rational>{{4, 0}, {0, Rational(1, 4)}});
  auto s = spd_sqrt(m, kPolicy);
  EXPECT_LE(frob(s - R(Matrix<Rational>{{2, 0}, {0, Rational(1, 2)}})), kPolicy.abs_tol);
}

TEST(SpdSqrt, BOfOne) {
  // Oracle: [[2,1],[1,3]]/sqrt5 squared is [[5,5],[5,10]]/5 = B(1).
  Matrix<Rational> expected_sq = Matrix<Rational>{{2, 1}, {1, 3}} * Matrix<Rational>{{2, 1}, {1, 3}};
  EXPECT_EQ(expected_sq * Rational(1, 5), (Matrix<Rational>{{1, 1}, {1, 2}}));
  auto s = spd_sqrt(R(Matrix<Rational>{{1, 1}, {1, 2}}), kPolicy);
  Matrix<Real> closed = R(Matrix<Rational>{{2, 1}, {1, 3}}) * Real(Real(1) / sqrt(Real(5)));
  EXPECT_LE(frob(s - closed), kPolicy.abs_tol);
}

TEST(SpdSqrt, ThreeByThreeIteration) {
  Matrix<Rational> g{{1, 2, 0}, {0, 1, Rational(1, 2)}, {Rational(-3, 4), 0, 1}};
  auto m = R(Matrix<Rational>(g * g.transpose()));
  auto s = spd_sqrt(m, kPolicy);
  EXPECT_LE(frob(s * s - m), kPolicy.abs_tol);
  EXPECT_LE(symmetry_defect(s), kPolicy.abs_tol);
  EXPECT_TRUE(is_positive_definite(s));
}

TEST(SpdSqrt, OneByOne) {
  auto s = spd_sqrt(Matrix<Real>{{Real(9)}}, kPolicy);
  EXPECT_EQ(s(0, 0), Real(3));
}

TEST(SpdSqrt, RejectsBadInput) {
  try {
    spd_sqrt(R(Matrix<Rational>{{1, 2}, {0, 1}}), kPolicy);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
  }
  try {
    spd_sqrt(R(Matrix<Rational>{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}), kPolicy);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPositiveDefinite);
    EXPECT_NE(std::string(e.what()).find("minor 2"), std::string::npos);
  }
}

// 1000 random SPD det-1 2x2 matrices.
TEST(SpdSqrt, RandomDetOneProperty) {
  Rng rng(2024);
  for (int i = 0; i < 1000; ++i) {
    Matrix<Rational> g = random_shear_product(2, rng);
    Matrix<Real> m = R(Matrix<Rational>(g * g.transpose()));
    auto s = spd_sqrt(m, kPolicy);
    ASSERT_LE(frob(s * s - m), kPolicy.abs_tol);
    ASSERT_LE(symmetry_defect(s), kPolicy.abs_tol);
    ASSERT_LE(abs(determinant(s) - sqrt(determinant(m))), kPolicy.abs_tol);
  }
}

TEST(SpecialOrthogonal, Examples) {
  auto id = is_special_orthogonal(Matrix<Real>::identity(2), kPolicy);
  EXPECT_TRUE(id.special_orthogonal);
  EXPECT_TRUE(id.orthogonality.is_zero());
  EXPECT_TRUE(is_special_orthogonal(R(Matrix<Rational>{{0, 1}, {-1, 0}}), kPolicy).special_orthogonal);
  // C C^T = diag(1/2, 2): defect sqrt(1/4 + 1) exactly.
  Real r2 = sqrt(Real(2));
  Matrix<Real> c{{Real(1) / r2, Real(0)}, {Real(0), r2}};
  auto res = is_special_orthogonal(c, kPolicy);
  EXPECT_FALSE(res.special_orthogonal);
  EXPECT_LE(abs(res.orthogonality - sqrt(Real(Rational(5, 4)))), kPolicy.abs_tol);
  // Reflection: orthogonal but det -1.
  EXPECT_FALSE(is_special_orthogonal(R(Matrix<Rational>{{1, 0}, {0, -1}}), kPolicy).special_orthogonal);
}

TEST(PolarDecompose, Examples) {
  Matrix<Real> k = R(Matrix<Rational>{{Rational(3, 5), Rational(-4, 5)}, {Rational(4, 5), Rational(3, 5)}});
  auto pk = polar_decompose(k, kPolicy);
  EXPECT_LE(frob(pk.spd_part - Matrix<Real>::identity(2)), kPolicy.abs_tol);
  EXPECT_LE(frob(pk.orth_part - k), kPolicy.abs_tol);

  Matrix<Real> p = R(Matrix<Rational>{{2, 1}, {1, 1}});
  auto pp = polar_decompose(p, kPolicy);
  EXPECT_LE(frob(pp.spd_part - p), kPolicy.abs_tol);
  EXPECT_LE(frob(pp.orth_part - Matrix<Real>::identity(2)), kPolicy.abs_tol);

  Matrix<Real> u = R(Matrix<Rational>{{1, 1}, {0, 1}});
  auto pu = polar_decompose(u, kPolicy);
  EXPECT_LE(frob(pu.spd_part - spd_sqrt(R(Matrix<Rational>{{2, 1}, {1, 1}}), kPolicy)), kPolicy.abs_tol);
  EXPECT_LE(frob(pu.spd_part * pu.orth_part - u), kPolicy.abs_tol);
  EXPECT_TRUE(is_special_orthogonal(pu.orth_part, kPolicy).special_orthogonal);

  EXPECT_THROW(polar_decompose(R(Matrix<Rational>{{1, 0}, {0, -1}}), kPolicy), Error);
}

TEST(PolarDecompose, RoundTripOnRandomMatrices) {
  Rng rng(77);
  for (int i = 0; i < 1000; ++i) {
    Matrix<Rational> g = random_bounded_sl(2, rng, Rational(4));
    Matrix<Real> gr = R(g);
    auto pd = polar_decompose(gr, kPolicy);
    ASSERT_LE(frob(pd.spd_part * pd.orth_part - gr), kPolicy.abs_tol);
    ASSERT_TRUE(is_special_orthogonal(pd.orth_part, kPolicy).special_orthogonal);
  }
}
