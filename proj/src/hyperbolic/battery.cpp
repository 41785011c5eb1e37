#include "symspace/hyperbolic/battery.hpp"

#include <stdexcept>

namespace symspace {

namespace {

const QSqrt2 kInvSqrt2(0, Rational(1, 2));

void require_nonzero(const Rational& t) {
  if (t.is_zero()) throw Error(ErrorCode::ZeroParameter, "parameter t must be non-zero");
}

void require_positive(const Rational& t) {
  require_nonzero(t);
  if (t.sign() < 0) {
    throw Error(ErrorCode::NotPositiveDefinite, "A(t), B(t) are not positive definite for t = " + t.str());
  }
}

Matrix<Real> real_point_of_root(const Matrix<Real>& h) { return h * h.transpose(); }

}  // namespace

Matrix<Rational> upper_shear(const Rational& t) { return Matrix<Rational>{{1, t}, {0, 1}}; }

Matrix<Rational> lower_shear(const Rational& t) { return Matrix<Rational>{{1, 0}, {t, 1}}; }

std::string to_string(GeneratorKind kind) { return kind == GeneratorKind::XPlus ? "x+" : "x-"; }

LemmaMatrices lemma_matrices(const Rational& t) {
  require_nonzero(t);
  LemmaMatrices m;
  m.t = t;
  m.a = Matrix<QSqrt2>{{QSqrt2(Rational(3) * t), QSqrt2(-1)}, {QSqrt2(-1), QSqrt2(t.inverse())}} * kInvSqrt2;
  m.b = to_qsqrt2(Matrix<Rational>{{t.inverse(), 1}, {1, Rational(2) * t}});
  m.c = Matrix<QSqrt2>::diagonal({kInvSqrt2, QSqrt2::sqrt2()});
  for (const auto* x : {&m.a, &m.b, &m.c}) {
    if (!is_symmetric_exactly(*x) || !(determinant(*x) == QSqrt2(1))) {
      throw std::logic_error("lemma matrix is not symmetric of determinant 1 at t = " + t.str());
    }
  }
  m.a_positive_definite = is_positive_definite(m.a);
  m.b_positive_definite = is_positive_definite(m.b);
  return m;
}

MatrixLemmaReport verify_matrix_lemma(const Rational& t) {
  LemmaMatrices m = lemma_matrices(t);
  LemmaMatrices half = lemma_matrices(t / Rational(2));
  Matrix<QSqrt2> c_inv = inverse(m.c);
  MatrixLemmaReport report;
  report.t = t;
  report.identities.push_back({"A(t)B(t)C=U(t)", m.a * m.b * m.c, to_qsqrt2(upper_shear(t))});
  report.identities.push_back({"CB(t)A(t)=L(t)", m.c * m.b * m.a, to_qsqrt2(lower_shear(t))});
  report.identities.push_back({"CA(t)C=A(t/2)", m.c * m.a * m.c, half.a});
  report.identities.push_back({"C^-1B(t)C^-1=B(t/2)", c_inv * m.b * c_inv, half.b});
  return report;
}

SquareRoots lemma_square_roots(const Rational& t, const TolerancePolicy& policy) {
  require_positive(t);
  LemmaMatrices m = lemma_matrices(t);
  return {spd_sqrt(to_real(m.a), policy), spd_sqrt(to_real(m.b), policy), spd_sqrt(to_real(m.c), policy)};
}

GeneratorWord build_generator(GeneratorKind kind, const Rational& t, const TolerancePolicy& policy,
                              std::uint64_t seed, std::size_t count) {
  require_positive(t);
  LemmaMatrices m = lemma_matrices(t);
  GeneratorWord g;
  g.kind = kind;
  g.t = t;
  g.roots = lemma_square_roots(t, policy);

  using RealPoint = SpdPoint<Real>;
  using ExactPoint = SpdPoint<QSqrt2>;
  RealPoint pa = RealPoint::trusted(real_point_of_root(g.roots.a));
  RealPoint pb = RealPoint::trusted(real_point_of_root(g.roots.b));
  RealPoint pc = RealPoint::trusted(real_point_of_root(g.roots.c));
  ExactPoint ea = ExactPoint::make(m.a), eb = ExactPoint::make(m.b), ec = ExactPoint::make(m.c);
  RealPoint o = RealPoint::trusted(Matrix<Real>::identity(2));
  ExactPoint eo = ExactPoint::trusted(Matrix<QSqrt2>::identity(2));

  if (kind == GeneratorKind::XPlus) {
    g.word = TransvectionWord<RealPoint>::product_of_elementary({pa, pb, pc}, o);
    g.exact_word = TransvectionWord<ExactPoint>::product_of_elementary({ea, eb, ec}, eo);
    g.shear = upper_shear(t);
  } else {
    g.word = TransvectionWord<RealPoint>::product_of_elementary({pc, pb, pa}, o);
    g.exact_word = TransvectionWord<ExactPoint>::product_of_elementary({ec, eb, ea}, eo);
    g.shear = lower_shear(t);
  }

  if (!(action_matrix(g.exact_word, 2) == to_qsqrt2(g.shear))) {
    throw std::logic_error("exact generator word does not act by the shear at t = " + t.str());
  }
  SpdSpace<Real> space(2, policy);
  g.action_check = action_matches_matrix(space, g.word.reflections(), to_real(g.shear), seed, count, policy);
  if (!g.action_check.holds) {
    throw std::logic_error("generator word does not act by the shear at t = " + t.str() + ", residual " +
                           g.action_check.max_residual.str());
  }
  return g;
}

TransvectionWord<SpdPoint<Real>> tr_c_word(const TolerancePolicy& policy) {
  Matrix<Real> c = spd_sqrt(to_real(lemma_matrices(Rational(1)).c), policy);
  return TransvectionWord<SpdPoint<Real>>::elementary(SpdPoint<Real>::trusted(real_point_of_root(c)),
                                                      SpdPoint<Real>::trusted(Matrix<Real>::identity(2)));
}

TransvectionWord<SpdPoint<QSqrt2>> tr_c_word_exact() {
  return TransvectionWord<SpdPoint<QSqrt2>>::elementary(SpdPoint<QSqrt2>::make(lemma_matrices(Rational(1)).c),
                                                        SpdPoint<QSqrt2>::trusted(Matrix<QSqrt2>::identity(2)));
}

CommutatorReport verify_commutator_identity(const Rational& t, std::uint64_t seed, std::size_t count,
                                            const TolerancePolicy& policy) {
  require_positive(t);
  const Rational half = t / Rational(2);
  GeneratorWord xp = build_generator(GeneratorKind::XPlus, t, policy, seed);
  GeneratorWord xp_half = build_generator(GeneratorKind::XPlus, half, policy, seed);
  GeneratorWord xm = build_generator(GeneratorKind::XMinus, t, policy, seed);
  GeneratorWord xm_half = build_generator(GeneratorKind::XMinus, half, policy, seed);
  auto trc = tr_c_word(policy);
  SpdSpace<Real> space(2, policy);

  CommutatorReport r;
  r.t = t;
  r.commutator = words_equal_as_actions(space, commutator(trc, xp.word), xp_half.word * xp.word.inverse(), seed,
                                        count, policy);
  r.reduced = words_equal_as_actions(space, conjugate(trc, xp.word), xp_half.word, seed, count, policy);
  r.mirrored = words_equal_as_actions(space, commutator(xm.word, trc.inverse()), xm.word * xm_half.word.inverse(),
                                      seed, count, policy);

  auto trc_exact = tr_c_word_exact();
  r.commutator_matrix = action_matrix(commutator(trc_exact, xp.exact_word), 2);
  r.expected_matrix = to_qsqrt2(upper_shear(-half));
  Matrix<QSqrt2> rhs = action_matrix(xp_half.exact_word * xp.exact_word.inverse(), 2);
  Matrix<QSqrt2> mirrored_lhs = action_matrix(commutator(xm.exact_word, trc_exact.inverse()), 2);
  Matrix<QSqrt2> mirrored_rhs = action_matrix(xm.exact_word * xm_half.exact_word.inverse(), 2);
  r.exact_match = r.commutator_matrix == r.expected_matrix && rhs == r.expected_matrix &&
                  mirrored_lhs == mirrored_rhs && mirrored_lhs == to_qsqrt2(lower_shear(half));
  return r;
}

So2Report verify_so2_residuals(const Rational& t, const TolerancePolicy& policy) {
  require_positive(t);
  const Rational half = t / Rational(2);
  SquareRoots full = lemma_square_roots(t, policy);
  SquareRoots halved = lemma_square_roots(half, policy);
  Matrix<Real> c2 = full.c * full.c;

  So2Report r;
  r.t = t;
  r.a_side = is_special_orthogonal(inverse(halved.a) * c2 * full.a, policy);
  r.b_side = is_special_orthogonal(inverse(halved.b) * inverse(c2) * full.b, policy);

  LemmaMatrices m = lemma_matrices(t);
  LemmaMatrices mh = lemma_matrices(half);
  Matrix<QSqrt2> c_inv = inverse(m.c);
  r.a_conjugation_exact = m.c * m.a * m.c == mh.a;
  r.b_conjugation_exact = c_inv * m.b * c_inv == mh.b;
  const auto id = Matrix<Real>::identity(2);
  Matrix<Real> ah_inv = inverse(halved.a);
  Matrix<Real> bh_inv = inverse(halved.b);
  r.a_certificate_residual = frobenius_norm(Matrix<Real>(ah_inv * to_real(mh.a) * ah_inv - id));
  r.b_certificate_residual = frobenius_norm(Matrix<Real>(bh_inv * to_real(mh.b) * bh_inv - id));
  return r;
}

std::array<Matrix<QSqrt2>, 3> factor_shear_spd(const Rational& t, ShearSide side) {
  require_positive(t);
  LemmaMatrices m = lemma_matrices(t);
  std::array<Matrix<QSqrt2>, 3> f = side == ShearSide::Upper ? std::array{m.a, m.b, m.c} : std::array{m.c, m.b, m.a};
  Matrix<Rational> shear = side == ShearSide::Upper ? upper_shear(t) : lower_shear(t);
  if (!(f[0] * f[1] * f[2] == to_qsqrt2(shear))) {
    throw std::logic_error("SPD factors do not multiply to the shear at t = " + t.str());
  }
  return f;
}

std::vector<Shear> shear_decomposition(const Matrix<Rational>& g) {
  if (g.n() != 2) throw Error(ErrorCode::DimensionMismatch, "shear decomposition needs a 2x2 matrix");
  if (!(determinant(g) == Rational(1))) {
    throw Error(ErrorCode::NotUnimodular, to_string(g) + " does not have determinant 1");
  }
  const Rational& a = g(0, 0);
  const Rational& b = g(0, 1);
  const Rational& c = g(1, 0);
  const Rational& d = g(1, 1);
  std::vector<Shear> out;
  if (c.is_zero()) {
    if (a == Rational(1)) {
      if (!b.is_zero()) out.push_back({ShearSide::Upper, b});
      return out;
    }
    out.push_back({ShearSide::Lower, Rational(-1)});
    auto rest = shear_decomposition(Matrix<Rational>(lower_shear(Rational(1)) * g));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  Rational p = (a - Rational(1)) / c;
  Rational q = (d - Rational(1)) / c;
  if (!p.is_zero()) out.push_back({ShearSide::Upper, p});
  out.push_back({ShearSide::Lower, c});
  if (!q.is_zero()) out.push_back({ShearSide::Upper, q});
  return out;
}

std::vector<Matrix<QSqrt2>> signed_shear_spd_factors(const Shear& shear, std::string* trace) {
  const std::string abs_t = shear.t.abs().str();
  auto f = factor_shear_spd(shear.t.abs(), shear.side);
  const std::string spelled =
      shear.side == ShearSide::Upper ? "A(" + abs_t + ")B(" + abs_t + ")C" : "CB(" + abs_t + ")A(" + abs_t + ")";
  const std::string name = (shear.side == ShearSide::Upper ? "U(" : "L(") + shear.t.str() + ")";
  std::vector<Matrix<QSqrt2>> out;
  if (shear.t.sign() > 0) {
    if (trace) *trace = name + " = " + spelled;
    out.assign(f.begin(), f.end());
  } else {
    if (trace) *trace = name + " = (" + spelled + ")^-1";
    for (auto it = f.rbegin(); it != f.rend(); ++it) out.push_back(inverse(*it));
  }
  return out;
}

SpdSquareFactorization factor_sl2_spd_squares(const Matrix<Rational>& g, const TolerancePolicy& policy) {
  SpdSquareFactorization out;
  for (const auto& s : shear_decomposition(g)) {
    std::string line;
    auto f = signed_shear_spd_factors(s, &line);
    out.trace.push_back(line);
    out.factors.insert(out.factors.end(), f.begin(), f.end());
  }
  Matrix<QSqrt2> product = Matrix<QSqrt2>::identity(2);
  for (const auto& p : out.factors) product = product * p;
  if (!(product == to_qsqrt2(g))) {
    std::string trace;
    for (const auto& line : out.trace) trace += line + "; ";
    throw Error(ErrorCode::FactorizationFailed, "exact product mismatch: " + trace);
  }
  Matrix<Real> squares = Matrix<Real>::identity(2);
  for (const auto& p : out.factors) {
    out.roots.push_back(spd_sqrt(to_real(p), policy));
    squares = squares * out.roots.back() * out.roots.back();
  }
  out.residual = {frobenius_norm(Matrix<Real>(squares - to_real(g))), false};
  if (!out.residual.within(policy)) {
    throw Error(ErrorCode::FactorizationFailed, "square-root product residual " + out.residual.str());
  }
  return out;
}

TransvectionWord<SpdPoint<Real>> minus_identity_word(const TolerancePolicy& policy) {
  auto xp = build_generator(GeneratorKind::XPlus, Rational(1), policy).word;
  auto xm = build_generator(GeneratorKind::XMinus, Rational(1), policy).word;
  auto quarter_turn = xp * xm.inverse() * xp;
  return quarter_turn * quarter_turn;
}

TransvectionWord<SpdPoint<QSqrt2>> minus_identity_word_exact() {
  TolerancePolicy policy;
  auto xp = build_generator(GeneratorKind::XPlus, Rational(1), policy).exact_word;
  auto xm = build_generator(GeneratorKind::XMinus, Rational(1), policy).exact_word;
  auto quarter_turn = xp * xm.inverse() * xp;
  return quarter_turn * quarter_turn;
}

}  // namespace symspace
