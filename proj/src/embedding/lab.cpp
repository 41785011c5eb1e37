#include "symspace/embedding/lab.hpp"

#include <algorithm>
#include <stdexcept>

namespace symspace {

namespace {

using ExactPoint = SpdPoint<QSqrt2>;
using ExactWord = TransvectionWord<ExactPoint>;

/// x+(t) or x-(t) over A(t), B(t), C without the Real square roots.
ExactWord exact_generator(GeneratorKind kind, const Rational& t) {
  LemmaMatrices m = lemma_matrices(t);
  auto a = ExactPoint::trusted(m.a), b = ExactPoint::trusted(m.b), c = ExactPoint::trusted(m.c);
  auto o = ExactPoint::trusted(Matrix<QSqrt2>::identity(2));
  return kind == GeneratorKind::XPlus ? ExactWord::product_of_elementary({a, b, c}, o)
                                      : ExactWord::product_of_elementary({c, b, a}, o);
}

/// Appends E_ij(s) rewritten through simple roots.
void expand_root(std::size_t i, std::size_t j, const Rational& s, std::vector<RootShear>& out) {
  if (s.is_zero()) return;
  if (i + 1 == j || j + 1 == i) {
    out.push_back({i, j, s});
    return;
  }
  // E_ij(s) = [E_ik(s), E_kj(1)] for any k outside {i, j}.
  const std::size_t k = i < j ? i + 1 : i - 1;
  out.push_back({i, k, s});
  expand_root(k, j, Rational(1), out);
  out.push_back({i, k, -s});
  expand_root(k, j, Rational(-1), out);
}

template <Scalar S>
SpdPoint<S> evaluate_nested(const SpdSpace<S>& space, const std::vector<Matrix<S>>& points) {
  const auto o = space.basepoint();
  auto value = o;
  for (std::size_t k = points.size(); k-- > 0;) {
    value = space.reflect(SpdPoint<S>::trusted(points[k]), value);
    if (k > 0) value = space.reflect(o, value);
  }
  return value;
}

RootEmbedding embedding_for(std::size_t n, const RootShear& shear) {
  return RootEmbedding(n, std::min(shear.i, shear.j), std::max(shear.i, shear.j));
}

Shear block_shear(const RootShear& shear) {
  return {shear.i < shear.j ? ShearSide::Upper : ShearSide::Lower, shear.s};
}

}  // namespace

RootEmbedding::RootEmbedding(std::size_t n, std::size_t i, std::size_t j) : n_(n), i_(i), j_(j) {
  if (!(i < j && j < n)) {
    throw Error(ErrorCode::DimensionMismatch, "root embedding needs i < j < n, got (" + std::to_string(i) + ", " +
                                                  std::to_string(j) + ") in dimension " + std::to_string(n));
  }
}

std::string RootEmbedding::name() const {
  return "H(" + std::to_string(i_) + "," + std::to_string(j_) + ")";
}

CentralExtensionReport demo_sl3_central_extension(const TolerancePolicy& policy, std::uint64_t seed,
                                                  std::size_t count) {
  const RootEmbedding corner(3, 0, 1);
  EmbeddedSubspace<Real> sub(corner, policy, seed);
  auto w = minus_identity_word(policy).map([&](const SpdPoint<Real>& p) { return corner(p); });
  auto w_exact = minus_identity_word_exact().map([&](const ExactPoint& p) { return corner(p); });

  CentralExtensionReport r;
  r.witness_matrix = action_matrix(w_exact, 3);
  r.witness_is_expected = r.witness_matrix == Matrix<QSqrt2>::diagonal({QSqrt2(-1), QSqrt2(-1), QSqrt2(1)});
  r.reflection_count = w.reflection_count();
  r.kernel = check_central_kernel(sub, w, seed, count, policy);

  SpdSpace<QSqrt2> exact(3);
  auto embedded = ExactPoint::trusted(corner(to_qsqrt2(Matrix<Rational>{{2, 1}, {1, 1}})));
  r.embedded_example_fixed = word_act(exact, w_exact, embedded) == embedded;

  r.analytic_point = to_qsqrt2(Matrix<Rational>{{2, 0, 1}, {0, 1, 0}, {1, 0, 1}});
  r.analytic_image = word_act(exact, w_exact, ExactPoint::trusted(r.analytic_point)).matrix();
  r.analytic_image_exact = r.analytic_image == to_qsqrt2(Matrix<Rational>{{2, 0, -1}, {0, 1, 0}, {-1, 0, 1}});

  const auto& ambient = sub.ambient();
  auto q = SpdPoint<Real>::trusted(to_real(r.analytic_point));
  r.analytic_distance = ambient.distance(word_act(ambient, w, q), q).value;
  r.analytic_distance_error = abs(r.analytic_distance - sqrt(Real(8)));

  r.max_sampled_displacement = Real(0);
  for (const auto& y : ambient.sample(seed + 3, count)) {
    r.max_sampled_displacement = max(r.max_sampled_displacement, ambient.distance(word_act(ambient, w, y), y).value);
  }
  const Real threshold = Real::parse("0.1");
  r.nontrivial = r.analytic_distance >= threshold || r.max_sampled_displacement >= threshold;
  return r;
}

std::vector<RootShear> root_shear_decomposition(const Matrix<Rational>& g) {
  const std::size_t n = g.n();
  if (!(determinant(g) == Rational(1))) {
    throw Error(ErrorCode::NotUnimodular, to_string(g) + " does not have determinant 1");
  }
  // Row operations row_i += s row_j, i.e. left multiplication by E_ij(s),
  // reducing g to the identity.
  Matrix<Rational> a = g;
  std::vector<RootShear> ops;
  auto apply = [&](std::size_t i, std::size_t j, const Rational& s) {
    if (s.is_zero()) return;
    for (std::size_t c = 0; c < n; ++c) a(i, c) = a(i, c) + s * a(j, c);
    ops.push_back({i, j, s});
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (!(a(k, k) == Rational(1))) {
      std::size_t r = k + 1;
      while (r < n && a(r, k).is_zero()) ++r;
      if (r == n) {
        if (k + 1 == n) throw Error(ErrorCode::FactorizationFailed, "row reduction left a non-unit pivot");
        apply(k + 1, k, Rational(1));
        r = k + 1;
      }
      apply(k, r, (Rational(1) - a(k, k)) / a(r, k));
    }
    for (std::size_t r = k + 1; r < n; ++r) apply(r, k, -a(r, k));
  }
  for (std::size_t k = n; k-- > 1;) {
    for (std::size_t r = 0; r < k; ++r) apply(r, k, -a(r, k));
  }
  // E_K ... E_1 g = I, so g = E_1^{-1} ... E_K^{-1}.
  std::vector<RootShear> out;
  for (const auto& op : ops) expand_root(op.i, op.j, -op.s, out);

  Matrix<Rational> product = Matrix<Rational>::identity(n);
  for (const auto& s : out) product = product * s.matrix(n);
  if (!(product == g)) throw Error(ErrorCode::FactorizationFailed, "root shears do not multiply to " + to_string(g));
  return out;
}

ExactWord root_shear_word_exact(std::size_t n, const RootShear& shear) {
  const RootEmbedding root = embedding_for(n, shear);
  const GeneratorKind kind = shear.i < shear.j ? GeneratorKind::XPlus : GeneratorKind::XMinus;
  ExactWord w = exact_generator(kind, shear.s.abs());
  if (shear.s.sign() < 0) w = w.inverse();
  return w.map([&](const ExactPoint& p) { return root(p); });
}

std::string nested_expression(std::size_t m) {
  if (m == 0) return "o";
  std::string out = "h" + std::to_string(m) + ".o";
  for (std::size_t k = m - 1; k >= 1; --k) out = "h" + std::to_string(k) + ".(o.(" + out + "))";
  return out;
}

PointFactorization point_factorization(const Matrix<Rational>& x, const TolerancePolicy& policy) {
  const std::size_t n = x.n();
  if (!(determinant(x) == Rational(1))) {
    throw Error(ErrorCode::NotUnimodular, to_string(x) + " does not have determinant 1");
  }
  PointFactorization out;
  out.target = x;
  if (n == 2) {
    auto f = factor_sl2_spd_squares(x, policy);
    out.factors = std::move(f.factors);
    out.roots = std::move(f.roots);
    out.sign = f.sign;
  } else {
    out.shears = root_shear_decomposition(x);
    for (const auto& s : out.shears) {
      const RootEmbedding root = embedding_for(n, s);
      for (const auto& f : signed_shear_spd_factors(block_shear(s))) {
        out.factors.push_back(root(f));
        out.roots.push_back(root(spd_sqrt(to_real(f), policy)));
      }
    }
  }
  Matrix<QSqrt2> product = Matrix<QSqrt2>::identity(n);
  for (const auto& f : out.factors) product = product * f;
  if (!(product == to_qsqrt2(x))) {
    throw Error(ErrorCode::FactorizationFailed, "SPD factors do not multiply to " + to_string(x));
  }
  out.expression = nested_expression(out.factors.size());

  const Matrix<Rational> canonical = x * x.transpose();
  SpdSpace<QSqrt2> exact(n, policy);
  out.exact_residual = exact.distance(evaluate_nested(exact, out.factors), ExactPoint::trusted(to_qsqrt2(canonical)));

  SpdSpace<Real> space(n, policy);
  std::vector<Matrix<Real>> points;
  for (const auto& h : out.roots) points.push_back(h * h.transpose());
  out.residual = space.distance(evaluate_nested(space, points), SpdPoint<Real>::trusted(to_real(canonical)));

  if (!out.exact_residual.is_exact_zero() || !out.residual.within(policy)) {
    throw Error(ErrorCode::FactorizationFailed, "nested expression for " + to_string(x) + " misses by " +
                                                    out.residual.str() + " (exact: " + out.exact_residual.str() + ")");
  }
  return out;
}

PerfectnessReport check_perfectness(std::size_t n, const std::vector<Rational>& t_values, std::uint64_t seed,
                                    std::size_t count, const TolerancePolicy& policy) {
  if (n < 2) throw Error(ErrorCode::DimensionMismatch, "perfectness needs n >= 2");
  PerfectnessReport report;
  report.n = n;
  SpdSpace<Real> ambient(n, policy);
  const ReflectionWord<SpdPoint<Real>> so({ambient.basepoint()});

  for (std::size_t k = 0; k + 1 < n; ++k) {
    const RootEmbedding root(n, k, k + 1);
    auto lift = [&](const TransvectionWord<SpdPoint<Real>>& w) {
      return w.map([&](const SpdPoint<Real>& p) { return root(p); });
    };
    const auto trc = lift(tr_c_word(policy));
    for (const auto& t : t_values) {
      const Rational half = t / Rational(2);
      const auto xp = lift(build_generator(GeneratorKind::XPlus, t, policy, seed).word);
      const auto xp_half = lift(build_generator(GeneratorKind::XPlus, half, policy, seed).word);
      const auto xm = lift(build_generator(GeneratorKind::XMinus, t, policy, seed).word);
      const auto xm_half = lift(build_generator(GeneratorKind::XMinus, half, policy, seed).word);

      PerfectnessCase c;
      c.root = root.name();
      c.t = t;
      c.upper = words_equal_as_actions(ambient, commutator(trc, xp), xp_half * xp.inverse(), seed, count, policy);
      c.lower = words_equal_as_actions(ambient, commutator(xm, trc.inverse()), xm * xm_half.inverse(), seed, count,
                                       policy);
      c.sigma_upper = words_equal_as_actions(ambient, so * xp.reflections() * so, xm.inverse().reflections(), seed,
                                             count, policy);
      c.sigma_lower = words_equal_as_actions(ambient, so * xm.reflections() * so, xp.inverse().reflections(), seed,
                                             count, policy);
      report.cases.push_back(std::move(c));
    }
  }

  if (n >= 3) {
    // tr_y = phi * (sigma_o phi^{-1} sigma_o) when phi.o = y, and conjugating a
    // root-subspace letter p by sigma_o gives the root-subspace letter p^{-1}.
    const auto o = ExactPoint::trusted(Matrix<QSqrt2>::identity(n));
    for (const auto& g : CartanGroupModel(n).sample(seed + 7, count)) {
      const auto shears = root_shear_decomposition(g);
      ExactWord phi;
      for (const auto& s : shears) phi = phi * root_shear_word_exact(n, s);
      const auto mirrored = phi.inverse().map([](const ExactPoint& p) { return ExactPoint::trusted(inverse(p.matrix())); });
      const ExactWord psi = phi * mirrored;
      const auto y = ExactPoint::trusted(to_qsqrt2(Matrix<Rational>(g * g.transpose())));
      const bool ok = action_matrix(phi, n) == to_qsqrt2(g) &&
                      action_matrix(psi, n) == action_matrix(ExactWord::elementary(y, o), n);
      ++report.generation.checked;
      if (!ok) ++report.generation.failures;
      report.generation.max_root_words = std::max(report.generation.max_root_words, shears.size());
    }
  }
  return report;
}

CoconeReport cocone_check(const std::string& diagram, std::uint64_t seed, std::size_t count,
                          const TolerancePolicy& policy) {
  if (diagram != "A2") {
    throw Error(ErrorCode::DiagramUnsupported, "diagram '" + diagram + "' is not supported (only A2)");
  }
  const CartanGroupModel sl2(2), sl3(3);
  const std::vector<RootEmbedding> roots{RootEmbedding(3, 0, 1), RootEmbedding(3, 1, 2)};

  CoconeReport r;
  r.diagram = diagram;
  // The rank-2 space of A2 is SL_3/SO(3) itself; it includes into X by the identity.
  auto to_x = induce_morphism<Rational>(sl3, sl3, [](const Matrix<Rational>& g) { return g; }, seed, policy);
  const SpdSpace<Rational> x_space(3, policy);
  const SpdSpace<Rational> h_space(2, policy);
  r.basepoints_preserved = to_x(x_space.basepoint()) == x_space.basepoint();
  r.commute_residual = Residual::exact_zero();

  for (const auto& root : roots) {
    r.nodes.push_back(root.name());
    auto phi = [root](const Matrix<Rational>& g) { return root(g); };
    auto direct = induce_morphism<Rational>(sl2, sl3, phi, seed, policy);
    auto to_rank2 = induce_morphism<Rational>(sl2, sl3, phi, seed, policy);
    r.basepoints_preserved = r.basepoints_preserved && direct(h_space.basepoint()) == x_space.basepoint() &&
                             to_rank2(h_space.basepoint()) == x_space.basepoint();
    for (const auto& y : h_space.sample(seed, count)) {
      r.commute_residual = worst(r.commute_residual, x_space.distance(direct(y), to_x(to_rank2(y))));
      ++r.commute_samples;
    }
  }
  r.nodes.push_back("SL3");

  Rng rng(seed + 11);
  r.generation_residual = Residual{Real(0), false};
  for (std::size_t k = 0; k < count; ++k) {
    auto f = point_factorization(random_bounded_sl(3, rng, Rational(4)), policy);
    r.generation_residual = worst(r.generation_residual, f.residual);
    ++r.generation_samples;
  }
  return r;
}

}  // namespace symspace
