#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symspace/hyperbolic/battery.hpp"

namespace symspace {

/// SL_2 -> SL_n placing the 2x2 block at rows/columns (i, j), i < j.
/// Commutes with g -> (g^T)^{-1}; its image meets SO(n) in the embedded SO(2).
class RootEmbedding {
 public:
  RootEmbedding(std::size_t n, std::size_t i, std::size_t j);

  std::size_t n() const { return n_; }
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  std::string name() const;

  template <Scalar S>
  Matrix<S> operator()(const Matrix<S>& g) const {
    if (g.n() != 2) throw Error(ErrorCode::DimensionMismatch, "root embedding expects a 2x2 matrix");
    Matrix<S> out = Matrix<S>::identity(n_);
    out(i_, i_) = g(0, 0);
    out(i_, j_) = g(0, 1);
    out(j_, i_) = g(1, 0);
    out(j_, j_) = g(1, 1);
    return out;
  }

  template <Scalar S>
  SpdPoint<S> operator()(const SpdPoint<S>& p) const {
    return SpdPoint<S>::trusted((*this)(p.matrix()));
  }

 private:
  std::size_t n_;
  std::size_t i_;
  std::size_t j_;
};

/// The hyperbolic plane SL_2/SO(2) embedded in SL_n/SO(n) through a root
/// embedding. The inclusion is the coset map induced by the embedding and is
/// checked to be a morphism of reflection spaces on construction.
template <Scalar S>
class EmbeddedSubspace {
 public:
  EmbeddedSubspace(RootEmbedding root, const TolerancePolicy& policy = {}, std::uint64_t seed = 0)
      : root_(root),
        ambient_(root.n(), policy),
        subspace_(2, policy),
        inclusion_(induce_morphism<S>(
            CartanGroupModel(2), CartanGroupModel(root.n()), [root](const Matrix<S>& g) { return root(g); }, seed,
            policy)) {}

  const RootEmbedding& root() const { return root_; }
  const SpdSpace<S>& ambient() const { return ambient_; }
  const SpdSpace<S>& subspace() const { return subspace_; }
  const CosetMap<S>& inclusion() const { return inclusion_; }

  SpdPoint<S> include(const SpdPoint<S>& y) const { return inclusion_(y); }

  /// Points of the subspace, already included into the ambient space.
  std::vector<SpdPoint<S>> sample_included(std::uint64_t seed, std::size_t count) const {
    std::vector<SpdPoint<S>> out;
    for (const auto& y : subspace_.sample(seed, count)) out.push_back(include(y));
    return out;
  }

 private:
  RootEmbedding root_;
  SpdSpace<S> ambient_;
  SpdSpace<S> subspace_;
  CosetMap<S> inclusion_;
};

/// Product of `length` elementary transvections tr_{i(y)} with y sampled in
/// the subspace. Throws std::invalid_argument for length 0.
template <Scalar S>
TransvectionWord<SpdPoint<S>> restricted_transvection_sampler(const EmbeddedSubspace<S>& sub, std::uint64_t seed,
                                                              std::size_t length) {
  if (length == 0) throw std::invalid_argument("restricted transvection word needs length >= 1");
  return TransvectionWord<SpdPoint<S>>::product_of_elementary(sub.sample_included(seed, length),
                                                              sub.ambient().basepoint());
}

struct CentralKernelReport {
  std::size_t subspace_samples = 0;
  bool trivial_on_subspace = false;
  Residual triviality_residual;  ///< max distance(w.y, y) over included samples
  /// Centrality is only asserted for words that act trivially on the subspace.
  bool centrality_checked = false;
  bool central = false;
  Residual centrality_residual;  ///< max distance(w g.q, g w.q) over generators g and ambient q
  std::size_t generators = 0;

  bool in_central_kernel() const { return trivial_on_subspace && centrality_checked && central; }
};

/// If w acts trivially on the embedded subspace, checks that it commutes,
/// as ambient actions, with `count` sampled restricted generators tr_{i(y)}
/// on `ambient_samples` ambient points each.
template <Scalar S>
CentralKernelReport check_central_kernel(const EmbeddedSubspace<S>& sub, const TransvectionWord<SpdPoint<S>>& w,
                                         std::uint64_t seed, std::size_t count, const TolerancePolicy& policy,
                                         std::size_t ambient_samples = 10) {
  CentralKernelReport out;
  out.triviality_residual = Residual{Real(0), is_exact_v<S>};
  out.centrality_residual = Residual{Real(0), is_exact_v<S>};
  for (const auto& y : sub.sample_included(seed, count)) {
    out.triviality_residual = worst(out.triviality_residual, sub.ambient().distance(word_act(sub.ambient(), w, y), y));
    ++out.subspace_samples;
  }
  out.trivial_on_subspace = out.triviality_residual.within(policy);
  if (!out.trivial_on_subspace) return out;

  out.centrality_checked = true;
  const auto o = sub.ambient().basepoint();
  const auto gens = sub.sample_included(seed + 1, count);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    auto g = TransvectionWord<SpdPoint<S>>::elementary(gens[k], o);
    auto check = words_equal_as_actions(sub.ambient(), w * g, g * w, seed + 2 + k, ambient_samples, policy);
    out.centrality_residual = worst(out.centrality_residual, check.max_residual);
    ++out.generators;
  }
  out.central = out.centrality_residual.within(policy);
  return out;
}

/// A word that acts trivially on the hyperbolic plane in the upper-left
/// corner of SL_3/SO(3) but not on SL_3/SO(3), and is central in the
/// restricted transvection group.
struct CentralExtensionReport {
  Matrix<QSqrt2> witness_matrix{3};  ///< exact action matrix of the word
  bool witness_is_expected = false;  ///< == diag(-1, -1, 1)
  std::size_t reflection_count = 0;
  CentralKernelReport kernel;  ///< triviality on the subspace and centrality
  /// block-diag([[2,1],[1,1]], 1) is fixed exactly.
  bool embedded_example_fixed = false;
  /// Q = tau(I + E_13) = [[2,0,1],[0,1,0],[1,0,1]], moved to [[2,0,-1],[0,1,0],[-1,0,1]].
  Matrix<QSqrt2> analytic_point{3};
  Matrix<QSqrt2> analytic_image{3};
  bool analytic_image_exact = false;
  Real analytic_distance;        ///< Real evaluation, expected sqrt(8)
  Real analytic_distance_error;  ///< |analytic_distance - sqrt(8)|
  Real max_sampled_displacement;  ///< over ambient samples
  bool nontrivial = false;        ///< some point moves by >= 0.1

  bool pass(const TolerancePolicy& policy) const {
    return witness_is_expected && kernel.in_central_kernel() && embedded_example_fixed && analytic_image_exact &&
           analytic_distance_error <= policy.abs_tol && nontrivial;
  }
};

CentralExtensionReport demo_sl3_central_extension(const TolerancePolicy& policy, std::uint64_t seed = 0,
                                                  std::size_t count = 50);

/// Elementary matrix E_ij(s) = I + s e_i e_j^T for a simple root, |i - j| = 1.
struct RootShear {
  std::size_t i = 0;
  std::size_t j = 1;
  Rational s;
  Matrix<Rational> matrix(std::size_t n) const { return elementary_matrix(n, i, j, s); }
};

/// g in SL_n(Q) as a product of simple-root elementary matrices. Row
/// reduction gives elementary factors E_ij(s) for arbitrary i != j; the
/// non-adjacent ones are rewritten as commutators [E_ik(s), E_kj(1)].
/// Throws NotUnimodular.
std::vector<RootShear> root_shear_decomposition(const Matrix<Rational>& g);

/// Exact word over root subspaces acting by the elementary matrix: the
/// embedded x+(|s|) or x-(|s|), inverted when s < 0.
TransvectionWord<SpdPoint<QSqrt2>> root_shear_word_exact(std::size_t n, const RootShear& shear);

struct PointFactorization {
  Matrix<Rational> target{2};
  std::vector<RootShear> shears;         ///< product equals target (SL_3 and up)
  std::vector<Matrix<QSqrt2>> factors;   ///< tau(h_i) = h_i^2, exact, embedded
  std::vector<Matrix<Real>> roots;       ///< h_i
  int sign = 1;                          ///< product of tau(h_i) equals sign * target
  std::string expression;                ///< "h1.(o.(h2.(o.(h3.o))))"
  Residual exact_residual;               ///< nested expression evaluated in Q(sqrt2)
  Residual residual;                     ///< nested expression evaluated from the Real roots
};

/// xK = h_1.(o.(h_2.(o. ... (h_m.o)))) with x = tau(h_1)...tau(h_m). SL_2 uses
/// factor_sl2_spd_squares directly; larger n factor through simple-root
/// shears first. Evaluates the expression with the reflection map and
/// compares against the canonical point x x^T.
/// Throws NotUnimodular or FactorizationFailed.
PointFactorization point_factorization(const Matrix<Rational>& x, const TolerancePolicy& policy);

/// "o", "h1.o", "h1.(o.(h2.o))", ...
std::string nested_expression(std::size_t m);

struct PerfectnessCase {
  std::string root;  ///< root embedding name
  Rational t;
  ActionCheck upper;         ///< [tr_c, x+(t)] = x+(t/2) x+(t)^{-1}
  ActionCheck lower;         ///< [x-(t), tr_c^{-1}] = x-(t) x-(t/2)^{-1}
  ActionCheck sigma_upper;   ///< sigma_o x+(t) sigma_o = x-(t)^{-1}
  ActionCheck sigma_lower;   ///< sigma_o x-(t) sigma_o = x+(t)^{-1}

  bool holds() const { return upper.holds && lower.holds && sigma_upper.holds && sigma_lower.holds; }
};

struct GenerationReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::size_t max_root_words = 0;  ///< longest decomposition seen, in generator words

  bool holds() const { return failures == 0; }
};

struct PerfectnessReport {
  std::size_t n = 2;
  std::vector<PerfectnessCase> cases;
  GenerationReport generation;  ///< only for n >= 3

  bool all_hold() const {
    for (const auto& c : cases)
      if (!c.holds()) return false;
    return generation.holds();
  }
};

/// For each simple root of SL_n and each t, realizes x+(t/2) x+(t)^{-1} and
/// x-(t) x-(t/2)^{-1} as commutators in the ambient action, and checks
/// closure under conjugation by sigma_o. For n >= 3, also checks exactly that
/// sampled tr_y decompose as products of root-subspace words.
/// Throws ZeroParameter / NotPositiveDefinite for t <= 0.
PerfectnessReport check_perfectness(std::size_t n, const std::vector<Rational>& t_values, std::uint64_t seed,
                                    std::size_t count, const TolerancePolicy& policy);

struct CoconeReport {
  std::string diagram;
  std::vector<std::string> nodes;
  bool basepoints_preserved = false;
  std::size_t commute_samples = 0;
  Residual commute_residual;  ///< direct inclusion vs inclusion through the rank-2 space
  std::size_t generation_samples = 0;
  Residual generation_residual;  ///< worst point_factorization residual

  bool pass(const TolerancePolicy& policy) const {
    return basepoints_preserved && commute_residual.is_exact_zero() && generation_residual.within(policy);
  }
};

/// Cocone over the rank-1 subspaces of a rank-2 diagram. Only "A2" (SL_3 with
/// its two simple-root SL_2's) is supported; anything else throws
/// DiagramUnsupported. Only algebraic properties are checked.
CoconeReport cocone_check(const std::string& diagram, std::uint64_t seed, std::size_t count,
                          const TolerancePolicy& policy);

}  // namespace symspace
