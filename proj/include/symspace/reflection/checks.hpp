#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symspace/reflection/models.hpp"
#include "symspace/reflection/word.hpp"

namespace symspace {

/// sigma_{p1}(sigma_{p2}(... sigma_{pk}(y))). The empty word is the identity.
template <SpaceModel M>
typename M::Point word_act(const M& model, const ReflectionWord<typename M::Point>& w, typename M::Point y) {
  const auto& l = w.letters();
  for (auto it = l.rbegin(); it != l.rend(); ++it) y = model.reflect(*it, y);
  return y;
}

template <SpaceModel M>
typename M::Point word_act(const M& model, const TransvectionWord<typename M::Point>& w, typename M::Point y) {
  return word_act(model, w.reflections(), std::move(y));
}

struct ActionCheck {
  bool holds = true;
  Residual max_residual;
  std::size_t samples = 0;
};

/// Compares two words by their action on `count` sampled points. This is
/// equality in Aut(X), not in any abstract presentation.
template <SpaceModel M>
ActionCheck words_equal_as_actions(const M& model, const ReflectionWord<typename M::Point>& w1,
                                   const ReflectionWord<typename M::Point>& w2, std::uint64_t seed,
                                   std::size_t count, const TolerancePolicy& policy) {
  ActionCheck out;
  for (const auto& y : model.sample(seed, count)) {
    Residual r = model.distance(word_act(model, w1, y), word_act(model, w2, y));
    out.max_residual = out.samples == 0 ? r : worst(out.max_residual, r);
    ++out.samples;
  }
  out.holds = out.max_residual.within(policy);
  return out;
}

template <SpaceModel M>
ActionCheck words_equal_as_actions(const M& model, const TransvectionWord<typename M::Point>& w1,
                                   const TransvectionWord<typename M::Point>& w2, std::uint64_t seed,
                                   std::size_t count, const TolerancePolicy& policy) {
  return words_equal_as_actions(model, w1.reflections(), w2.reflections(), seed, count, policy);
}

/// Compares the action of `w` with Q -> M Q M^T on sampled points.
template <Scalar S>
ActionCheck action_matches_matrix(const SpdSpace<S>& space, const ReflectionWord<SpdPoint<S>>& w, const Matrix<S>& m,
                                  std::uint64_t seed, std::size_t count, const TolerancePolicy& policy) {
  ActionCheck out;
  for (const auto& y : space.sample(seed, count)) {
    auto expected = SpdPoint<S>::trusted(m * y.matrix() * m.transpose());
    Residual r = space.distance(word_act(space, w, y), expected);
    out.max_residual = out.samples == 0 ? r : worst(out.max_residual, r);
    ++out.samples;
  }
  out.holds = out.max_residual.within(policy);
  return out;
}

/// alpha o sigma_y o alpha^{-1} == sigma_{alpha(y)} on sampled points.
template <SpaceModel M>
ActionCheck check_conjugation_formula(const M& model, const ReflectionWord<typename M::Point>& alpha,
                                      const typename M::Point& y, const TolerancePolicy& policy,
                                      std::uint64_t seed = 0, std::size_t count = 32) {
  using Word = ReflectionWord<typename M::Point>;
  Word lhs = alpha * Word({y}) * alpha.inverse();
  Word rhs({word_act(model, alpha, y)});
  return words_equal_as_actions(model, lhs, rhs, seed, count, policy);
}

struct AxiomResult {
  std::string axiom;
  bool pass = true;
  /// RS1-RS3: largest defect seen. RS4: smallest displacement |x.y - y|
  /// over sampled pairs with x != y (a sampled check can only falsify RS4).
  Residual residual;
  std::size_t checked = 0;
  std::size_t violations = 0;
};

struct AxiomReport {
  std::string model;
  std::vector<AxiomResult> axioms;

  bool all_pass() const {
    for (const auto& a : axioms)
      if (!a.pass) return false;
    return true;
  }
};

/// Samples `count` triples (x, y, z) and checks RS1 x.x = x, RS2
/// x.(x.y) = y, RS3 x.(y.z) = (x.y).(x.z), and RS4 contrapositively:
/// x != y must give x.y != y.
template <SpaceModel M>
AxiomReport check_axioms(const M& model, std::uint64_t seed, std::size_t count, const TolerancePolicy& policy) {
  auto pts = model.sample(seed, 3 * count);
  AxiomResult rs1, rs2, rs3, rs4;
  rs1.axiom = "RS1";
  rs2.axiom = "RS2";
  rs3.axiom = "RS3";
  rs4.axiom = "RS4";
  bool rs4_seen = false;
  auto record = [&](AxiomResult& a, const Residual& r) {
    a.residual = a.checked == 0 ? r : worst(a.residual, r);
    ++a.checked;
    if (!r.within(policy)) ++a.violations;
  };
  for (std::size_t k = 0; k < count; ++k) {
    const auto& x = pts[3 * k];
    const auto& y = pts[3 * k + 1];
    const auto& z = pts[3 * k + 2];
    record(rs1, model.distance(model.reflect(x, x), x));
    auto xy = model.reflect(x, y);
    record(rs2, model.distance(model.reflect(x, xy), y));
    record(rs3, model.distance(model.reflect(x, model.reflect(y, z)), model.reflect(xy, model.reflect(x, z))));
    if (!approx_equal(model, x, y, policy)) {
      Residual moved = model.distance(xy, y);
      if (!rs4_seen || moved.value < rs4.residual.value) rs4.residual = moved;
      rs4.residual.exact = moved.exact;
      rs4_seen = true;
      ++rs4.checked;
      if (moved.within(policy)) ++rs4.violations;
    }
  }
  for (auto* a : {&rs1, &rs2, &rs3, &rs4}) a->pass = a->violations == 0;
  return {model.name(), {rs1, rs2, rs3, rs4}};
}

struct StabilizerCentralizerReport {
  bool fixes_basepoint = false;
  Residual fix_residual;
  bool centralizes = false;
  Residual central_residual;

  /// Stab(o) = C(sigma_o): both sides agree for the tested word.
  bool consistent() const { return fixes_basepoint == centralizes; }
};

template <SpaceModel M>
StabilizerCentralizerReport check_stabilizer_centralizer(const M& model,
                                                        const TransvectionWord<typename M::Point>& w,
                                                        const TolerancePolicy& policy, std::uint64_t seed = 0,
                                                        std::size_t count = 32) {
  using Word = ReflectionWord<typename M::Point>;
  const auto o = model.basepoint();
  StabilizerCentralizerReport out;
  out.fix_residual = model.distance(word_act(model, w, o), o);
  out.fixes_basepoint = out.fix_residual.within(policy);
  Word so({o});
  auto check = words_equal_as_actions(model, w.reflections() * so, so * w.reflections(), seed, count, policy);
  out.central_residual = check.max_residual;
  out.centralizes = check.holds;
  return out;
}

}  // namespace symspace
