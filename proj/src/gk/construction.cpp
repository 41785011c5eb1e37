#include "symspace/gk/construction.hpp"

namespace symspace {

std::vector<Matrix<Rational>> CartanGroupModel::sample(std::uint64_t seed, std::size_t count) const {
  Rng rng(seed);
  std::vector<Matrix<Rational>> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_shear_product(n_, rng));
  return out;
}

Matrix<Rational> cayley_rotation(const Matrix<Rational>& skew) {
  auto id = Matrix<Rational>::identity(skew.n());
  return (id - skew) * inverse(id + skew);
}

InvolutionLawReport check_involution_laws(const CartanGroupModel& model, std::uint64_t seed, std::size_t count) {
  InvolutionLawReport out;
  auto gs = model.sample(seed, 2 * count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto& g = gs[2 * k];
    const auto& h = gs[2 * k + 1];
    if (!(model.involution(model.involution(g)) == g)) out.involutive = false;
    if (!(model.involution(Matrix<Rational>(g * h)) == model.involution(g) * model.involution(h))) {
      out.automorphism = false;
    }
    ++out.checked;
  }
  return out;
}

Rs4CriterionReport check_rs4_criterion(const CartanGroupModel& model, std::uint64_t seed, std::size_t count) {
  Rs4CriterionReport out;
  const std::size_t n = model.n();
  auto record = [&](const Matrix<Rational>& g) {
    Matrix<Rational> t = twist(model, g);
    ++out.checked;
    if (model.in_fixed_subgroup(t)) {
      ++out.twists_in_k;
      if (!(t == Matrix<Rational>::identity(n))) ++out.violations;
    }
  };
  record(Matrix<Rational>::identity(n));
  Rng rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    Matrix<Rational> skew(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        skew(i, j) = random_shear_parameter(rng);
        skew(j, i) = -skew(i, j);
      }
    }
    record(cayley_rotation(skew));
  }
  for (const auto& g : model.sample(seed + 1, count)) record(g);
  return out;
}

}  // namespace symspace
