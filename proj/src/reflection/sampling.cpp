#include "symspace/reflection/sampling.hpp"

namespace symspace {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return lo + static_cast<std::int64_t>(draw % span);
}

Rational random_shear_parameter(Rng& rng) {
  std::int64_t k = uniform_int(rng, 1, 16);
  if (uniform_int(rng, 0, 1) == 1) k = -k;
  return Rational(k, 8);
}

Matrix<Rational> elementary_matrix(std::size_t n, std::size_t i, std::size_t j, const Rational& s) {
  Matrix<Rational> e = Matrix<Rational>::identity(n);
  e(i, j) = s;
  return e;
}

Matrix<Rational> random_shear_product(std::size_t n, Rng& rng) {
  Matrix<Rational> g = Matrix<Rational>::identity(n);
  if (n == 1) return g;
  const auto factors = uniform_int(rng, 1, 6);
  for (std::int64_t f = 0; f < factors; ++f) {
    auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(n) - 2));
    if (j >= i) ++j;
    g = g * elementary_matrix(n, i, j, random_shear_parameter(rng));
  }
  return g;
}

Rational random_line_rational(Rng& rng) {
  return Rational(uniform_int(rng, -64, 64), uniform_int(rng, 1, 16));
}

Matrix<Rational> random_bounded_sl(std::size_t n, Rng& rng, const Rational& bound) {
  while (true) {
    Matrix<Rational> g = random_shear_product(n, rng);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = g(i, j).abs() <= bound;
    if (ok) return g;
  }
}

}  // namespace symspace
