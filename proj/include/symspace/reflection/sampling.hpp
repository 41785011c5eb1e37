#pragma once

#include <cstdint>
#include <random>

#include "symspace/numeric/matrix.hpp"

namespace symspace {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]. Written out so draws are identical across
/// standard library implementations.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Shear parameter k/8 with 0 < |k| <= 16.
Rational random_shear_parameter(Rng& rng);

/// Elementary matrix I + s E_ij (i != j).
Matrix<Rational> elementary_matrix(std::size_t n, std::size_t i, std::size_t j, const Rational& s);

/// Product of 1..6 random elementary shears in SL_n(Q).
Matrix<Rational> random_shear_product(std::size_t n, Rng& rng);

/// Random rational k/d with |k| <= 64, 1 <= d <= 16.
Rational random_line_rational(Rng& rng);

/// SL_n(Q) element with every entry in [-bound, bound], by rejection from
/// random shear products.
Matrix<Rational> random_bounded_sl(std::size_t n, Rng& rng, const Rational& bound);

}  // namespace symspace
