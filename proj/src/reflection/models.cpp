#include "symspace/reflection/models.hpp"

namespace symspace {

std::vector<Rational> GeodesicLine::sample(std::uint64_t seed, std::size_t count) const {
  Rng rng(seed);
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_line_rational(rng));
  return out;
}

}  // namespace symspace
