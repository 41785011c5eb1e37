#include <string>
#include <vector>

#include "symspace/numeric/matrix.hpp"

namespace symspace {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

Matrix<Rational> parse_rational_matrix(std::string_view text) {
  auto rows = split(text, ';');
  const std::size_t n = rows.size();
  Matrix<Rational> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto entries = split(rows[i], ',');
    if (entries.size() != n) {
      throw Error(ErrorCode::ParseError, "matrix \"" + std::string(text) + "\" is not square");
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational::parse(entries[j]);
  }
  return m;
}

}  // namespace symspace
