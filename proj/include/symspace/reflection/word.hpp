#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "symspace/errors.hpp"
#include "symspace/reflection/models.hpp"

namespace symspace {

/// sigma_{p1} o sigma_{p2} o ... o sigma_{pk}; acts right to left. The
/// inverse reverses the letters since every sigma is an involution.
template <class Point>
class ReflectionWord {
 public:
  ReflectionWord() = default;
  explicit ReflectionWord(std::vector<Point> letters) : letters_(std::move(letters)) {}

  const std::vector<Point>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  ReflectionWord inverse() const {
    std::vector<Point> rev(letters_.rbegin(), letters_.rend());
    return ReflectionWord(std::move(rev));
  }

  /// Composition: (a * b) acts as a after b.
  friend ReflectionWord operator*(const ReflectionWord& a, const ReflectionWord& b) {
    std::vector<Point> out = a.letters_;
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return ReflectionWord(std::move(out));
  }

  template <class F>
  auto map(F&& f) const {
    using Q = std::decay_t<decltype(f(std::declval<const Point&>()))>;
    std::vector<Q> out;
    out.reserve(letters_.size());
    for (const auto& p : letters_) out.push_back(f(p));
    return ReflectionWord<Q>(std::move(out));
  }

 private:
  std::vector<Point> letters_;
};

/// Even-length reflection word, i.e. an element of Trans(X).
///
/// Any such word sigma_{p1} sigma_{p2} ... factors as
/// tr_{p1} tr_{p2}^{-1} tr_{p3} tr_{p4}^{-1} ... with tr_x = sigma_x sigma_o,
/// by inserting sigma_o sigma_o between consecutive letters.
template <class Point>
class TransvectionWord {
 public:
  TransvectionWord() = default;

  /// Throws Error(OddWordLength).
  explicit TransvectionWord(ReflectionWord<Point> word) : word_(std::move(word)) {
    if (word_.size() % 2 != 0) {
      throw Error(ErrorCode::OddWordLength, "transvection word needs an even number of reflections");
    }
  }

  /// tr_x = sigma_x o sigma_o.
  static TransvectionWord elementary(const Point& x, const Point& o) {
    return TransvectionWord(ReflectionWord<Point>({x, o}));
  }

  /// tr_{x1} o tr_{x2} o ... o tr_{xk}.
  static TransvectionWord product_of_elementary(const std::vector<Point>& xs, const Point& o) {
    std::vector<Point> letters;
    letters.reserve(2 * xs.size());
    for (const auto& x : xs) {
      letters.push_back(x);
      letters.push_back(o);
    }
    return TransvectionWord(ReflectionWord<Point>(std::move(letters)));
  }

  const ReflectionWord<Point>& reflections() const { return word_; }
  std::size_t reflection_count() const { return word_.size(); }

  /// Elementary factors (x, +1 | -1) in the order they compose.
  std::vector<std::pair<Point, int>> elementary_factors() const {
    std::vector<std::pair<Point, int>> out;
    const auto& l = word_.letters();
    for (std::size_t k = 0; k < l.size(); ++k) out.emplace_back(l[k], k % 2 == 0 ? 1 : -1);
    return out;
  }

  TransvectionWord inverse() const { return TransvectionWord(word_.inverse()); }

  friend TransvectionWord operator*(const TransvectionWord& a, const TransvectionWord& b) {
    return TransvectionWord(a.word_ * b.word_);
  }

  template <class F>
  auto map(F&& f) const {
    auto mapped = word_.map(std::forward<F>(f));
    using Q = typename std::decay_t<decltype(mapped.letters())>::value_type;
    return TransvectionWord<Q>(std::move(mapped));
  }

 private:
  ReflectionWord<Point> word_;
};

/// [a, b] = a b a^{-1} b^{-1}.
template <class Point>
TransvectionWord<Point> commutator(const TransvectionWord<Point>& a, const TransvectionWord<Point>& b) {
  return a * b * a.inverse() * b.inverse();
}

/// h g h^{-1}.
template <class Point>
TransvectionWord<Point> conjugate(const TransvectionWord<Point>& h, const TransvectionWord<Point>& g) {
  return h * g * h.inverse();
}

/// sigma_x o g o sigma_x, again a transvection word.
template <class Point>
TransvectionWord<Point> conjugate_by_reflection(const Point& x, const TransvectionWord<Point>& g) {
  ReflectionWord<Point> s({x});
  return TransvectionWord<Point>(s * g.reflections() * s);
}

/// Matrix through which a word acts on SPD coordinates. An even word sends
/// Q to M Q M^T; an odd word sends Q to M Q^{-1} M^T.
template <Scalar S>
struct WordActionMatrix {
  Matrix<S> matrix;
  bool inverts = false;
};

template <Scalar S>
WordActionMatrix<S> action_matrix(const ReflectionWord<SpdPoint<S>>& word, std::size_t n) {
  Matrix<S> m = Matrix<S>::identity(n);
  const auto& l = word.letters();
  for (std::size_t k = 0; k < l.size(); ++k) {
    m = (k % 2 == 0) ? Matrix<S>(m * l[k].matrix()) : Matrix<S>(m * inverse(l[k].matrix()));
  }
  return {std::move(m), l.size() % 2 == 1};
}

template <Scalar S>
Matrix<S> action_matrix(const TransvectionWord<SpdPoint<S>>& word, std::size_t n) {
  return action_matrix(word.reflections(), n).matrix;
}

}  // namespace symspace
