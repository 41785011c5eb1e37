#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "symspace/errors.hpp"
#include "symspace/numeric/scalar.hpp"

namespace symspace {

/// Dense n x n matrix over one scalar kind, row-major.
template <Scalar T>
class Matrix {
 public:
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {
    if (n == 0) throw Error(ErrorCode::DimensionMismatch, "matrix dimension must be at least 1");
  }

  Matrix(std::initializer_list<std::initializer_list<T>> rows) : Matrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw Error(ErrorCode::DimensionMismatch, "matrix literal is not square");
      std::size_t j = 0;
      for (const auto& x : row) (*this)(i, j++) = x;
      ++i;
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t n() const { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  Matrix transpose() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    T s(0);
    for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
  }

  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    Matrix<U> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  Matrix& operator+=(const Matrix& rhs) {
    check_same(rhs);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs) {
    check_same(rhs);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, const T& s) { return lhs *= s; }
  friend Matrix operator*(const T& s, Matrix rhs) { return rhs *= s; }
  friend Matrix operator-(const Matrix& m) { return m * T(-1); }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    x.check_same(y);
    const std::size_t n = x.n_;
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        T s(0);
        for (std::size_t k = 0; k < n; ++k) s += x(i, k) * y(k, j);
        out(i, j) = std::move(s);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

 private:
  void check_same(const Matrix& other) const {
    if (other.n_ != n_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "dimension " + std::to_string(n_) + " vs " + std::to_string(other.n_));
    }
  }

  std::size_t n_;
  std::vector<T> a_;
};

/// Determinant by Gaussian elimination. Exact scalars pivot on the first
/// non-zero entry, Real pivots on the largest magnitude.
template <Scalar T>
T determinant(Matrix<T> m) {
  const std::size_t n = m.n();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    if constexpr (is_exact_v<T>) {
      while (pivot < n && is_zero(m(pivot, col))) ++pivot;
      if (pivot == n) return T(0);
    } else {
      for (std::size_t r = col + 1; r < n; ++r)
        if (abs(m(r, col)) > abs(m(pivot, col))) pivot = r;
      if (is_zero(m(pivot, col))) return T(0);
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      T f = m(r, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

/// Gauss-Jordan inverse. Throws Error(SingularMatrix).
template <Scalar T>
Matrix<T> inverse(Matrix<T> m) {
  const std::size_t n = m.n();
  if (n == 2) {
    T det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (is_zero(det)) throw Error(ErrorCode::SingularMatrix, "2x2 matrix is singular");
    T inv = T(1) / det;
    Matrix<T> out(2);
    out(0, 0) = m(1, 1) * inv;
    out(1, 1) = m(0, 0) * inv;
    out(0, 1) = -m(0, 1) * inv;
    out(1, 0) = -m(1, 0) * inv;
    return out;
  }
  Matrix<T> out = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    if constexpr (is_exact_v<T>) {
      while (pivot < n && is_zero(m(pivot, col))) ++pivot;
      if (pivot == n) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    } else {
      for (std::size_t r = col + 1; r < n; ++r)
        if (abs(m(r, col)) > abs(m(pivot, col))) pivot = r;
      if (is_zero(m(pivot, col))) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(out(pivot, j), out(col, j));
      }
    }
    T inv = T(1) / m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) *= inv;
      out(col, j) *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(m(r, col))) continue;
      T f = m(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(col, j);
        out(r, j) -= f * out(col, j);
      }
    }
  }
  return out;
}

/// Determinants of the k x k upper-left blocks, k = 1..n.
template <Scalar T>
std::vector<T> leading_minors(const Matrix<T>& m) {
  std::vector<T> minors;
  for (std::size_t k = 1; k <= m.n(); ++k) {
    Matrix<T> block(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) block(i, j) = m(i, j);
    minors.push_back(determinant(std::move(block)));
  }
  return minors;
}

template <Scalar T>
bool is_symmetric_exactly(const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = i + 1; j < m.n(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

template <Scalar T>
Matrix<Real> to_real(const Matrix<T>& m) {
  return m.map([](const T& x) { return Real(to_real(x)); });
}

template <Scalar T>
Matrix<T> from_rational(const Matrix<Rational>& m) {
  return m.map([](const Rational& x) { return from_rational<T>(x); });
}

inline Matrix<QSqrt2> to_qsqrt2(const Matrix<Rational>& m) { return from_rational<QSqrt2>(m); }

/// Frobenius norm of `m`, evaluated in Real. Exact scalars accumulate the sum
/// of squares exactly before the single square root.
template <Scalar T>
Real frobenius_norm(const Matrix<T>& m) {
  T s(0);
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) s += m(i, j) * m(i, j);
  return sqrt(to_real(s));
}

/// Entries joined as "[[a,b],[c,d]]".
template <Scalar T>
std::string to_string(const Matrix<T>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.n(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (j) s += ",";
      s += to_string(m(i, j));
    }
    s += "]";
  }
  return s + "]";
}

/// Parses "a,b;c,d" (rows separated by ';', entries by ','). Entries are
/// rationals "p" or "p/q". Throws Error(ParseError) on ragged input.
Matrix<Rational> parse_rational_matrix(std::string_view text);

}  // namespace symspace
