#pragma once

// Exact dense linear algebra over any field type with exact equality
// (Rational, FieldElement).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coxeter/matrix.hpp"
#include "coxeter/polynomial.hpp"

namespace coxeter {

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
};

namespace detail {

template <typename T>
bool is_zero(const T& x) {
  return x == T(0);
}

}  // namespace detail

/// Reduced row echelon form in place; returns the pivot columns.
template <typename T>
std::vector<std::size_t> row_reduce(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && detail::is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || detail::is_zero(m(i, c))) continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <typename T>
T determinant(Matrix<T> m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && detail::is_zero(m(p, c))) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    const T inv = T(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (detail::is_zero(m(i, c))) continue;
      const T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

template <typename T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = T(1);
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrix();
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

/// Unique solution of a x = b; throws SingularMatrix otherwise.
template <typename T>
std::vector<T> solve(const Matrix<T>& a, const std::vector<T>& b) {
  const std::size_t n = a.rows();
  if (!a.is_square() || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
  Matrix<T> aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrix();
  return aug.col(n);
}

/// Basis of the null space; each basis vector has a 1 in one free column.
template <typename T>
std::vector<std::vector<T>> kernel(Matrix<T> a) {
  const auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(a.cols(), T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename T>
std::size_t rank(Matrix<T> a) {
  return row_reduce(a).size();
}

/// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recurrence:
/// M_0 = 0, c_n = 1, M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
template <typename T>
Polynomial<T> characteristic_polynomial(const Matrix<T>& a) {
  if (!a.is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  Matrix<T> m(n, n);
  const Matrix<T> id = Matrix<T>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<T> scaled = id;
    for (std::size_t i = 0; i < n; ++i) scaled(i, i) = c[n - k + 1];
    m = a * m + scaled;
    c[n - k] = -trace(a * m) / T(static_cast<long>(k));
  }
  return Polynomial<T>(std::move(c));
}

/// Matrix polynomial p(A).
template <typename T>
Matrix<T> evaluate_at(const Polynomial<T>& p, const Matrix<T>& a) {
  Matrix<T> acc(a.rows(), a.cols());
  const auto& cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc = acc * a;
    for (std::size_t i = 0; i < a.rows(); ++i) acc(i, i) = acc(i, i) + *it;
  }
  return acc;
}

}  // namespace coxeter
