#pragma once

#include "ahl/error.hpp"
#include "ahl/ring/bigint.hpp"
#include "ahl/ring/cyclotomic.hpp"

#include <vector>

namespace ahl {

template <class F>
using Matrix = std::vector<std::vector<F>>;

inline bool is_zero_value(const Rational& x) { return x == 0; }
inline bool is_zero_value(const CyclotomicValue& x) { return x.is_zero(); }

template <class F>
struct FieldTraits {
  static F zero() { return F(0); }
  static F one() { return F(1); }
};

template <>
struct FieldTraits<CyclotomicValue> {
  static CyclotomicValue zero() { return CyclotomicValue::rational(0); }
  static CyclotomicValue one() { return CyclotomicValue::rational(1); }
};

// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<int> row_reduce(Matrix<F>& m) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return pivots;
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && is_zero_value(m[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)])) ++p;
    if (p == rows) continue;
    std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(r)]);
    auto& pr = m[static_cast<std::size_t>(r)];
    const F inv = FieldTraits<F>::one() / pr[static_cast<std::size_t>(c)];
    for (auto& x : pr) x = x * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto& row = m[static_cast<std::size_t>(i)];
      const F f = row[static_cast<std::size_t>(c)];
      if (is_zero_value(f)) continue;
      for (int j = 0; j < cols; ++j) row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j)] - f * pr[static_cast<std::size_t>(j)];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
int rank(Matrix<F> m) {
  return static_cast<int>(row_reduce(m).size());
}

template <class F>
Matrix<F> transpose(const Matrix<F>& m) {
  if (m.empty()) return {};
  Matrix<F> t(m[0].size(), std::vector<F>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix<F> c(n, std::vector<F>(m, FieldTraits<F>::zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (is_zero_value(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] = c[i][j] + a[i][l] * b[l][j];
    }
  return c;
}

// Basis of the column space, as the columns of the returned matrix.
template <class F>
Matrix<F> column_space(const Matrix<F>& m) {
  Matrix<F> t = transpose(m);
  const auto pivots = row_reduce(t);
  Matrix<F> basis(t.empty() ? 0 : t[0].size(), std::vector<F>(pivots.size(), FieldTraits<F>::zero()));
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t i = 0; i < basis.size(); ++i) basis[i][j] = t[j][i];
  return basis;
}

// Solves b * x = y for x, where b has independent columns; throws if y is
// not in the column space.
template <class F>
Matrix<F> solve(const Matrix<F>& b, const Matrix<F>& y) {
  const std::size_t n = b.size(), k = b.empty() ? 0 : b[0].size(), m = y.empty() ? 0 : y[0].size();
  Matrix<F> aug(n, std::vector<F>(k + m, FieldTraits<F>::zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = b[i][j];
    for (std::size_t j = 0; j < m; ++j) aug[i][k + j] = y[i][j];
  }
  const auto pivots = row_reduce(aug);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= static_cast<int>(k)) throw Error("solve: right-hand side outside the column space");
  }
  if (pivots.size() != k) throw Error("solve: dependent columns");
  Matrix<F> x(k, std::vector<F>(m, FieldTraits<F>::zero()));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < m; ++j) x[r][j] = aug[r][k + j];
  return x;
}

}  // namespace ahl
