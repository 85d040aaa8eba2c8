#pragma once

// Generic exact linear algebra over an ordered field (Rational or AlgNum).

#include <algorithm>
#include <vector>

#include "vinwit/matrix.hpp"

namespace vinwit {

/// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    T inv = T(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      T f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <class T>
std::vector<std::vector<T>> null_space(Matrix<T> m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Determinant over a field by Gaussian elimination.
template <class T>
T field_determinant(Matrix<T> m) {
  if (!m.is_square()) throw InvalidInput("determinant: matrix not square");
  std::size_t n = m.rows();
  T det = T(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    T inv = T(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Incremental echelon basis: answers "is v in the span so far?" and inserts.
template <class T>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  /// Reduces v against the basis; inserts and returns true if independent.
  bool insert(std::vector<T> v) {
    reduce(v);
    std::size_t lead = 0;
    while (lead < dim_ && is_zero(v[lead])) ++lead;
    if (lead == dim_) return false;
    T inv = T(1) / v[lead];
    for (auto& x : v) x *= inv;
    // Keep rows fully reduced against each other.
    for (auto& row : rows_) {
      if (is_zero(row.vec[lead])) continue;
      T f = row.vec[lead];
      for (std::size_t j = 0; j < dim_; ++j) row.vec[j] -= f * v[j];
    }
    rows_.push_back({lead, std::move(v)});
    return true;
  }

  bool contains(std::vector<T> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const T& x) { return is_zero(x); });
  }

  std::size_t size() const { return rows_.size(); }

 private:
  struct Row {
    std::size_t lead;
    std::vector<T> vec;
  };

  void reduce(std::vector<T>& v) const {
    for (const auto& row : rows_) {
      if (is_zero(v[row.lead])) continue;
      T f = v[row.lead];
      for (std::size_t j = 0; j < dim_; ++j)
        if (!is_zero(row.vec[j])) v[j] -= f * row.vec[j];
    }
  }

  std::size_t dim_;
  std::vector<Row> rows_;
};

}  // namespace vinwit
