#pragma once

// Exact two-phase simplex over an ordered field, Bland's rule throughout.
//
//   maximize c^T x  subject to  A x <= b,  x >= 0
//
// The tableau layout follows the familiar dictionary form with an auxiliary
// column for phase one. Bland's rule makes termination unconditional, which
// matters because every comparison here is exact.

#include <optional>
#include <vector>

#include "vinwit/numfield.hpp"

namespace vinwit {

enum class LpStatus { optimal, infeasible, unbounded };

template <class T>
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  T value = T(0);
  std::vector<T> x;
};

template <class T>
class SimplexSolver {
 public:
  SimplexSolver(const std::vector<std::vector<T>>& a, const std::vector<T>& b, const std::vector<T>& c)
      : m_(b.size()), n_(c.size()), basis_(m_), nonbasis_(n_ + 1),
        d_(m_ + 2, std::vector<T>(n_ + 2, T(0))) {
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) d_[i][j] = a[i][j];
    for (std::size_t i = 0; i < m_; ++i) {
      basis_[i] = static_cast<long>(n_ + i);
      d_[i][n_] = T(-1);
      d_[i][n_ + 1] = b[i];
    }
    for (std::size_t j = 0; j < n_; ++j) {
      nonbasis_[j] = static_cast<long>(j);
      d_[m_][j] = -c[j];
    }
    nonbasis_[n_] = -1;
    d_[m_ + 1][n_] = T(1);
  }

  LpResult<T> solve() {
    LpResult<T> res;
    std::size_t r = 0;
    for (std::size_t i = 1; i < m_; ++i)
      if (sign_of(d_[i][n_ + 1] - d_[r][n_ + 1]) < 0) r = i;
    if (m_ > 0 && sign_of(d_[r][n_ + 1]) < 0) {
      pivot(r, n_);
      if (!run(1) || sign_of(d_[m_ + 1][n_ + 1]) < 0) {
        res.status = LpStatus::infeasible;
        return res;
      }
      for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] != -1) continue;
        std::optional<std::size_t> s;
        for (std::size_t j = 0; j <= n_; ++j)
          if (!is_zero(d_[i][j]) && (!s || nonbasis_[j] < nonbasis_[*s])) s = j;
        if (s) pivot(i, *s);
      }
    }
    if (!run(2)) {
      res.status = LpStatus::unbounded;
      return res;
    }
    res.status = LpStatus::optimal;
    res.x.assign(n_, T(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] >= 0 && basis_[i] < static_cast<long>(n_)) res.x[static_cast<std::size_t>(basis_[i])] = d_[i][n_ + 1];
    res.value = d_[m_][n_ + 1];
    return res;
  }

 private:
  void pivot(std::size_t r, std::size_t s) {
    T inv = T(1) / d_[r][s];
    for (std::size_t i = 0; i < m_ + 2; ++i) {
      if (i == r || is_zero(d_[i][s])) continue;
      T f = d_[i][s] * inv;
      for (std::size_t j = 0; j < n_ + 2; ++j)
        if (j != s && !is_zero(d_[r][j])) d_[i][j] -= d_[r][j] * f;
    }
    for (std::size_t j = 0; j < n_ + 2; ++j)
      if (j != s) d_[r][j] *= inv;
    for (std::size_t i = 0; i < m_ + 2; ++i)
      if (i != r) d_[i][s] *= -inv;
    d_[r][s] = inv;
    std::swap(basis_[r], nonbasis_[s]);
  }

  bool run(int phase) {
    std::size_t obj = phase == 1 ? m_ + 1 : m_;
    for (;;) {
      // Bland: entering variable is the lowest-index one with negative reduced cost.
      std::optional<std::size_t> s;
      for (std::size_t j = 0; j <= n_; ++j) {
        if (phase == 2 && nonbasis_[j] == -1) continue;
        if (sign_of(d_[obj][j]) < 0 && (!s || nonbasis_[j] < nonbasis_[*s])) s = j;
      }
      if (!s) return true;
      std::optional<std::size_t> r;
      T best = T(0);
      for (std::size_t i = 0; i < m_; ++i) {
        if (sign_of(d_[i][*s]) <= 0) continue;
        T ratio = d_[i][n_ + 1] / d_[i][*s];
        int cmp = r ? sign_of(ratio - best) : -1;
        if (!r || cmp < 0 || (cmp == 0 && basis_[i] < basis_[*r])) {
          r = i;
          best = ratio;
        }
      }
      if (!r) return false;
      pivot(*r, *s);
    }
  }

  std::size_t m_, n_;
  std::vector<long> basis_, nonbasis_;
  std::vector<std::vector<T>> d_;
};

template <class T>
LpResult<T> maximize(const std::vector<std::vector<T>>& a, const std::vector<T>& b, const std::vector<T>& c) {
  return SimplexSolver<T>(a, b, c).solve();
}

}  // namespace vinwit
