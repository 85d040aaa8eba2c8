#include "vinwit/smith.hpp"

#include <utility>

namespace vinwit {

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(diagonal_form(i, i));
  return out;
}

namespace {

// Elementary operations applied to D and mirrored on the transforms.
struct Reducer {
  IntMatrix& d;
  SmithForm& s;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(i, c), d(j, c));
    for (std::size_t c = 0; c < s.u.cols(); ++c) std::swap(s.u(i, c), s.u(j, c));
    for (std::size_t r = 0; r < s.u_inv.rows(); ++r) std::swap(s.u_inv(r, i), s.u_inv(r, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d(r, i), d(r, j));
    for (std::size_t r = 0; r < s.v.rows(); ++r) std::swap(s.v(r, i), s.v(r, j));
    for (std::size_t c = 0; c < s.v_inv.cols(); ++c) std::swap(s.v_inv(i, c), s.v_inv(j, c));
  }
  // row i += k * row j
  void add_row(std::size_t i, std::size_t j, const Integer& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) += k * d(j, c);
    for (std::size_t c = 0; c < s.u.cols(); ++c) s.u(i, c) += k * s.u(j, c);
    for (std::size_t r = 0; r < s.u_inv.rows(); ++r) s.u_inv(r, j) -= k * s.u_inv(r, i);
  }
  // col i += k * col j
  void add_col(std::size_t i, std::size_t j, const Integer& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < d.rows(); ++r) d(r, i) += k * d(r, j);
    for (std::size_t r = 0; r < s.v.rows(); ++r) s.v(r, i) += k * s.v(r, j);
    for (std::size_t c = 0; c < s.v_inv.cols(); ++c) s.v_inv(j, c) -= k * s.v_inv(i, c);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) = -d(i, c);
    for (std::size_t c = 0; c < s.u.cols(); ++c) s.u(i, c) = -s.u(i, c);
    for (std::size_t r = 0; r < s.u_inv.rows(); ++r) s.u_inv(r, i) = -s.u_inv(r, i);
  }
};

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s;
  std::size_t rows = m.rows(), cols = m.cols();
  s.diagonal_form = m;
  s.u = s.u_inv = IntMatrix::identity(rows);
  s.v = s.v_inv = IntMatrix::identity(cols);
  IntMatrix& d = s.diagonal_form;
  Reducer op{d, s};

  std::size_t t = 0;
  for (; t < rows && t < cols; ++t) {
    for (;;) {
      // pivot: nonzero entry of least absolute value in the trailing block
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pr == rows || abs(d(i, j)) < abs(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) goto done;
      op.swap_rows(t, pr);
      op.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        op.add_row(i, t, -floor_div(d(i, t), d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        op.add_col(j, t, -floor_div(d(t, j), d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold a row with a non-multiple entry into row t
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            op.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) op.negate_row(t);
  }
done:
  s.rank = t;
  return s;
}

}  // namespace vinwit
