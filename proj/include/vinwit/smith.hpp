#pragma once

#include <vector>

#include "vinwit/matrix.hpp"

namespace vinwit {

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... (all >= 0).
struct SmithForm {
  IntMatrix diagonal_form;
  IntMatrix u, u_inv, v, v_inv;
  std::size_t rank = 0;
  /// The first `rank` diagonal entries (all positive).
  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace vinwit
