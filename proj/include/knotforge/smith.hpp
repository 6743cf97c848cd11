#pragma once

#include <cstdint>
#include <vector>

#include "knotforge/int_matrix.hpp"

namespace knotforge {

// Smith normal form of an integer matrix A: unimodular U, V with
// U * A * V = D, where D is diagonal with nonnegative entries, the nonzero
// entries come first, and each nonzero entry divides the next.
struct SmithNormalForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  int rank = 0;
};

// Deterministic: pivots are chosen as the smallest nonzero entry (by
// absolute value, ties in row-major order) of the remaining submatrix.
SmithNormalForm smith_normal_form(const IntMatrix& a);

// The nonzero diagonal of the Smith form, in divisibility order.
std::vector<std::int64_t> invariant_factors(const IntMatrix& a);

int matrix_rank(const IntMatrix& a);

}  // namespace knotforge
