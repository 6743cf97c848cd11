#include "knotforge/smith.hpp"

#include <algorithm>
#include <cstdlib>

#include "knotforge/checked_int.hpp"

namespace knotforge {

namespace {

std::uint64_t magnitude(std::int64_t x) {
  return x < 0 ? ~static_cast<std::uint64_t>(x) + 1 : static_cast<std::uint64_t>(x);
}

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

// row[dst] += factor * row[src]
void add_row_multiple(IntMatrix& m, int dst, int src, std::int64_t factor) {
  for (int c = 0; c < m.cols(); ++c)
    m.at(dst, c) = checked_add(m.at(dst, c), checked_mul(factor, m.at(src, c)));
}

void add_col_multiple(IntMatrix& m, int dst, int src, std::int64_t factor) {
  for (int r = 0; r < m.rows(); ++r)
    m.at(r, dst) = checked_add(m.at(r, dst), checked_mul(factor, m.at(r, src)));
}

void negate_row(IntMatrix& m, int r) {
  for (int c = 0; c < m.cols(); ++c) m.at(r, c) = checked_neg(m.at(r, c));
}

// Nearest-integer quotient; the remainder magnitude is at most |b| / 2,
// which keeps the unimodular transforms from blowing up.
std::int64_t nearest_quotient(std::int64_t a, std::int64_t b) {
  std::int64_t q = checked_div(a, b);
  const std::int64_t r = a - q * b;
  if (magnitude(r) * 2 > magnitude(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
  return q;
}

// Smallest nonzero entry (by absolute value, ties row-major) of d[s.., s..];
// false when the submatrix is zero.
bool find_pivot(const IntMatrix& d, int s, int& pr, int& pc) {
  pr = -1;
  pc = -1;
  std::uint64_t best = 0;
  for (int r = s; r < d.rows(); ++r)
    for (int c = s; c < d.cols(); ++c) {
      const std::int64_t e = d.at(r, c);
      if (e != 0 && (pr < 0 || magnitude(e) < best)) {
        best = magnitude(e);
        pr = r;
        pc = c;
      }
    }
  return pr >= 0;
}

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& a) {
  const int m = a.rows();
  const int n = a.cols();
  SmithNormalForm out{a, IntMatrix::identity(m), IntMatrix::identity(n), 0};
  IntMatrix& d = out.d;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;

  const int steps = std::min(m, n);
  int s = 0;
  while (s < steps) {
    int pr = 0;
    int pc = 0;
    if (!find_pivot(d, s, pr, pc)) break;  // remaining submatrix is zero
    swap_rows(d, s, pr);
    swap_rows(u, s, pr);
    swap_cols(d, s, pc);
    swap_cols(v, s, pc);
    const std::int64_t pivot = d.at(s, s);

    // One reduction pass down the column; remainders are at most half the
    // pivot, and the next iteration adopts the smallest of them as pivot.
    bool reduced = false;
    for (int r = s + 1; r < m; ++r) {
      if (d.at(r, s) == 0) continue;
      const std::int64_t q = nearest_quotient(d.at(r, s), pivot);
      add_row_multiple(d, r, s, checked_neg(q));
      add_row_multiple(u, r, s, checked_neg(q));
      if (d.at(r, s) != 0) reduced = true;
    }
    if (reduced) continue;

    for (int c = s + 1; c < n; ++c) {
      if (d.at(s, c) == 0) continue;
      const std::int64_t q = nearest_quotient(d.at(s, c), pivot);
      add_col_multiple(d, c, s, checked_neg(q));
      add_col_multiple(v, c, s, checked_neg(q));
      if (d.at(s, c) != 0) reduced = true;
    }
    if (reduced) continue;

    // Pivot is lone. Pull in a row holding an entry the pivot does not
    // divide, if any, and resume reducing; otherwise this step is done.
    int bad_row = -1;
    for (int r = s + 1; r < m && bad_row < 0; ++r)
      for (int c = s + 1; c < n; ++c)
        if (checked_rem(d.at(r, c), pivot) != 0) {
          bad_row = r;
          break;
        }
    if (bad_row >= 0) {
      add_row_multiple(d, s, bad_row, 1);
      add_row_multiple(u, s, bad_row, 1);
      continue;
    }

    ++s;
  }

  for (int i = 0; i < steps; ++i) {
    if (d.at(i, i) < 0) {
      negate_row(d, i);
      negate_row(u, i);
    }
    if (d.at(i, i) != 0) ++out.rank;
  }
  return out;
}

std::vector<std::int64_t> invariant_factors(const IntMatrix& a) {
  const SmithNormalForm snf = smith_normal_form(a);
  std::vector<std::int64_t> factors;
  factors.reserve(static_cast<std::size_t>(snf.rank));
  for (int i = 0; i < snf.rank; ++i) factors.push_back(snf.d.at(i, i));
  return factors;
}

int matrix_rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

}  // namespace knotforge
