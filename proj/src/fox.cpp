#include "knotforge/fox.hpp"

#include <numeric>

#include "knotforge/checked_int.hpp"
#include "knotforge/errors.hpp"
#include "knotforge/smith.hpp"

namespace knotforge {

std::int64_t fox_colorings(const KnotDiagram& d, int n) {
  if (n < 2) throw InvalidArgument("coloring modulus must be at least 2");

  // Row per crossing: 2*(over) - under_in - under_out; accumulated, because
  // the arcs need not be distinct in reducible diagrams.
  IntMatrix matrix(static_cast<int>(d.crossings().size()), d.arc_count());
  for (std::size_t i = 0; i < d.crossings().size(); ++i) {
    const Crossing& c = d.crossings()[i];
    const int row = static_cast<int>(i);
    matrix.at(row, c.over - 1) += 2;
    matrix.at(row, c.under_in - 1) -= 1;
    matrix.at(row, c.under_out - 1) -= 1;
  }

  // Solutions of A x = 0 over Z/n, counted through the Smith form: each
  // invariant factor di contributes gcd(di, n) choices and each free column
  // contributes n.
  const SmithNormalForm snf = smith_normal_form(matrix);
  std::int64_t count = 1;
  for (int i = 0; i < snf.rank; ++i)
    count = checked_mul(count, std::gcd(snf.d.at(i, i), static_cast<std::int64_t>(n)));
  for (int i = snf.rank; i < d.arc_count(); ++i) count = checked_mul(count, n);
  return count;
}

}  // namespace knotforge
