#include <doctest.h>

#include <climits>
#include <random>

#include "knotforge/checked_int.hpp"
#include "knotforge/errors.hpp"
#include "knotforge/int_matrix.hpp"
#include "knotforge/smith.hpp"
#include "oracles.hpp"

using knotforge::IntMatrix;
using knotforge::SmithNormalForm;

namespace {

// Full contract of a Smith form, verified against independent oracles.
void check_snf(const IntMatrix& a) {
  const SmithNormalForm snf = smith_normal_form(a);

  CHECK(oracles::triple_product_equals(snf.u, a, snf.v, snf.d));
  CHECK(oracles::is_unimodular(snf.u));
  CHECK(oracles::is_unimodular(snf.v));

  const int steps = std::min(a.rows(), a.cols());
  for (int i = 0; i < steps; ++i) {
    CHECK(snf.d.at(i, i) >= 0);
    for (int j = 0; j < snf.d.cols(); ++j)
      if (j != i) CHECK(snf.d.at(i, j) == 0);
  }
  for (int i = 0; i + 1 < steps; ++i) {
    if (snf.d.at(i + 1, i + 1) != 0) {
      REQUIRE(snf.d.at(i, i) != 0);  // nonzero entries come first
      CHECK(snf.d.at(i + 1, i + 1) % snf.d.at(i, i) == 0);
    }
  }

  // Determinantal divisors: the product of the first k diagonal entries
  // equals the gcd of all k x k minors.
  std::int64_t product = 1;
  for (int k = 1; k <= steps; ++k) {
    product *= snf.d.at(k - 1, k - 1);
    CHECK(product == oracles::gcd_of_minors(a, k));
  }
}

}  // namespace

TEST_CASE("matrix basics") {
  const IntMatrix id = IntMatrix::identity(3);
  CHECK(id.at(0, 0) == 1);
  CHECK(id.at(0, 1) == 0);
  CHECK(id * id == id);
  CHECK(IntMatrix(2, 3, {1, 2, 3, 4, 5, 6}).transposed() == IntMatrix(3, 2, {1, 4, 2, 5, 3, 6}));
  CHECK(IntMatrix(2, 2).is_zero());
  CHECK(IntMatrix(2, 3, {0, -1, 1, 1, 0, -1}).to_string() == "[[0, -1, 1], [1, 0, -1]]");
  CHECK_THROWS_AS(IntMatrix(2, 2, {1}), knotforge::InvalidArgument);
  CHECK_THROWS_AS(IntMatrix(2, 2) * IntMatrix(3, 3), knotforge::InvalidArgument);
  CHECK_THROWS_AS(IntMatrix(2, 2).at(2, 0), knotforge::IndexOutOfRange);
}

TEST_CASE("checked arithmetic fails loudly instead of wrapping") {
  CHECK(knotforge::checked_add(2, 3) == 5);
  CHECK_THROWS_AS(knotforge::checked_add(INT64_MAX, 1), knotforge::ArithmeticOverflow);
  CHECK_THROWS_AS(knotforge::checked_mul(INT64_MAX, 2), knotforge::ArithmeticOverflow);
  CHECK_THROWS_AS(knotforge::checked_neg(INT64_MIN), knotforge::ArithmeticOverflow);
  CHECK_THROWS_AS(knotforge::checked_div(INT64_MIN, -1), knotforge::ArithmeticOverflow);
  CHECK(knotforge::checked_rem(INT64_MIN, -1) == 0);

  const IntMatrix huge(1, 1, {INT64_MAX});
  const IntMatrix two(1, 1, {2});
  CHECK_THROWS_AS(huge * two, knotforge::ArithmeticOverflow);
}

TEST_CASE("smith form of an identity is itself") {
  const SmithNormalForm snf = smith_normal_form(IntMatrix::identity(2));
  CHECK(snf.d == IntMatrix::identity(2));
  CHECK(snf.rank == 2);
}

TEST_CASE("smith form of the trefoil boundary matrix") {
  const IntMatrix a(2, 3, {0, -1, 1, 1, 0, -1});
  // Oracle: gcd of 1x1 minors is 1 and gcd of 2x2 minors is 1, so the
  // invariant factors are 1, 1.
  CHECK(oracles::gcd_of_minors(a, 1) == 1);
  CHECK(oracles::gcd_of_minors(a, 2) == 1);
  const SmithNormalForm snf = smith_normal_form(a);
  CHECK(snf.rank == 2);
  CHECK(snf.d.at(0, 0) == 1);
  CHECK(snf.d.at(1, 1) == 1);
  check_snf(a);
}

TEST_CASE("smith form with nontrivial invariant factors") {
  const IntMatrix a(2, 2, {2, 4, 6, 8});
  // Oracle: gcd of the entries is 2 and |det| = 8, so the factors are 2, 4.
  CHECK(oracles::gcd_of_minors(a, 1) == 2);
  CHECK(oracles::gcd_of_minors(a, 2) == 8);
  const SmithNormalForm snf = smith_normal_form(a);
  CHECK(snf.d.at(0, 0) == 2);
  CHECK(snf.d.at(1, 1) == 4);
  CHECK(snf.rank == 2);
  CHECK(knotforge::invariant_factors(a) == std::vector<std::int64_t>{2, 4});
  check_snf(a);
}

TEST_CASE("smith form of degenerate shapes") {
  CHECK(smith_normal_form(IntMatrix(0, 0)).rank == 0);
  CHECK(smith_normal_form(IntMatrix(0, 3)).rank == 0);
  CHECK(smith_normal_form(IntMatrix(3, 0)).rank == 0);
  CHECK(smith_normal_form(IntMatrix(2, 2)).rank == 0);
  CHECK(knotforge::matrix_rank(IntMatrix(4, 5)) == 0);
}

TEST_CASE("smith form is deterministic") {
  const IntMatrix a(3, 3, {3, 1, -4, 2, -3, 1, -4, 4, 0});
  const SmithNormalForm first = smith_normal_form(a);
  const SmithNormalForm second = smith_normal_form(a);
  CHECK(first.d == second.d);
  CHECK(first.u == second.u);
  CHECK(first.v == second.v);
}

TEST_CASE("smith form contract on random matrices") {
  std::mt19937 rng(424243);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 300; ++trial) check_snf(oracles::random_matrix(rng, dim(rng), dim(rng), 9));
}
