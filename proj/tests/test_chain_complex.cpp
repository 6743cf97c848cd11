#include <doctest.h>

#include <random>

#include "knotforge/chain_complex.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/errors.hpp"
#include "knotforge/knot_homology.hpp"
#include "knotforge/knot_table.hpp"
#include "knotforge/wirtinger.hpp"
#include "oracles.hpp"

using knotforge::AbelianGroup;
using knotforge::ChainComplex;
using knotforge::IntMatrix;
using knotforge::Presentation;
using knotforge::Word;

namespace {

Presentation trefoil_two_relator() {
  return Presentation(3, {Word{-1, 3, 1, -2}, Word{1, 2, -3, -2}});
}

}  // namespace

TEST_CASE("presentation complex shapes and boundaries") {
  const ChainComplex trefoil = presentation_complex(trefoil_two_relator());
  CHECK(trefoil.top_dimension() == 2);
  CHECK(trefoil.rank(0) == 1);
  CHECK(trefoil.rank(1) == 3);
  CHECK(trefoil.rank(2) == 2);
  CHECK(trefoil.boundary(1).is_zero());
  CHECK(trefoil.boundary(2) == IntMatrix(3, 2, {0, 1, -1, 0, 1, -1}));

  const ChainComplex half_turn = presentation_complex(Presentation(1, {Word{1, 1}}));
  CHECK(half_turn.rank(0) == 1);
  CHECK(half_turn.rank(1) == 1);
  CHECK(half_turn.rank(2) == 1);
  CHECK(half_turn.boundary(2) == IntMatrix(1, 1, {2}));

  const ChainComplex free3 = presentation_complex(Presentation(3, {}));
  CHECK(free3.rank(2) == 0);
}

TEST_CASE("homology of the trefoil presentation complex") {
  const ChainComplex c = presentation_complex(trefoil_two_relator());
  CHECK(homology_of_complex(c, 0) == AbelianGroup(1, {}));
  CHECK(homology_of_complex(c, 1) == AbelianGroup(1, {}));
  CHECK(homology_of_complex(c, 2) == AbelianGroup());
}

TEST_CASE("homology of a complex with zero boundaries") {
  const ChainComplex c({1, 3}, {IntMatrix(1, 3)});
  CHECK(homology_of_complex(c, 0) == AbelianGroup(1, {}));
  CHECK(homology_of_complex(c, 1) == AbelianGroup(3, {}));
}

TEST_CASE("torsion comes from the incoming boundary") {
  const ChainComplex c = presentation_complex(Presentation(1, {Word{1, 1}}));
  CHECK(homology_of_complex(c, 1) == AbelianGroup(0, {2}));
}

TEST_CASE("dimension bounds") {
  const ChainComplex c = presentation_complex(trefoil_two_relator());
  CHECK_THROWS_AS(homology_of_complex(c, 3), knotforge::IndexOutOfRange);
  CHECK_THROWS_AS(homology_of_complex(c, -1), knotforge::IndexOutOfRange);
  CHECK_THROWS_AS(c.rank(3), knotforge::IndexOutOfRange);
}

TEST_CASE("construction rejects non-complexes") {
  // d1 * d2 = (1)(1) != 0
  CHECK_THROWS_AS(ChainComplex({1, 1, 1}, {IntMatrix(1, 1, {1}), IntMatrix(1, 1, {1})}),
                  knotforge::InvalidChainComplex);
  CHECK_THROWS_AS(ChainComplex({1, 2}, {IntMatrix(2, 2)}), knotforge::InvalidChainComplex);
  CHECK_THROWS_AS(ChainComplex({1, 2}, {}), knotforge::InvalidChainComplex);
  CHECK_THROWS_AS(ChainComplex({}, {}), knotforge::InvalidChainComplex);
  CHECK_NOTHROW(ChainComplex({1, 1, 1}, {IntMatrix(1, 1, {0}), IntMatrix(1, 1, {5})}));
}

TEST_CASE("alternating homology ranks recover the Euler characteristic") {
  std::mt19937 rng(99173);
  for (int trial = 0; trial < 100; ++trial) {
    const Presentation p = oracles::random_presentation(rng, 4, 4, 6);
    const ChainComplex c = presentation_complex(p);
    const int chi = 1 - p.generator_count() + static_cast<int>(p.relators().size());
    const int alternating = homology_of_complex(c, 0).rank() - homology_of_complex(c, 1).rank() +
                            homology_of_complex(c, 2).rank();
    CHECK(chi == alternating);
  }
}

TEST_CASE("knot homology of the bundled knots") {
  for (const auto& entry : knotforge::KnotTable::bundled().entries()) {
    const knotforge::KnotHomology h = knot_homology(knotforge::parse_pd(entry.pd_code));
    CAPTURE(entry.name);
    CHECK(h.h0 == AbelianGroup(1, {}));
    CHECK(h.h1 == AbelianGroup(1, {}));
    CHECK(h.h2 == AbelianGroup());
  }
}

TEST_CASE("knot homology of the zero-crossing unknot") {
  const knotforge::KnotHomology h = knot_homology(knotforge::KnotDiagram());
  CHECK(h.h0 == AbelianGroup(1, {}));
  CHECK(h.h1 == AbelianGroup(1, {}));
  CHECK(h.h2 == AbelianGroup());
}
