#pragma once

#include "knotforge/abelian_group.hpp"
#include "knotforge/diagram.hpp"

namespace knotforge {

struct KnotHomology {
  AbelianGroup h0;
  AbelianGroup h1;
  AbelianGroup h2;
};

// Integral homology of the knot complement: Wirtinger presentation, drop the
// redundant relator (when there is one), build the presentation complex and
// read off H_0, H_1, H_2.
KnotHomology knot_homology(const KnotDiagram& d);

}  // namespace knotforge
