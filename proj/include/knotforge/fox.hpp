#pragma once

#include <cstdint>

#include "knotforge/diagram.hpp"

namespace knotforge {

// Number of Fox n-colorings: assignments of values in Z/n to arcs with
// 2*(over) == under_in + under_out (mod n) at every crossing. Computed
// exactly from the Smith form of the coloring matrix, which also handles
// composite n. Always a positive multiple of n (the constant colorings).
// Requires n >= 2.
std::int64_t fox_colorings(const KnotDiagram& d, int n);

}  // namespace knotforge
