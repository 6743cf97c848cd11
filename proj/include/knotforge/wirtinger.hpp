#pragma once

#include "knotforge/diagram.hpp"
#include "knotforge/int_matrix.hpp"
#include "knotforge/presentation.hpp"

namespace knotforge {

// Wirtinger presentation of the knot-complement fundamental group: one
// generator per arc, one relator per crossing. At a crossing with over arc
// c, incoming under arc a and outgoing under arc b the relator is
// c a c^-1 b^-1 for sign +1 and c^-1 a c b^-1 for sign -1 ("the conjugate of
// the incoming under-generator equals the outgoing one"). Relators are
// freely reduced and follow the diagram's crossing order.
Presentation wirtinger_presentation(const KnotDiagram& d);

// Removes the last relator. Any single Wirtinger relator of a connected
// diagram is a consequence of the others, so this preserves the group; the
// last one is dropped to keep output deterministic. Throws NoRelators when
// there is nothing to drop.
Presentation drop_redundant_relator(const Presentation& p);

// One row per relator, one column per generator; entry = exponent sum.
IntMatrix abelianized_boundary(const Presentation& p);

}  // namespace knotforge
