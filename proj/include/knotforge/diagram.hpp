#pragma once

#include <string_view>
#include <vector>

namespace knotforge {

// One crossing of an oriented knot diagram. Arc ids are 1-based. The sign is
// +1 when the over-strand crosses left to right as seen by the incoming
// under-strand, -1 otherwise. In reducible diagrams the over arc may
// coincide with an under arc.
struct Crossing {
  int over = 0;
  int under_in = 0;
  int under_out = 0;
  int sign = 0;

  bool operator==(const Crossing&) const = default;
};

// Combinatorial oriented knot diagram: arcs 1..arc_count plus an ordered
// crossing list. For a diagram with c >= 1 crossings, arc_count == c and
// every arc occurs exactly once as some crossing's under_in and once as some
// under_out, with the under-strand passages forming a single cycle through
// all arcs. The zero-crossing unknot is arc_count == 1 with no crossings.
// Immutable after construction; construction validates all invariants.
class KnotDiagram {
 public:
  KnotDiagram();  // the zero-crossing unknot
  KnotDiagram(int arc_count, std::vector<Crossing> crossings);

  int arc_count() const { return arc_count_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }

  bool operator==(const KnotDiagram&) const = default;

 private:
  int arc_count_ = 1;
  std::vector<Crossing> crossings_;
};

// Parses planar-diagram code: whitespace/comma separated tuples X(i,j,k,l)
// of positive integers, one per crossing. Edge labels may be arbitrary
// positive integers; traversal order is their sorted cyclic order (for the
// usual 1..2n labeling this is label succession mod 2n).
//
// Tuple convention: the four edge ends counterclockwise starting from the
// incoming under-strand, so i is the incoming under edge, k the outgoing
// under edge (forced to be i's successor), and {j, l} the over-strand pair
// whose orientation is inferred from label succession. Looking along the
// incoming under-strand, j sits to the right and l to the left; a crossing
// is +1 exactly when the over-strand runs l -> j (left to right).
//
// Arcs (maximal over-strands) are numbered 1..n in under-cycle order
// starting from the arc containing the smallest edge label. Crossings keep
// the input tuple order.
//
// Empty input yields the zero-crossing unknot. Throws MalformedSyntax,
// BadIncidence or DisconnectedUnderCycle.
KnotDiagram parse_pd(std::string_view text);

// Parses signed Gauss code: a sequence of tokens O<k><s> / U<k><s> with
// crossing label k and sign s in {+, -}, e.g. "O1+U2+O3+U1+O2+U3+".
// Whitespace and commas between tokens are ignored. Each crossing must be
// visited exactly once over and once under, with matching signs. Arcs are
// numbered 1..n in traversal order, ending at the 1st, 2nd, ... under
// passage; crossings are ordered by first appearance. Throws
// MalformedSyntax, SignMismatch or BadIncidence.
KnotDiagram parse_gauss(std::string_view text);

}  // namespace knotforge
