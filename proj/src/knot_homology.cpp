#include "knotforge/knot_homology.hpp"

#include "knotforge/chain_complex.hpp"
#include "knotforge/wirtinger.hpp"

namespace knotforge {

KnotHomology knot_homology(const KnotDiagram& d) {
  Presentation p = wirtinger_presentation(d);
  if (!p.relators().empty()) p = drop_redundant_relator(p);
  const ChainComplex complex = presentation_complex(p);
  return KnotHomology{homology_of_complex(complex, 0), homology_of_complex(complex, 1),
                      homology_of_complex(complex, 2)};
}

}  // namespace knotforge
