#include "knotforge/wirtinger.hpp"

#include "knotforge/errors.hpp"

namespace knotforge {

Presentation wirtinger_presentation(const KnotDiagram& d) {
  std::vector<Word> relators;
  relators.reserve(d.crossings().size());
  for (const Crossing& c : d.crossings()) {
    relators.push_back(c.sign > 0 ? Word{c.over, c.under_in, -c.over, -c.under_out}
                                  : Word{-c.over, c.under_in, c.over, -c.under_out});
  }
  return Presentation(d.arc_count(), std::move(relators));
}

Presentation drop_redundant_relator(const Presentation& p) {
  if (p.relators().empty()) throw NoRelators("presentation has no relator to drop");
  std::vector<Word> kept(p.relators().begin(), p.relators().end() - 1);
  return Presentation(p.generator_count(), std::move(kept));
}

IntMatrix abelianized_boundary(const Presentation& p) { return exponent_sum_matrix(p); }

}  // namespace knotforge
