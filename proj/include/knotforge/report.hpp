#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotforge/abelian_group.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/manifold.hpp"
#include "knotforge/presentation.hpp"

namespace knotforge {

// Everything one invocation of the tool computes about one input. For knot
// inputs pi1 is the Wirtinger presentation after dropping the redundant
// relator; for Heegaard inputs it is the closed manifold's presentation and
// h2/colorings are absent. pi1 and pi1_simplified always have the same
// abelianization, and h0 is Z for every connected input.
struct InvariantReport {
  std::string source_kind;   // "table", "pd", "gauss" or "heegaard"
  std::string source_value;  // knot name, raw code or file path
  Presentation pi1;
  Presentation pi1_simplified;
  AbelianGroup h0;
  AbelianGroup h1;
  std::optional<AbelianGroup> h2;
  std::map<int, std::int64_t> colorings;
};

InvariantReport make_knot_report(std::string source_kind, std::string source_value,
                                 const KnotDiagram& d, const std::vector<int>& coloring_moduli);

InvariantReport make_heegaard_report(std::string source_value, const HeegaardDiagram& h);

std::string to_text(const InvariantReport& r);

// Stable field order (source, pi1, pi1_simplified, h0, h1, h2, colorings);
// abelian groups as {"rank": r, "torsion": [...]}; relators as lists of
// [generator, exponent] pairs. Byte-identical across runs for equal inputs.
std::string to_json(const InvariantReport& r);

}  // namespace knotforge
