#pragma once

#include <string_view>
#include <vector>

#include "knotforge/abelian_group.hpp"
#include "knotforge/presentation.hpp"
#include "knotforge/word.hpp"

namespace knotforge {

// A genus-g handlebody together with attaching curves for 2-handles, each
// curve given by its class in the handlebody's free fundamental group.
// Curves are freely and cyclically reduced at construction. The number of
// curves is not tied to the genus: partial attachments are allowed.
class HeegaardDiagram {
 public:
  HeegaardDiagram(int genus, std::vector<Word> curves);

  int genus() const { return genus_; }
  const std::vector<Word>& curves() const { return curves_; }

 private:
  int genus_ = 0;
  std::vector<Word> curves_;
};

struct HandlebodyInvariants {
  Presentation pi1;
  AbelianGroup h0;
  AbelianGroup h1;
  AbelianGroup h2;
};

// pi1 free of rank g, H0 = Z, H1 = Z^g, H2 = 0.
HandlebodyInvariants handlebody_invariants(int genus);

// Quotient of the handlebody's free group by the normal closure of the
// attaching curves, one 2-handle at a time: g generators, the curves as
// relators.
Presentation close_manifold(const HeegaardDiagram& h);

// abelianization(close_manifold(h)).
AbelianGroup closed_manifold_h1(const HeegaardDiagram& h);

// Text format: first line "genus g"; then one curve per line as a word in
// letters a..z with optional integer exponents, e.g. "a a", "a^2" or
// "a b a^-1 b^-1". Blank lines and lines starting with '#' are skipped.
// Throws MalformedSyntax.
HeegaardDiagram parse_heegaard(std::string_view text);

}  // namespace knotforge
