#pragma once

#include <string>
#include <vector>

#include "knotforge/abelian_group.hpp"
#include "knotforge/int_matrix.hpp"
#include "knotforge/word.hpp"

namespace knotforge {

// Finitely presented group <g1, ..., gn | r1, ..., rk>. Relators are freely
// reduced Words over generators 1..generator_count. Empty relators are legal
// values (they arise from reducible diagrams) and are removed by
// tietze_simplify.
class Presentation {
 public:
  Presentation() = default;
  Presentation(int generator_count, std::vector<Word> relators);

  int generator_count() const { return generator_count_; }
  const std::vector<Word>& relators() const { return relators_; }

  bool operator==(const Presentation&) const = default;

 private:
  int generator_count_ = 0;
  std::vector<Word> relators_;
};

// One row per relator, one column per generator; entry (i, j) is the
// exponent sum of generator j+1 in relator i.
IntMatrix exponent_sum_matrix(const Presentation& p);

// Heuristic presentation shrinking. Repeats until nothing applies:
//   (i)   delete empty relators,
//   (ii)  delete relators equal to an earlier one up to cyclic permutation
//         and inversion,
//   (iii) when a relator mentions some generator exactly once, solve for
//         that generator, substitute it everywhere and delete both.
// Step (iii) picks the shortest eligible relator (ties: lowest index) and,
// inside it, the lowest eligible generator. The group itself is preserved
// up to isomorphism, so the abelianization never changes. Not a decision
// procedure for isomorphism.
Presentation tietze_simplify(const Presentation& p);

// Cokernel of the exponent-sum matrix in canonical form.
AbelianGroup abelianization(const Presentation& p);

// 1..26 -> "a".."z", then "g27", "g28", ...
std::string generator_name(int index);

// "e" for the empty word, otherwise letters with collapsed powers,
// e.g. "a^-1 c a b^-1" or "a^2".
std::string to_string(const Word& w);

// "⟨a, b, c | a^-1 c a b^-1, a b c^-1 b^-1⟩"
std::string to_string(const Presentation& p);

}  // namespace knotforge
