#pragma once

#include <vector>

#include "knotforge/abelian_group.hpp"
#include "knotforge/int_matrix.hpp"
#include "knotforge/presentation.hpp"

namespace knotforge {

// Chain complex of finitely generated free abelian groups C_0 .. C_N.
// boundaries[i] is the map d_{i+1}: C_{i+1} -> C_i, a ranks[i] x ranks[i+1]
// matrix. Construction rejects shape mismatches and any pair with
// d_n ∘ d_{n+1} != 0.
class ChainComplex {
 public:
  ChainComplex(std::vector<int> ranks, std::vector<IntMatrix> boundaries);

  int top_dimension() const { return static_cast<int>(ranks_.size()) - 1; }
  int rank(int n) const;

  // d_n: C_n -> C_{n-1}. Off the ends of the complex this is the zero map
  // with the appropriate degenerate shape (0 rows or 0 columns).
  IntMatrix boundary(int n) const;

 private:
  std::vector<int> ranks_;
  std::vector<IntMatrix> boundaries_;
};

// H_n = Ker(d_n) / Im(d_{n+1}): free rank is
// rank(C_n) - rank(d_n) - rank(d_{n+1}); torsion is the invariant factors
// of d_{n+1} exceeding 1. Throws IndexOutOfRange when n is not a dimension
// of the complex.
AbelianGroup homology_of_complex(const ChainComplex& c, int n);

// The two-dimensional cell complex of a presentation: one 0-cell, a 1-cell
// per generator, a 2-cell per relator. d_1 = 0 and d_2 is the transposed
// exponent-sum matrix (shape generators x relators).
ChainComplex presentation_complex(const Presentation& p);

}  // namespace knotforge
