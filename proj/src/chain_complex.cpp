#include "knotforge/chain_complex.hpp"

#include <utility>

#include "knotforge/errors.hpp"
#include "knotforge/smith.hpp"

namespace knotforge {

ChainComplex::ChainComplex(std::vector<int> ranks, std::vector<IntMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  if (ranks_.empty()) throw InvalidChainComplex("a chain complex needs at least C_0");
  for (int r : ranks_)
    if (r < 0) throw InvalidChainComplex("chain group ranks must be nonnegative");
  if (boundaries_.size() + 1 != ranks_.size())
    throw InvalidChainComplex("expected one boundary map per consecutive pair of chain groups");
  for (std::size_t i = 0; i < boundaries_.size(); ++i)
    if (boundaries_[i].rows() != ranks_[i] || boundaries_[i].cols() != ranks_[i + 1])
      throw InvalidChainComplex("boundary map shape does not match chain group ranks");
  for (std::size_t i = 1; i < boundaries_.size(); ++i)
    if (!(boundaries_[i - 1] * boundaries_[i]).is_zero())
      throw InvalidChainComplex("boundary maps do not compose to zero");
}

int ChainComplex::rank(int n) const {
  if (n < 0 || n > top_dimension()) throw IndexOutOfRange("chain dimension out of range");
  return ranks_[static_cast<std::size_t>(n)];
}

IntMatrix ChainComplex::boundary(int n) const {
  if (n >= 1 && n <= top_dimension()) return boundaries_[static_cast<std::size_t>(n) - 1];
  if (n == 0) return IntMatrix(0, ranks_[0]);
  if (n == top_dimension() + 1) return IntMatrix(ranks_.back(), 0);
  return IntMatrix(0, 0);
}

AbelianGroup homology_of_complex(const ChainComplex& c, int n) {
  if (n < 0 || n > c.top_dimension()) throw IndexOutOfRange("homology dimension out of range");
  const SmithNormalForm outgoing = smith_normal_form(c.boundary(n));
  const SmithNormalForm incoming = smith_normal_form(c.boundary(n + 1));
  const int rank = c.rank(n) - outgoing.rank - incoming.rank;
  std::vector<std::int64_t> torsion;
  for (int i = 0; i < incoming.rank; ++i)
    if (incoming.d.at(i, i) > 1) torsion.push_back(incoming.d.at(i, i));
  return AbelianGroup(rank, std::move(torsion));
}

ChainComplex presentation_complex(const Presentation& p) {
  const int generators = p.generator_count();
  const int relators = static_cast<int>(p.relators().size());
  IntMatrix d1(1, generators);  // every 1-cell is a loop at the single 0-cell
  IntMatrix d2 = exponent_sum_matrix(p).transposed();
  return ChainComplex({1, generators, relators}, {std::move(d1), std::move(d2)});
}

}  // namespace knotforge
