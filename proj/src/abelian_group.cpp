#include "knotforge/abelian_group.hpp"

#include <utility>

#include "knotforge/errors.hpp"

namespace knotforge {

AbelianGroup::AbelianGroup(int rank, std::vector<std::int64_t> torsion)
    : rank_(rank), torsion_(std::move(torsion)) {
  if (rank_ < 0) throw InvalidArgument("abelian group rank must be nonnegative");
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw InvalidArgument("torsion coefficients must be at least 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      throw InvalidArgument("torsion coefficients must form a divisibility chain");
  }
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (rank_ == 1)
    out = "Z";
  else if (rank_ > 1)
    out = "Z^" + std::to_string(rank_);
  for (std::int64_t t : torsion_) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(t);
  }
  return out;
}

}  // namespace knotforge
