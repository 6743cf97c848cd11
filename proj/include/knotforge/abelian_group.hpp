#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace knotforge {

// Finitely generated abelian group in canonical form: a free rank plus an
// invariant-factor torsion chain t1 | t2 | ... with every ti >= 2. The
// canonical form makes equality meaningful, so golden tests can compare
// groups directly.
class AbelianGroup {
 public:
  AbelianGroup() = default;  // the trivial group
  AbelianGroup(int rank, std::vector<std::int64_t> torsion);

  static AbelianGroup free(int rank) { return AbelianGroup(rank, {}); }

  int rank() const { return rank_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }

  // "0", "Z", "Z/2", "Z^3 + Z/2", ...
  std::string to_string() const;

  bool operator==(const AbelianGroup&) const = default;

 private:
  int rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

}  // namespace knotforge
