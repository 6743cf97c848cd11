#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace knotforge {

struct KnotTableEntry {
  std::string name;
  std::string pd_code;
};

// Named knots as PD codes. The file format is line-oriented:
// name<TAB>pd-code, with '#' starting a comment line. A copy of the bundled
// table (3_1, 4_1, 5_1, 5_2) ships inside the library.
class KnotTable {
 public:
  static const KnotTable& bundled();
  static KnotTable parse(std::string_view text);
  static KnotTable from_file(const std::string& path);  // throws FileNotFound

  const std::vector<KnotTableEntry>& entries() const { return entries_; }

  // nullptr when the name is absent.
  const KnotTableEntry* find(std::string_view name) const;

 private:
  std::vector<KnotTableEntry> entries_;
};

}  // namespace knotforge
