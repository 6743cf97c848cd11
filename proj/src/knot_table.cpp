#include "knotforge/knot_table.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "knotforge/errors.hpp"

namespace knotforge {

namespace {

constexpr std::string_view kBundledTable =
    "# Bundled knot table: name<TAB>PD code\n"
    "3_1\tX(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\n"
    "4_1\tX(2,7,3,8) X(6,3,7,4) X(8,6,1,5) X(4,2,5,1)\n"
    "5_1\tX(1,6,2,7) X(3,8,4,9) X(5,10,6,1) X(7,2,8,3) X(9,4,10,5)\n"
    "5_2\tX(1,4,2,5) X(3,8,4,9) X(5,10,6,1) X(9,6,10,7) X(7,2,8,3)\n";

std::string trim(std::string s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

const KnotTable& KnotTable::bundled() {
  static const KnotTable table = parse(kBundledTable);
  return table;
}

KnotTable KnotTable::parse(std::string_view text) {
  KnotTable table;
  std::string line;
  std::istringstream stream{std::string(text)};
  int line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    std::size_t sep = stripped.find_first_of("\t ");
    if (sep == std::string::npos)
      throw MalformedSyntax("knot table line " + std::to_string(line_number) +
                            ": expected name<TAB>pd-code");
    KnotTableEntry entry{trim(stripped.substr(0, sep)), trim(stripped.substr(sep + 1))};
    if (entry.pd_code.empty())
      throw MalformedSyntax("knot table line " + std::to_string(line_number) + ": empty PD code");
    if (table.find(entry.name) != nullptr)
      throw MalformedSyntax("knot table line " + std::to_string(line_number) + ": duplicate name '" +
                            entry.name + "'");
    table.entries_.push_back(std::move(entry));
  }
  return table;
}

KnotTable KnotTable::from_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw FileNotFound("cannot open knot table file: " + path);
  std::ostringstream contents;
  contents << file.rdbuf();
  return parse(contents.str());
}

const KnotTableEntry* KnotTable::find(std::string_view name) const {
  for (const KnotTableEntry& entry : entries_)
    if (entry.name == name) return &entry;
  return nullptr;
}

}  // namespace knotforge
