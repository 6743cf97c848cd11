#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knotforge/diagram.hpp"
#include "knotforge/errors.hpp"
#include "knotforge/knot_table.hpp"
#include "knotforge/manifold.hpp"
#include "knotforge/report.hpp"

namespace {

using knotforge::InputError;
using knotforge::InvariantReport;
using knotforge::KnotTable;

std::vector<int> parse_coloring_moduli(const std::string& list) {
  std::vector<int> moduli;
  std::stringstream stream(list);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t consumed = 0;
    int value = 0;
    try {
      value = std::stoi(item, &consumed);
    } catch (const std::exception&) {
      throw InputError("invalid coloring modulus: '" + item + "'");
    }
    if (consumed != item.size() || value < 2)
      throw InputError("coloring moduli must be integers >= 2, got '" + item + "'");
    moduli.push_back(value);
  }
  if (moduli.empty()) throw InputError("empty coloring modulus list");
  return moduli;
}

KnotTable load_table(const std::string& path) {
  return path.empty() ? KnotTable::bundled() : KnotTable::from_file(path);
}

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw knotforge::FileNotFound("cannot open file: " + path);
  std::ostringstream contents;
  contents << file.rdbuf();
  return contents.str();
}

void emit(const InvariantReport& report, const std::string& format) {
  if (format == "json")
    std::cout << knotforge::to_json(report);
  else
    std::cout << knotforge::to_text(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental groups and integral homology of knot complements and Heegaard-closed 3-manifolds"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string table_path;
  std::string coloring_list = "3,5,7";

  // knot <name> | --pd <code> | --gauss <code>
  auto* knot_cmd = app.add_subcommand("knot", "Invariants of a knot complement");
  std::string knot_name;
  std::string pd_code;
  std::string gauss_code;
  knot_cmd->add_option("name", knot_name, "Knot name from the table, e.g. 3_1");
  knot_cmd->add_option("--pd", pd_code, "PD code, e.g. \"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\"");
  knot_cmd->add_option("--gauss", gauss_code, "Signed Gauss code, e.g. \"O1+U2+O3+U1+O2+U3+\"");
  knot_cmd->add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  knot_cmd->add_option("--colorings", coloring_list, "Comma-separated coloring moduli (default 3,5,7)");
  knot_cmd->add_option("--table", table_path, "Knot table file overriding the bundled one");

  // heegaard <file>
  auto* heegaard_cmd = app.add_subcommand("heegaard", "Invariants of a closed manifold from a Heegaard diagram file");
  std::string heegaard_path;
  heegaard_cmd->add_option("file", heegaard_path, "Heegaard diagram file")->required();
  heegaard_cmd->add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // table list | table show <name>
  auto* table_cmd = app.add_subcommand("table", "Inspect the knot table");
  table_cmd->require_subcommand(1);
  auto* list_cmd = table_cmd->add_subcommand("list", "List all knot names");
  auto* show_cmd = table_cmd->add_subcommand("show", "Print the PD code of one entry");
  std::string show_name;
  show_cmd->add_option("name", show_name, "Knot name")->required();
  list_cmd->add_option("--table", table_path, "Knot table file overriding the bundled one");
  show_cmd->add_option("--table", table_path, "Knot table file overriding the bundled one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (knot_cmd->parsed()) {
      const bool by_name = knot_cmd->count("name") > 0;
      const bool by_pd = knot_cmd->count("--pd") > 0;
      const bool by_gauss = knot_cmd->count("--gauss") > 0;
      if (static_cast<int>(by_name) + static_cast<int>(by_pd) + static_cast<int>(by_gauss) != 1)
        throw InputError("give exactly one of: a knot name, --pd, or --gauss");
      const std::vector<int> moduli = parse_coloring_moduli(coloring_list);

      InvariantReport report;
      if (by_name) {
        const KnotTable table = load_table(table_path);
        const knotforge::KnotTableEntry* entry = table.find(knot_name);
        if (entry == nullptr) throw knotforge::UnknownKnotName("unknown knot name: " + knot_name);
        report = make_knot_report("table", knot_name, knotforge::parse_pd(entry->pd_code), moduli);
      } else if (by_pd) {
        report = make_knot_report("pd", pd_code, knotforge::parse_pd(pd_code), moduli);
      } else {
        report = make_knot_report("gauss", gauss_code, knotforge::parse_gauss(gauss_code), moduli);
      }
      emit(report, format);
    } else if (heegaard_cmd->parsed()) {
      const knotforge::HeegaardDiagram diagram = knotforge::parse_heegaard(read_file(heegaard_path));
      emit(make_heegaard_report(heegaard_path, diagram), format);
    } else if (table_cmd->parsed()) {
      const KnotTable table = load_table(table_path);
      if (list_cmd->parsed()) {
        for (const knotforge::KnotTableEntry& entry : table.entries()) std::cout << entry.name << "\n";
      } else if (show_cmd->parsed()) {
        const knotforge::KnotTableEntry* entry = table.find(show_name);
        if (entry == nullptr) throw knotforge::UnknownKnotName("unknown knot name: " + show_name);
        std::cout << entry->pd_code << "\n";
      }
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
