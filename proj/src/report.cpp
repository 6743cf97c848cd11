#include "knotforge/report.hpp"

#include <json.hpp>

#include "knotforge/chain_complex.hpp"
#include "knotforge/fox.hpp"
#include "knotforge/knot_homology.hpp"
#include "knotforge/wirtinger.hpp"

namespace knotforge {

namespace {

const char* source_label(const std::string& kind) {
  if (kind == "table") return "knot table";
  if (kind == "pd") return "PD code";
  if (kind == "gauss") return "Gauss code";
  return "Heegaard diagram";
}

nlohmann::ordered_json group_json(const AbelianGroup& g) {
  nlohmann::ordered_json j;
  j["rank"] = g.rank();
  j["torsion"] = g.torsion();
  return j;
}

nlohmann::ordered_json presentation_json(const Presentation& p) {
  nlohmann::ordered_json j;
  j["generators"] = p.generator_count();
  nlohmann::ordered_json relators = nlohmann::ordered_json::array();
  for (const Word& w : p.relators()) {
    nlohmann::ordered_json letters = nlohmann::ordered_json::array();
    for (int letter : w.letters())
      letters.push_back({letter > 0 ? letter : -letter, letter > 0 ? 1 : -1});
    relators.push_back(std::move(letters));
  }
  j["relators"] = std::move(relators);
  return j;
}

}  // namespace

InvariantReport make_knot_report(std::string source_kind, std::string source_value,
                                 const KnotDiagram& d, const std::vector<int>& coloring_moduli) {
  InvariantReport r;
  r.source_kind = std::move(source_kind);
  r.source_value = std::move(source_value);

  Presentation full = wirtinger_presentation(d);
  r.pi1 = full.relators().empty() ? full : drop_redundant_relator(full);
  r.pi1_simplified = tietze_simplify(r.pi1);

  const KnotHomology h = knot_homology(d);
  r.h0 = h.h0;
  r.h1 = h.h1;
  r.h2 = h.h2;

  for (int n : coloring_moduli) r.colorings[n] = fox_colorings(d, n);
  return r;
}

InvariantReport make_heegaard_report(std::string source_value, const HeegaardDiagram& h) {
  InvariantReport r;
  r.source_kind = "heegaard";
  r.source_value = std::move(source_value);
  r.pi1 = close_manifold(h);
  r.pi1_simplified = tietze_simplify(r.pi1);
  const ChainComplex complex = presentation_complex(r.pi1);
  r.h0 = homology_of_complex(complex, 0);
  r.h1 = closed_manifold_h1(h);
  return r;
}

std::string to_text(const InvariantReport& r) {
  std::string out;
  out += "source: " + r.source_value + " (" + source_label(r.source_kind) + ")\n";
  out += "pi1:            " + to_string(r.pi1) + "\n";
  out += "pi1 simplified: " + to_string(r.pi1_simplified) + "\n";
  out += "H0: " + r.h0.to_string() + "\n";
  out += "H1: " + r.h1.to_string() + "\n";
  if (r.h2) out += "H2: " + r.h2->to_string() + "\n";
  if (!r.colorings.empty()) {
    out += "colorings:";
    bool first = true;
    for (const auto& [n, count] : r.colorings) {
      out += first ? " " : ", ";
      out += std::to_string(n) + " -> " + std::to_string(count);
      first = false;
    }
    out += "\n";
  }
  return out;
}

std::string to_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["source"] = {{"type", r.source_kind}, {"value", r.source_value}};
  j["pi1"] = presentation_json(r.pi1);
  j["pi1_simplified"] = presentation_json(r.pi1_simplified);
  j["h0"] = group_json(r.h0);
  j["h1"] = group_json(r.h1);
  if (r.h2) j["h2"] = group_json(*r.h2);
  if (!r.colorings.empty()) {
    nlohmann::ordered_json colorings;
    for (const auto& [n, count] : r.colorings) colorings[std::to_string(n)] = count;
    j["colorings"] = std::move(colorings);
  }
  return j.dump(2) + "\n";
}

}  // namespace knotforge
