#include <doctest.h>

#include <json.hpp>

#include "knotforge/diagram.hpp"
#include "knotforge/knot_table.hpp"
#include "knotforge/manifold.hpp"
#include "knotforge/presentation.hpp"
#include "knotforge/report.hpp"

using knotforge::AbelianGroup;
using knotforge::InvariantReport;

namespace {

InvariantReport trefoil_report() {
  const auto* entry = knotforge::KnotTable::bundled().find("3_1");
  REQUIRE(entry != nullptr);
  return make_knot_report("table", "3_1", knotforge::parse_pd(entry->pd_code), {3, 5, 7});
}

}  // namespace

TEST_CASE("knot report contents") {
  const InvariantReport r = trefoil_report();
  CHECK(r.pi1.generator_count() == 3);
  CHECK(r.pi1.relators().size() == 2);
  CHECK(r.h0 == AbelianGroup(1, {}));
  CHECK(r.h1 == AbelianGroup(1, {}));
  REQUIRE(r.h2.has_value());
  CHECK(r.h2->is_trivial());
  CHECK(r.colorings.at(3) == 9);
  CHECK(r.colorings.at(5) == 5);
  CHECK(r.colorings.at(7) == 7);
  CHECK(abelianization(r.pi1) == abelianization(r.pi1_simplified));
}

TEST_CASE("heegaard report has no h2 and no colorings") {
  const InvariantReport r =
      make_heegaard_report("p3.heegaard", knotforge::parse_heegaard("genus 1\na a\n"));
  CHECK(r.pi1.generator_count() == 1);
  CHECK(r.h0 == AbelianGroup(1, {}));
  CHECK(r.h1 == AbelianGroup(0, {2}));
  CHECK_FALSE(r.h2.has_value());
  CHECK(r.colorings.empty());
  CHECK(abelianization(r.pi1) == abelianization(r.pi1_simplified));
}

TEST_CASE("text rendering") {
  const std::string text = to_text(trefoil_report());
  CHECK(text.find("source: 3_1 (knot table)") != std::string::npos);
  CHECK(text.find("H0: Z\n") != std::string::npos);
  CHECK(text.find("H1: Z\n") != std::string::npos);
  CHECK(text.find("H2: 0\n") != std::string::npos);
  CHECK(text.find("colorings: 3 -> 9, 5 -> 5, 7 -> 7") != std::string::npos);

  const std::string heegaard_text =
      to_text(make_heegaard_report("p3", knotforge::parse_heegaard("genus 1\na a\n")));
  CHECK(heegaard_text.find("H1: Z/2") != std::string::npos);
  CHECK(heegaard_text.find("H2:") == std::string::npos);
  CHECK(heegaard_text.find("colorings") == std::string::npos);
}

TEST_CASE("json carries the same invariant values as the report") {
  const InvariantReport r = trefoil_report();
  const nlohmann::json j = nlohmann::json::parse(to_json(r));
  CHECK(j["source"]["type"] == "table");
  CHECK(j["source"]["value"] == "3_1");
  CHECK(j["pi1"]["generators"] == 3);
  CHECK(j["pi1"]["relators"].size() == 2);
  CHECK(j["h0"]["rank"] == 1);
  CHECK(j["h0"]["torsion"].empty());
  CHECK(j["h1"]["rank"] == r.h1.rank());
  CHECK(j["h2"]["rank"] == 0);
  CHECK(j["colorings"]["3"] == 9);
  CHECK(j["colorings"]["5"] == 5);

  // field order is pinned
  const std::string dumped = to_json(r);
  CHECK(dumped.find("\"source\"") < dumped.find("\"pi1\""));
  CHECK(dumped.find("\"pi1\"") < dumped.find("\"pi1_simplified\""));
  CHECK(dumped.find("\"pi1_simplified\"") < dumped.find("\"h0\""));
  CHECK(dumped.find("\"h0\"") < dumped.find("\"h1\""));
  CHECK(dumped.find("\"h1\"") < dumped.find("\"h2\""));
  CHECK(dumped.find("\"h2\"") < dumped.find("\"colorings\""));
}

TEST_CASE("rendering is deterministic") {
  CHECK(to_json(trefoil_report()) == to_json(trefoil_report()));
  CHECK(to_text(trefoil_report()) == to_text(trefoil_report()));
}
