#include "doctest.h"
#include "turaev/pd_code.hpp"

using namespace turaev;

namespace {
std::string fixture(const char* name) { return std::string(TURAEV_TEST_DATA) + "/" + name; }
}  // namespace

TEST_SUITE("pd_code") {
  TEST_CASE("trefoil") {
    const auto d = import_pd_file(fixture("trefoil.json"));
    CHECK(d.crossing_count() == 3);
    CHECK(component_count(d) == 1);
    CHECK(is_alternating(d));
    CHECK(dealternating_number_diagram(d).minimum_changes == 0);
    CHECK(turaev_genus_diagram(d) == 0);
  }

  TEST_CASE("figure eight") {
    const auto d = import_pd_file(fixture("figure_eight.json"));
    CHECK(component_count(d) == 1);
    CHECK(turaev_genus_diagram(d) == 0);
    CHECK(all_a(d).component_count + all_b(d).component_count == d.crossing_count() + 2);
  }

  TEST_CASE("round trip") {
    for (const auto* text : {"(123)^5", "113321322132", "11", "(12)^3"}) {
      const int strands = std::string(text) == "(12)^3" ? 3 : 4;
      const auto d = closure_diagram(parse_braid(text, strands));
      const std::string exported = export_pd(d);
      const auto back = import_pd(exported);
      CHECK(back == d);
      CHECK(export_pd(back) == exported);
    }
    const auto changed = apply_crossing_changes(closure_diagram(parse_braid("(12)^4", 3)), {1, 2});
    CHECK(import_pd(export_pd(changed)) == changed);
    const Diagram unknot({}, 1);
    CHECK(import_pd(export_pd(unknot)) == unknot);
    CHECK(import_pd(R"({"crossings": []})") == unknot);
    const Diagram two_loops({}, 2);
    CHECK(import_pd(export_pd(two_loops)) == two_loops);
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(import_pd_file(fixture("edge_once.json")), MalformedPDCode);
    CHECK_THROWS_AS(import_pd("{"), MalformedPDCode);
    CHECK_THROWS_AS(import_pd(R"({"crossings": [[1, 2, 3, "+"]]})"), MalformedPDCode);
    CHECK_THROWS_AS(import_pd(R"({"crossings": [[1, 2, 1, 2, "x"]]})"), MalformedPDCode);
    CHECK_THROWS_AS(import_pd(R"({"crossings": [], "extra": 1})"), MalformedPDCode);
    // Edge 1 enters twice.
    CHECK_THROWS_AS(import_pd(R"({"crossings": [[1, 2, 2, 1, "+"]]})"), MalformedPDCode);
    // A one-crossing kink is fine.
    CHECK(import_pd(R"({"crossings": [[1, 1, 2, 2, "+"]]})").crossing_count() == 1);
    CHECK_THROWS_AS(import_pd_file(fixture("missing.json")), MalformedPDCode);
  }
}
