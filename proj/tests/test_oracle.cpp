// Compares against values frozen by tests/oracle/oracle.py (sympy).

#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "turaev/alexander.hpp"
#include "turaev/hfk.hpp"

using namespace turaev;
using nlohmann::json;

namespace {

const json& oracle() {
  static const json data = [] {
    std::ifstream in(std::string(TURAEV_TEST_DATA) + "/oracle.json");
    REQUIRE(in.good());
    return json::parse(in);
  }();
  return data;
}

LaurentPolynomial from_json_terms(const json& terms) {
  std::vector<std::pair<std::int64_t, std::int64_t>> v;
  for (const auto& t : terms) v.emplace_back(t[0].get<std::int64_t>(), t[1].get<std::int64_t>());
  return LaurentPolynomial::from_terms(v);
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("alexander polynomials for coprime p < q <= 20") {
    const auto& rows = oracle()["alexander"];
    REQUIRE(rows.size() > 100);
    for (const auto& row : rows) {
      const std::int64_t p = row["p"], q = row["q"];
      CAPTURE(p);
      CAPTURE(q);
      CHECK(alexander_torus({p, q}) == from_json_terms(row["terms"]));
      if (const auto f = classify({p, q})) CHECK(alexander_closed_form(*f) == from_json_terms(row["terms"]));
    }
  }

  TEST_CASE("widths agree with a full-staircase walk") {
    for (const auto& row : oracle()["widths"]) {
      const std::int64_t p = row["p"], q = row["q"];
      CAPTURE(p);
      CAPTURE(q);
      const auto w = width_torus({p, q});
      CHECK(w.delta_max == row["delta_max"].get<std::int64_t>());
      CHECK(w.delta_min == row["delta_min"].get<std::int64_t>());
      CHECK(w.width == row["width"].get<std::int64_t>());
    }
  }

  TEST_CASE("T(4,5) generators") {
    const auto table = hfk_from_staircase(extract_staircase(alexander_torus({4, 5})));
    const auto& want = oracle()["hfk_T45"];
    REQUIRE(table.generators.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
      CHECK(table.generators[i].alexander == want[i][0].get<std::int64_t>());
      CHECK(table.generators[i].maslov == want[i][1].get<std::int64_t>());
    }
  }

  TEST_CASE("even-p expansion as printed differs from the rational formula") {
    // Pins the erratum: the printed signs lose terms, the corrected form does not.
    for (const auto& row : oracle()["printed_even_plus"]) {
      const std::int64_t p = row["p"], q = row["q"];
      CAPTURE(p);
      const auto printed = from_json_terms(row["printed_terms"]);
      const auto rational = from_json_terms(row["rational_terms"]);
      CHECK(printed != rational);
      CHECK(alexander_torus({p, q}) == rational);
      CHECK(alexander_closed_form(*classify({p, q})) == rational);
    }
  }
}
