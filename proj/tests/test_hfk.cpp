#include "doctest.h"
#include "turaev/hfk.hpp"

using namespace turaev;

TEST_SUITE("hfk") {
  TEST_CASE("staircase extraction") {
    const auto st = extract_staircase(alexander_torus({4, 5}));
    CHECK(st.k() == 3);
    CHECK(st.s == std::vector<std::int64_t>{0, 2, 5, 6});
    CHECK(st.reconstruct() == alexander_torus({4, 5}));
    CHECK(extract_staircase(LaurentPolynomial::constant(1)).s == std::vector<std::int64_t>{0});
  }

  TEST_CASE("staircase rejects non L-space shapes") {
    CHECK_THROWS_AS(extract_staircase(parse_laurent("t^2-1")), NotLSpaceForm);
    CHECK_THROWS_AS(extract_staircase(parse_laurent("t^{-1}-3+t")), NotLSpaceForm);
    CHECK_THROWS_AS(extract_staircase(parse_laurent("t^{-1}+1+t")), NotLSpaceForm);
    CHECK_THROWS_AS(extract_staircase(parse_laurent("-t^{-1}+3-t")), NotLSpaceForm);
    CHECK_THROWS_AS(extract_staircase(LaurentPolynomial()), NotLSpaceForm);
  }

  TEST_CASE("T(4,5) table") {
    const auto table = hfk_from_staircase(extract_staircase(alexander_torus({4, 5})));
    const std::vector<HfkGenerator> want = {{6, 0, 1},   {5, -1, 1},  {2, -2, 1},  {0, -5, 1},
                                            {-2, -6, 1}, {-5, -11, 1}, {-6, -12, 1}};
    CHECK(table.generators == want);
  }

  TEST_CASE("small tables") {
    CHECK(hfk_from_staircase(Staircase{}).generators == std::vector<HfkGenerator>{{0, 0, 1}});
    const auto trefoil = hfk_from_staircase(extract_staircase(alexander_torus({2, 3})));
    CHECK(trefoil.generators == std::vector<HfkGenerator>{{1, 0, 1}, {0, -1, 1}, {-1, -2, 1}});
    const auto w = delta_sequence(extract_staircase(alexander_torus({2, 3})));
    CHECK(w.deltas == std::vector<std::int64_t>{1, 1});
    CHECK(w.width == 1);
  }

  TEST_CASE("width examples") {
    const auto w = width_torus({4, 5});
    CHECK(w.delta_max == 6);
    CHECK(w.delta_min == 4);
    CHECK(w.width == 3);
    CHECK(width_torus({7, 1}).width == 1);
    CHECK(width_torus({5, 7}).width == 5);
    CHECK_THROWS_AS(width_torus({6, 9}), NotCoprime);
  }

  TEST_CASE("width formula") {
    CHECK(width_formula({Family::odd_p_plus, 7, 1}) == 10);
    CHECK(width_formula({Family::even_p_minus, 4, 1}) == 2);
    CHECK(width_torus({3, 4}).width == 2);
    CHECK(width_formula({Family::five_plus_three, 5, 0}) == 2);
    CHECK(width_torus({3, 5}).width == 2);
  }

  TEST_CASE("width formula sweep, p <= 12 and n <= 20") {
    for (std::int64_t p = 2; p <= 12; ++p) {
      for (std::int64_t n = 1; n <= 20; ++n) {
        const bool odd = p % 2 == 1;
        for (Family fam : {odd ? Family::odd_p_plus : Family::even_p_plus,
                           odd ? Family::odd_p_minus : Family::even_p_minus}) {
          const FamilyId id{fam, p, n};
          CAPTURE(p);
          CAPTURE(n);
          CHECK(width_formula(id) == width_torus(id.params()).width);
        }
      }
    }
    for (std::int64_t n = 0; n <= 20; ++n) {
      CHECK(width_formula({Family::five_plus_two, 5, n}) == width_torus({5, 5 * n + 2}).width);
      CHECK(width_formula({Family::five_plus_three, 5, n}) == width_torus({5, 5 * n + 3}).width);
    }
  }

  TEST_CASE("conjecture scan") {
    CHECK(scan_conjecture(3).violations.empty());
    CHECK(scan_conjecture(3).pairs_checked == 0);
    const auto serial = scan_conjecture(60, 1);
    const auto parallel = scan_conjecture(60, 4);
    CHECK(serial.violations.empty());
    CHECK(serial.pairs_checked == parallel.pairs_checked);
    CHECK(serial.widths_computed == parallel.widths_computed);
    CHECK_THROWS_AS(scan_conjecture(2), std::invalid_argument);
  }

  TEST_CASE("width table lookups") {
    const WidthTable table(30, 2);
    CHECK(table.width(4, 5) == 3);
    CHECK(table.width(5, 4) == 3);
    CHECK(table.width(1, 29) == 1);
    CHECK_THROWS_AS(table.width(4, 31), std::out_of_range);
    CHECK_THROWS_AS(table.width(4, 6), std::out_of_range);
  }
}
