#include "doctest.h"
#include "turaev/alexander.hpp"

using namespace turaev;

TEST_SUITE("alexander") {
  TEST_CASE("rational formula examples") {
    CHECK(to_string(alexander_torus({4, 5})) == "t^{-6}-t^{-5}+t^{-2}-1+t^2-t^5+t^6");
    CHECK(alexander_torus({5, 4}) == alexander_torus({4, 5}));
    CHECK(alexander_torus({3, 4}) == parse_laurent("t^3-t^2+1-t^{-2}+t^{-3}"));
    CHECK(alexander_torus({2, 3}) == parse_laurent("t^{-1}-1+t"));
    for (std::int64_t q = 1; q < 12; ++q) CHECK(alexander_torus({1, q}) == LaurentPolynomial::constant(1));
  }

  TEST_CASE("non-coprime and non-positive parameters") {
    CHECK_THROWS_AS(alexander_torus({4, 6}), NotCoprime);
    CHECK_THROWS_AS(alexander_torus({3, 3}), NotCoprime);
    CHECK_THROWS_AS(alexander_torus({0, 3}), std::invalid_argument);
  }

  TEST_CASE("degree and symmetry") {
    for (std::int64_t p = 2; p < 14; ++p) {
      for (std::int64_t q = p + 1; q < 30; ++q) {
        if (gcd(p, q) != 1) continue;
        const auto d = alexander_torus({p, q});
        CHECK(d.max_exponent() == (p - 1) * (q - 1) / 2);
        CHECK(is_palindromic(d));
        // Delta(1) = 1 for knots.
        std::int64_t sum = 0;
        for (auto c : d.coefficients()) sum += c;
        CHECK(sum == 1);
      }
    }
  }

  TEST_CASE("classification") {
    auto f = classify({3, 4});
    REQUIRE(f);
    CHECK(f->family == Family::odd_p_plus);
    CHECK(f->n == 1);
    f = classify({9, 4});  // 9 = 4*2 + 1
    REQUIRE(f);
    CHECK(f->family == Family::even_p_plus);
    CHECK(f->p == 4);
    CHECK(classify({5, 7})->family == Family::five_plus_two);
    CHECK(classify({5, 13})->family == Family::five_plus_three);
    CHECK_FALSE(classify({7, 10}));
  }

  TEST_CASE("closed forms") {
    CHECK(alexander_closed_form({Family::odd_p_plus, 3, 1}) == alexander_torus({3, 4}));
    CHECK(alexander_closed_form({Family::even_p_plus, 4, 1}) ==
          parse_laurent("t^{-6}-t^{-5}+t^{-2}-1+t^2-t^5+t^6"));
    CHECK(alexander_closed_form({Family::five_plus_two, 5, 0}) == alexander_torus({2, 5}));
    CHECK(alexander_closed_form({Family::five_plus_three, 5, 0}) == alexander_torus({3, 5}));
    CHECK_THROWS_AS(alexander_closed_form({Family::odd_p_plus, 4, 1}), UnsupportedFamily);
    CHECK_THROWS_AS(alexander_closed_form({Family::even_p_minus, 6, -1}), UnsupportedFamily);
  }

  TEST_CASE("closed forms equal the rational formula, n <= 20") {
    for (std::int64_t n = 1; n <= 20; ++n) {
      for (std::int64_t p = 2; p <= 12; ++p) {
        const bool odd = p % 2 == 1;
        for (Family fam : {odd ? Family::odd_p_plus : Family::even_p_plus,
                           odd ? Family::odd_p_minus : Family::even_p_minus}) {
          const FamilyId id{fam, p, n};
          CAPTURE(p);
          CAPTURE(n);
          CHECK(alexander_closed_form(id) == alexander_torus(id.params()));
        }
      }
      CHECK(alexander_closed_form({Family::five_plus_two, 5, n}) == alexander_torus({5, 5 * n + 2}));
      CHECK(alexander_closed_form({Family::five_plus_three, 5, n}) == alexander_torus({5, 5 * n + 3}));
    }
  }
}
