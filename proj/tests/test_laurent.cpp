#include "doctest.h"
#include "turaev/laurent.hpp"

using turaev::LaurentPolynomial;
using turaev::parse_laurent;

TEST_SUITE("laurent") {
  TEST_CASE("normalization strips zero ends") {
    const LaurentPolynomial p(-3, {0, 0, 2, 0, -1, 0});
    CHECK(p.min_exponent() == -1);
    CHECK(p.max_exponent() == 1);
    CHECK(p.coefficients() == std::vector<std::int64_t>{2, 0, -1});
    CHECK(LaurentPolynomial(5, {0, 0}).is_zero());
    CHECK(LaurentPolynomial(5, {0, 0}) == LaurentPolynomial());
  }

  TEST_CASE("from_terms sums repeated exponents") {
    const auto p = LaurentPolynomial::from_terms({{2, 1}, {-1, 3}, {2, -1}, {0, 4}});
    CHECK(p == LaurentPolynomial::from_terms({{-1, 3}, {0, 4}}));
    CHECK(p.term_count() == 2);
    CHECK(p.coeff(7) == 0);
  }

  TEST_CASE("to_string and parse") {
    const auto p = parse_laurent("t^{-6}-t^{-5}+t^{-2}-1+t^2-t^5+t^6");
    CHECK(to_string(p) == "t^{-6}-t^{-5}+t^{-2}-1+t^2-t^5+t^6");
    CHECK(to_string(LaurentPolynomial()) == "0");
    CHECK(to_string(LaurentPolynomial::from_terms({{1, -3}, {12, 2}})) == "-3t+2t^{12}");
    CHECK(parse_laurent("2*t^3 - t + 5") == LaurentPolynomial::from_terms({{0, 5}, {1, -1}, {3, 2}}));
    CHECK(parse_laurent("t^{-1} − 1") == LaurentPolynomial::from_terms({{-1, 1}, {0, -1}}));
    CHECK_THROWS_AS(parse_laurent("t^"), turaev::PolynomialParseError);
    CHECK_THROWS_AS(parse_laurent("3x"), turaev::PolynomialParseError);
  }

  TEST_CASE("arithmetic") {
    const auto a = parse_laurent("t^{-1}+2-t");
    const auto b = parse_laurent("t-1");
    CHECK(a + b == parse_laurent("t^{-1}+1"));
    CHECK(a - a == LaurentPolynomial());
    CHECK(a * b == parse_laurent("-t^{-1}-1+3t-t^2"));
    CHECK(-b == parse_laurent("1-t"));
    CHECK(a.shifted(3) == parse_laurent("t^2+2t^3-t^4"));
  }

  TEST_CASE("exact division") {
    using L = LaurentPolynomial;
    // (t^6-1)/(t^2-1) = t^4+t^2+1 goes through the binomial kernel.
    CHECK(exact_div(L::binomial(6), L::binomial(2)) == parse_laurent("1+t^2+t^4"));
    // Negated binomial 1 - t^3.
    CHECK(exact_div(L::binomial(9), -L::binomial(3)) == parse_laurent("-1-t^3-t^6"));
    // General long division.
    const auto d = parse_laurent("2t^{-1}+3-t^2");
    const auto q = parse_laurent("t^{-4}-7t+5t^3");
    CHECK(exact_div(d * q, d) == q);
    CHECK(exact_div(q.shifted(-2), L::monomial(-2)) == q);
    CHECK(exact_div(L::constant(6) * q, L::constant(-3)) == L::constant(-2) * q);
    CHECK(exact_div(L(), d) == L());
  }

  TEST_CASE("exact division rejects remainders") {
    using L = LaurentPolynomial;
    CHECK_THROWS_AS(exact_div(L::binomial(5), L::binomial(2)), turaev::NonExactDivision);
    CHECK_THROWS_AS(exact_div(parse_laurent("1+t"), L::constant(2)), turaev::NonExactDivision);
    CHECK_THROWS_AS(exact_div(L::constant(1), parse_laurent("1+t")), turaev::NonExactDivision);
    CHECK_THROWS_AS(exact_div(L::constant(1), L()), std::invalid_argument);
  }

  TEST_CASE("palindromic") {
    CHECK(is_palindromic(parse_laurent("t^{-2}-1+t^2")));
    CHECK_FALSE(is_palindromic(parse_laurent("t^{-2}-1+t")));
    CHECK_FALSE(is_palindromic(parse_laurent("1+t")));
    CHECK(is_palindromic(LaurentPolynomial::constant(1)));
  }
}
