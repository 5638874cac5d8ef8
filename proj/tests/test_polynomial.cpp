#include <catch2/catch_amalgamated.hpp>

#include "gparking/bivariate_polynomial.hpp"

using gparking::BivariatePolynomial;

TEST_CASE("term bookkeeping drops zeros", "[polynomial]") {
    BivariatePolynomial p;
    CHECK(p.is_zero());
    p.add_term(1, 0, 2);
    p.add_term(1, 0, -2);
    CHECK(p.is_zero());
    p.add_term(0, 0, 5);
    CHECK(p.coefficient(0, 0) == 5);
    CHECK_THROWS_AS(p.add_term(-1, 0, 1), std::invalid_argument);
}

TEST_CASE("arithmetic is exact", "[polynomial]") {
    auto x = BivariatePolynomial::monomial(1, 0);
    auto y = BivariatePolynomial::monomial(0, 1);
    auto p = x * x + x + y;  // triangle polynomial
    CHECK(p.coefficient(2, 0) == 1);
    CHECK(p.coefficient(1, 0) == 1);
    CHECK(p.coefficient(0, 1) == 1);
    CHECK(p.evaluate(1, 1) == 3);
    CHECK(p.evaluate(2, -1) == 5);
    CHECK(p.x_degree() == 2);
    CHECK(p.y_degree() == 1);

    auto q = p * BivariatePolynomial::constant(3);
    CHECK(q.coefficient(2, 0) == 3);
    CHECK(poly_eval(q, 1, 1) == 9);

    // constants evaluate to themselves everywhere
    CHECK(poly_eval(BivariatePolynomial::constant(1), 5, -7) == 1);
    CHECK(poly_eval(BivariatePolynomial::constant(1), 0, 0) == 1);
}

TEST_CASE("printing follows x descending then y ascending", "[polynomial]") {
    BivariatePolynomial p;
    p.add_term(3, 0, 1);
    p.add_term(2, 0, 2);
    p.add_term(1, 0, 1);
    p.add_term(1, 1, 2);
    p.add_term(0, 1, 1);
    p.add_term(0, 2, 1);
    CHECK(p.to_string() == "x^3+2*x^2+x+2*x*y+y+y^2");

    CHECK(BivariatePolynomial::constant(1).to_string() == "1");
    CHECK(BivariatePolynomial().to_string() == "0");
    CHECK(BivariatePolynomial::monomial(0, 3, -2).to_string() == "-2*y^3");

    BivariatePolynomial mixed;
    mixed.add_term(1, 0, 1);
    mixed.add_term(0, 0, -4);
    CHECK(mixed.to_string() == "x-4");
}
